//! Python bindings. Heavy results cross the boundary as JSON strings in the
//! same schemas the command-line tool prints.

use gagola_core::camina;
use gagola_core::chartable;
use gagola_core::field::{self, FieldElement};
use gagola_core::group::{self, DEFAULT_CAP};
use gagola_core::numtheory;
use gagola_core::spec::{self, SpecGroup};
use gagola_core::verify::{self, VerifyOptions};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An element of GF(p^n), written like `0x5@GF(2^3,0xB)`.
#[pyclass(name = "FieldElement", module = "gagola", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFieldElement(FieldElement);

#[pymethods]
impl PyFieldElement {
    /// `FieldElement(p, n, value)` uses the default modulus for GF(p^n).
    #[new]
    fn new(p: u64, n: u32, value: u64) -> PyResult<Self> {
        let f = field::create_field(p, n, None).map_err(value_err)?;
        FieldElement::new(&f, value).map(Self).map_err(value_err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_err)
    }

    #[getter]
    fn value(&self) -> u64 {
        self.0.value()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(value_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(Self).map_err(value_err)
    }

    fn __pow__(&self, k: i64, _modulo: Option<u64>) -> PyResult<Self> {
        self.0.power(k).map(Self).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(Self).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn frobenius(&self, h: u32) -> Self {
        Self(self.0.frobenius_power(h))
    }

    fn order(&self) -> PyResult<u64> {
        self.0.multiplicative_order().map_err(value_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        self.0.value()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FieldElement('{}')", self.0)
    }
}

/// A materialized group from a spec such as `heis:q=3`.
#[pyclass(name = "Group", module = "gagola", frozen)]
struct PyGroup(SpecGroup);

#[pymethods]
impl PyGroup {
    #[new]
    #[pyo3(signature = (spec, cap=None))]
    fn new(spec: &str, cap: Option<usize>) -> PyResult<Self> {
        spec::parse_group(spec, cap.unwrap_or(DEFAULT_CAP)).map(Self).map_err(value_err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.group.order()
    }

    #[getter]
    fn label(&self) -> String {
        self.0.group.label().to_string()
    }

    fn is_abelian(&self) -> bool {
        self.0.group.is_abelian()
    }

    fn exponent(&self) -> u64 {
        self.0.group.exponent()
    }

    fn num_classes(&self) -> usize {
        self.0.group.classes().len()
    }

    /// Orders of the normal subgroups, sorted.
    fn normal_subgroup_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = group::normal_subgroups(&self.0.group).iter().map(|n| n.order()).collect();
        v.sort_unstable();
        v
    }

    /// `charTable/1` JSON.
    fn character_table(&self) -> PyResult<String> {
        let t = chartable::character_table(&self.0.group).map_err(value_err)?;
        Ok(t.to_json().to_string())
    }

    /// `pairCert/1` JSON for the designated subgroup, or for every minimal
    /// normal subgroup when the family has none.
    fn certify(&self) -> PyResult<Vec<String>> {
        let g = &self.0.group;
        let targets = match &self.0.designated {
            Some(n) => vec![n.clone()],
            None => group::minimal_normal_subgroups(g),
        };
        targets
            .iter()
            .map(|n| camina::is_gagola_pair(g, n).map(|c| c.to_json().to_string()).map_err(value_err))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Group('{}', order={})", self.0.spec, self.0.group.order())
    }
}

/// Run a verification suite and return the `report/1` JSON.
#[pyfunction]
#[pyo3(signature = (suite, family=None, q=None, n=None, h=None, full_aut=false, cap=None))]
fn run_suite(
    py: Python<'_>,
    suite: &str,
    family: Option<String>,
    q: Option<Vec<u64>>,
    n: Option<u32>,
    h: Option<u32>,
    full_aut: bool,
    cap: Option<usize>,
) -> PyResult<String> {
    let opts = VerifyOptions { cap: cap.unwrap_or(DEFAULT_CAP), family, q: q.unwrap_or_default(), n, h, full_aut };
    let report = py.detach(|| verify::run_suite(suite, &opts)).map_err(value_err)?;
    Ok(report.to_json().to_string())
}

#[pyfunction]
fn numcond_solvable(h: u64, d: u32) -> PyResult<bool> {
    numtheory::numcond_solvable(h, d).map_err(value_err)
}

/// The smallest Zsigmondy prime of `p^a - 1`, or None.
#[pyfunction]
fn zsigmondy(p: u64, a: u32) -> PyResult<Option<u64>> {
    numtheory::zsigmondy(p, a).map_err(value_err)
}

#[pyfunction]
fn factorize(n: u64) -> Vec<(u64, u32)> {
    numtheory::factorize(n)
}

#[pymodule]
fn gagola(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyFieldElement>()?;
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(numcond_solvable, m)?)?;
    m.add_function(wrap_pyfunction!(zsigmondy, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    Ok(())
}

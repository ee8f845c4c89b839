//! Exact character tables by Dixon's method.
//!
//! Class-sum structure constants give commuting matrices whose common
//! eigenvectors over GF(p) are the central characters. Each is turned into a
//! character mod p, and the eigenvalue multiplicities of every class
//! representative are recovered by a discrete Fourier inversion over a
//! primitive e-th root of unity mod p, which lifts the values exactly.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::CyclotomicInteger;
use crate::field::create_field;
use crate::group::{is_normal, FiniteGroup, Subgroup};
use crate::linalg::Mat;
use crate::numtheory::{self, mul_mod, pow_mod};

pub const TABLE_CAP: usize = 4096;
pub const EXPONENT_CAP: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharTableError {
    #[error("group order {order} exceeds the character-table cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("group exponent {0} exceeds {EXPONENT_CAP}")]
    ExponentTooLarge(u64),
    #[error("no suitable prime below 2^31")]
    PrimeSearchExceeded,
    #[error("lift inconsistent: {0}")]
    LiftInconsistent(String),
    #[error("found {0} characters vanishing on all but two classes")]
    MultipleGagolaCharacters(usize),
    #[error("group is abelian")]
    AbelianGroup,
}

pub type Result<T> = std::result::Result<T, CharTableError>;

/// `a[i][j][k] = #{x ∈ Cᵢ : x⁻¹·gₖ ∈ Cⱼ}` for the class representative `gₖ`.
pub fn class_constants(g: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let ct = g.classes();
    let r = ct.len();
    let per_k: Vec<Vec<Vec<u64>>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let z = ct.reps()[k];
            let mut a = vec![vec![0u64; r]; r];
            for x in g.ids() {
                let i = ct.class_of(x);
                let j = ct.class_of(g.mul(g.inv(x), z));
                a[i][j] += 1;
            }
            a
        })
        .collect();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| per_k[k][i][j]).collect()).collect()).collect()
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌊√n⌋`.
pub fn dixon_prime_for(order: u64, exponent: u64) -> Result<u64> {
    let bound = 2 * isqrt(order);
    let mut p = (bound / exponent) * exponent + 1;
    while p <= bound {
        p += exponent;
    }
    while p < 1 << 31 {
        if numtheory::is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(CharTableError::PrimeSearchExceeded)
}

pub fn dixon_prime(g: &FiniteGroup) -> Result<u64> {
    dixon_prime_for(g.order() as u64, g.exponent())
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn primitive_root(p: u64) -> u64 {
    let primes = numtheory::prime_divisors(p - 1);
    (2..p).find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub label: String,
    pub order: usize,
    pub exponent: u64,
    pub dixon_prime: u64,
    pub class_reps: Vec<u32>,
    pub class_sizes: Vec<usize>,
    pub rep_orders: Vec<u32>,
    pub rep_words: Vec<String>,
    pub inverse_class: Vec<usize>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<CyclotomicInteger>>,
}

/// Common eigenvectors of commuting matrices acting on column vectors,
/// splitting subspaces with the matrices in the given order.
fn common_eigenvectors(mats: &[Mat], dim: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let f = create_field(p, 1, None).expect("p is prime");
    let mut spaces: Vec<Mat> = vec![Mat::identity(dim)];
    for m in mats {
        if spaces.iter().all(|s| s.rows == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            let d = space.rows;
            if d == 1 {
                next.push(space);
                continue;
            }
            let pivots: Vec<usize> =
                (0..d).map(|r| (0..dim).find(|&c| space.get(r, c) != 0).expect("rref rows are nonzero")).collect();
            // restricted[s][r]: coordinate along basis vector s of the image of basis vector r
            let mut restricted = Mat::zeros(d, d);
            for r in 0..d {
                let b = space.row(r);
                for (s, &pc) in pivots.iter().enumerate() {
                    let mut acc = 0u64;
                    for (k, &bk) in b.iter().enumerate() {
                        if bk != 0 {
                            acc = (acc + mul_mod(m.get(pc, k), bk, p)) % p;
                        }
                    }
                    restricted.set(s, r, acc);
                }
            }
            let eigen: Vec<Vec<Vec<u64>>> = (0..p)
                .into_par_iter()
                .map(|lambda| {
                    let mut a = restricted.clone();
                    for i in 0..d {
                        a.set(i, i, (a.get(i, i) + p - lambda) % p);
                    }
                    a.nullspace(&f)
                })
                .filter(|ns| !ns.is_empty())
                .collect();
            let total: usize = eigen.iter().map(|ns| ns.len()).sum();
            if total != d {
                return Err(CharTableError::LiftInconsistent(format!(
                    "class matrix not diagonalizable on a {d}-dimensional subspace"
                )));
            }
            for ns in eigen {
                let mut sub = Mat::zeros(ns.len(), dim);
                for (i, coords) in ns.iter().enumerate() {
                    for (r, &c) in coords.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for k in 0..dim {
                            let v = (sub.get(i, k) + mul_mod(c, space.get(r, k), p)) % p;
                            sub.set(i, k, v);
                        }
                    }
                }
                sub.rref(&f);
                next.push(sub);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.rows != 1) {
        return Err(CharTableError::LiftInconsistent("class matrices do not separate characters".into()));
    }
    Ok(spaces.into_iter().map(|s| s.data).collect())
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    character_table_with_cap(g, TABLE_CAP)
}

pub fn character_table_with_cap(g: &FiniteGroup, cap: usize) -> Result<CharacterTable> {
    let order = g.order();
    if order > cap {
        return Err(CharTableError::CapExceeded { order, cap });
    }
    let exponent = g.exponent();
    if exponent > EXPONENT_CAP {
        return Err(CharTableError::ExponentTooLarge(exponent));
    }
    let p = dixon_prime(g)?;
    let ct = g.classes();
    let r = ct.len();
    let sizes: Vec<u64> = ct.sizes().iter().map(|&s| s as u64).collect();

    let vectors = if r == 1 {
        vec![vec![1u64]]
    } else {
        let a = class_constants(g);
        let mats: Vec<Mat> = (1..r)
            .map(|i| {
                let mut m = Mat::zeros(r, r);
                for j in 0..r {
                    for k in 0..r {
                        m.set(j, k, a[i][j][k] % p);
                    }
                }
                m
            })
            .collect();
        common_eigenvectors(&mats, r, p)?
    };

    let e = exponent as u32;
    let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
    let e_inv = pow_mod(exponent % p, p - 2, p);
    let power_class: Vec<Vec<usize>> =
        (0..r).map(|k| (0..exponent).map(|l| ct.power_class(g, k, l as i64)).collect()).collect();
    let max_degree = isqrt(order as u64);

    let mut rows: Vec<(u64, Vec<CyclotomicInteger>)> = vectors
        .par_iter()
        .map(|v| -> Result<(u64, Vec<CyclotomicInteger>)> {
            let inv0 = pow_mod(v[0], p - 2, p);
            let w: Vec<u64> = v.iter().map(|&x| mul_mod(x, inv0, p)).collect();
            let mut s = 0u64;
            for k in 0..r {
                let term = mul_mod(mul_mod(w[k], w[ct.inverse_class(k)], p), pow_mod(sizes[k] % p, p - 2, p), p);
                s = (s + term) % p;
            }
            if s == 0 {
                return Err(CharTableError::LiftInconsistent("degree normalizer vanished".into()));
            }
            let target = mul_mod(order as u64 % p, pow_mod(s, p - 2, p), p);
            let d = (1..=max_degree)
                .find(|&d| mul_mod(d, d, p) == target)
                .ok_or_else(|| CharTableError::LiftInconsistent("no degree matches".into()))?;
            let chi: Vec<u64> =
                (0..r).map(|k| mul_mod(mul_mod(w[k], d, p), pow_mod(sizes[k] % p, p - 2, p), p)).collect();
            let mut values = Vec::with_capacity(r);
            for k in 0..r {
                let mut mult = vec![0i64; exponent as usize];
                let mut total = 0u64;
                for (j, slot) in mult.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for l in 0..exponent {
                        let root = pow_mod(z, (exponent - (j as u64 * l) % exponent) % exponent, p);
                        acc = (acc + mul_mod(chi[power_class[k][l as usize]], root, p)) % p;
                    }
                    let m = mul_mod(acc, e_inv, p);
                    if m > d {
                        return Err(CharTableError::LiftInconsistent(format!(
                            "multiplicity {m} exceeds degree {d} at class {k}"
                        )));
                    }
                    total += m;
                    *slot = m as i64;
                }
                if total != d {
                    return Err(CharTableError::LiftInconsistent(format!(
                        "multiplicities at class {k} sum to {total}, not {d}"
                    )));
                }
                values.push(CyclotomicInteger::from_multiplicities(e, mult));
            }
            Ok((d, values))
        })
        .collect::<Result<Vec<_>>>()?;

    rows.sort_by(|(d1, v1), (d2, v2)| {
        d1.cmp(d2).then_with(|| {
            let k1: Vec<&[i64]> = v1.iter().map(|c| c.coefficients()).collect();
            let k2: Vec<&[i64]> = v2.iter().map(|c| c.coefficients()).collect();
            k2.cmp(&k1)
        })
    });

    Ok(CharacterTable {
        label: g.label().to_string(),
        order,
        exponent,
        dixon_prime: p,
        class_reps: ct.reps().to_vec(),
        class_sizes: ct.sizes().to_vec(),
        rep_orders: (0..r).map(|c| ct.rep_order(c)).collect(),
        rep_words: ct.reps().iter().map(|&x| g.word_string(x)).collect(),
        inverse_class: (0..r).map(|c| ct.inverse_class(c)).collect(),
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        values: rows.into_iter().map(|(_, v)| v).collect(),
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub sum_of_squares_ok: bool,
    pub rows_ok: bool,
    pub columns_ok: bool,
    pub square: bool,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.sum_of_squares_ok && self.rows_ok && self.columns_ok && self.square
    }
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// Exact checks of `Σ d² = |G|` and both orthogonality relations.
    pub fn check_orthogonality(&self) -> OrthogonalityReport {
        let r = self.num_classes();
        let e = self.exponent as u32;
        let square = self.values.len() == r && self.values.iter().all(|row| row.len() == r);
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        let rows_ok = (0..self.values.len()).into_par_iter().all(|i| {
            (i..self.values.len()).all(|j| {
                let mut acc = CyclotomicInteger::zero(e);
                for k in 0..r {
                    let t = self.values[i][k].mul(&self.values[j][k].conj());
                    acc = acc.add(&t.scale(self.class_sizes[k] as i64));
                }
                let expected = if i == j { self.order as i64 } else { 0 };
                acc.as_integer() == Some(expected)
            })
        });
        let columns_ok = (0..r).into_par_iter().all(|k| {
            (k..r).all(|l| {
                let mut acc = CyclotomicInteger::zero(e);
                for row in &self.values {
                    acc = acc.add(&row[k].mul(&row[l].conj()));
                }
                let expected = if k == l { (self.order / self.class_sizes[k]) as i64 } else { 0 };
                acc.as_integer() == Some(expected)
            })
        });
        OrthogonalityReport { sum_of_squares_ok: sum_sq == self.order as u64, rows_ok, columns_ok, square }
    }

    /// Classes where row `i` is nonzero, by the exact test.
    pub fn support(&self, i: usize) -> Vec<usize> {
        (0..self.num_classes()).filter(|&k| !self.values[i][k].is_zero()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = (0..self.num_classes())
            .map(|k| {
                serde_json::json!({
                    "rep": self.rep_words[k],
                    "size": self.class_sizes[k],
                    "order": self.rep_orders[k],
                })
            })
            .collect();
        let values: Vec<Vec<serde_json::Value>> = self
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| serde_json::json!({ "mult": v.coefficients(), "text": v.to_string() }))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "schema": "charTable/1",
            "group": self.label,
            "order": self.order,
            "exponent": self.exponent,
            "dixonPrime": self.dixon_prime,
            "degrees": self.degrees,
            "classes": classes,
            "values": values,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "group {}  order {}  classes {}  exponent {}  prime {}\n",
            self.label,
            self.order,
            self.num_classes(),
            self.exponent,
            self.dixon_prime
        ));
        let cells: Vec<Vec<String>> = self.values.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect();
        let sizes: Vec<String> = self.class_sizes.iter().map(|s| s.to_string()).collect();
        let orders: Vec<String> = self.rep_orders.iter().map(|s| s.to_string()).collect();
        let width: Vec<usize> = (0..self.num_classes())
            .map(|k| cells.iter().map(|r| r[k].len()).chain([sizes[k].len(), orders[k].len()]).max().unwrap_or(1))
            .collect();
        let line = |head: &str, row: &[String]| {
            let body: Vec<String> = row.iter().zip(&width).map(|(c, &w)| format!("{c:>w$}")).collect();
            format!("{head:<7} {}\n", body.join("  "))
        };
        out.push_str(&line("sizes", &sizes));
        out.push_str(&line("orders", &orders));
        for (i, row) in cells.iter().enumerate() {
            out.push_str(&line(&format!("X.{}", i + 1), row));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct GagolaCharacter {
    pub index: usize,
    pub degree: u64,
    pub n: Subgroup,
    /// Always the identity class and one other.
    pub classes: [usize; 2],
}

/// The nonlinear irreducible character vanishing on all but two classes,
/// with the normal subgroup where it does not vanish.
pub fn find_gagola_character(g: &FiniteGroup, table: &CharacterTable) -> Result<Option<GagolaCharacter>> {
    let ct = g.classes();
    let mut found = Vec::new();
    for i in 0..table.values.len() {
        if table.degrees[i] == 1 {
            continue;
        }
        let support = table.support(i);
        if support.len() != 2 {
            continue;
        }
        let mut ids: Vec<u32> = Vec::new();
        for &k in &support {
            ids.extend_from_slice(ct.members(k));
        }
        let Ok(n) = g.subgroup_from_ids(ids) else {
            continue;
        };
        if n.order() == g.order() || !is_normal(g, &n) {
            continue;
        }
        found.push(GagolaCharacter { index: i, degree: table.degrees[i], n, classes: [support[0], support[1]] });
    }
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        k => Err(CharTableError::MultipleGagolaCharacters(k)),
    }
}

/// `(d, e)` with `|G| = d(d+e)` for each distinct nonlinear degree `d`.
pub fn degree_d_and_e(table: &CharacterTable) -> Result<Vec<(u64, u64)>> {
    if table.is_abelian() {
        return Err(CharTableError::AbelianGroup);
    }
    let mut degrees: Vec<u64> = table.degrees.iter().copied().filter(|&d| d > 1).collect();
    degrees.dedup();
    degrees
        .into_iter()
        .map(|d| {
            let n = table.order as u64;
            let e = n / d - d;
            if n % d != 0 || e < 1 {
                return Err(CharTableError::LiftInconsistent(format!("degree {d} does not divide into |G|")));
            }
            Ok((d, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, generate_group, GroupElement};

    fn perm_group(m: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
        let gens: Vec<GroupElement> = gens
            .iter()
            .map(|cycles| {
                let cs: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
                GroupElement::perm_from_cycles(m, &cs).unwrap()
            })
            .collect();
        generate_group(&gens, 10_000).unwrap()
    }

    fn q8() -> FiniteGroup {
        perm_group(8, &[&[&[1, 2, 4, 7], &[3, 6, 8, 5]], &[&[1, 3, 4, 8], &[2, 5, 7, 6]]])
    }

    #[test]
    fn primes() {
        assert_eq!(dixon_prime_for(2, 2).unwrap(), 3);
        assert_eq!(dixon_prime_for(6, 6).unwrap(), 7);
        assert_eq!(dixon_prime_for(54, 6).unwrap(), 19);
    }

    #[test]
    fn s3_constants() {
        let g = perm_group(3, &[&[&[1, 2, 3]], &[&[1, 2]]]);
        let a = class_constants(&g);
        let ct = g.classes();
        let t = (0..ct.len()).find(|&c| ct.size(c) == 3).unwrap();
        assert_eq!(a[t][t][0], 3);
        // identity row
        for j in 0..ct.len() {
            for k in 0..ct.len() {
                assert_eq!(a[0][j][k], if j == k { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn c2_table() {
        let g = perm_group(2, &[&[&[1, 2]]]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1, 1]);
        let ints: Vec<Vec<i64>> =
            t.values.iter().map(|r| r.iter().map(|v| v.as_integer().unwrap()).collect()).collect();
        assert_eq!(ints, vec![vec![1, 1], vec![1, -1]]);
        assert!(t.check_orthogonality().holds());
    }

    #[test]
    fn q8_table() {
        let g = q8();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        let last: Vec<i64> = t.values[4].iter().map(|v| v.as_integer().unwrap()).collect();
        assert_eq!(last, vec![2, -2, 0, 0, 0]);
        assert!(t.check_orthogonality().holds());
        let gag = find_gagola_character(&g, &t).unwrap().unwrap();
        assert_eq!(gag.degree, 2);
        assert_eq!(gag.n, center(&g));
        assert_eq!(degree_d_and_e(&t).unwrap(), vec![(2, 2)]);
    }

    #[test]
    fn abelian_has_no_gagola() {
        let g = perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]]);
        let t = character_table(&g).unwrap();
        assert!(find_gagola_character(&g, &t).unwrap().is_none());
        assert_eq!(degree_d_and_e(&t), Err(CharTableError::AbelianGroup));
        assert!(t.check_orthogonality().holds());
        // principal character first
        assert!(t.values[0].iter().all(|v| v.as_integer() == Some(1)));
    }

    #[test]
    fn s4_and_s5() {
        let s4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        let t = character_table(&s4).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);
        assert!(t.check_orthogonality().holds());
        let s5 = perm_group(5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2]]]);
        let t = character_table(&s5).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 4, 4, 5, 5, 6]);
        assert!(t.check_orthogonality().holds());
    }
}

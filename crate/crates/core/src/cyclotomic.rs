//! Elements of ℤ[ζₑ] stored as coefficient vectors over the powers
//! `1, ζ, …, ζ^(e−1)`. The representation is not unique; equality and the
//! zero test reduce modulo the cyclotomic polynomial Φₑ.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::numtheory::cyclotomic_polynomial;

fn phi(e: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cache lock");
    guard.entry(e).or_insert_with(|| Arc::new(cyclotomic_polynomial(e as u64))).clone()
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicInteger {
    e: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(e: u32) -> Self {
        assert!(e >= 1);
        CyclotomicInteger { e, coeffs: vec![0; e as usize] }
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = n;
        z
    }

    /// `ζₑ^k`.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[k.rem_euclid(e as i64) as usize] = 1;
        z
    }

    /// `Σ m_k ζₑ^k`.
    pub fn from_multiplicities(e: u32, m: Vec<i64>) -> Self {
        assert_eq!(m.len(), e as usize);
        CyclotomicInteger { e, coeffs: m }
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.e, other.e);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInteger { e: self.e, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.e, other.e);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicInteger { e: self.e, coeffs }
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicInteger { e: self.e, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.e, other.e);
        let e = self.e as usize;
        let mut out = vec![0i64; e];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[(i + j) % e] += a * b;
                }
            }
        }
        CyclotomicInteger { e: self.e, coeffs: out }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^(−k)`.
    pub fn conj(&self) -> Self {
        let e = self.e as usize;
        let mut out = vec![0i64; e];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(e - k) % e] += c;
        }
        CyclotomicInteger { e: self.e, coeffs: out }
    }

    /// Image under `ζ ↦ z` in ℤ/p.
    pub fn reduce_mod_p(&self, z: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        let mut zk = 1u64;
        for &c in &self.coeffs {
            let cm = c.rem_euclid(p as i64) as u64;
            acc = (acc + crate::numtheory::mul_mod(cm, zk, p)) % p;
            zk = crate::numtheory::mul_mod(zk, z, p);
        }
        acc
    }

    /// Remainder modulo Φₑ; a canonical form with fewer than φ(e) terms.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = phi(self.e);
        let dn = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for i in (dn..r.len()).rev() {
            let c = r[i];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    r[i - dn + j] -= c * pj;
                }
            }
        }
        r.truncate(dn);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r.is_empty() {
            return Some(0);
        }
        r[1..].iter().all(|&c| c == 0).then_some(r[0])
    }
}

/// Integers print plainly; other values as sums of `E(e)^k` terms.
impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let term = match k {
                0 => format!("{mag}"),
                _ if mag == 1 => format!("E({})^{}", self.e, k),
                _ => format!("{mag}*E({})^{}", self.e, k),
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_cube_roots_is_zero() {
        let z = CyclotomicInteger::from_multiplicities(3, vec![1, 1, 1]);
        assert!(z.is_zero());
        assert_eq!(z.as_integer(), Some(0));
        let w = CyclotomicInteger::from_multiplicities(6, vec![0, 1, 0, 0, 0, 1]);
        // ζ₆ + ζ₆⁻¹ = 1
        assert_eq!(w.as_integer(), Some(1));
    }

    #[test]
    fn minus_one_in_even_exponent() {
        let m = CyclotomicInteger::root_of_unity(4, 2);
        assert_eq!(m.as_integer(), Some(-1));
        assert_eq!(m.to_string(), "-1");
        let i = CyclotomicInteger::root_of_unity(4, 1);
        assert!(i.as_integer().is_none());
        assert_eq!(i.mul(&i).as_integer(), Some(-1));
        assert_eq!(i.mul(&i.conj()).as_integer(), Some(1));
    }

    #[test]
    fn mod_p_image() {
        // ζ₃ ↦ 2 in GF(7)
        let z = CyclotomicInteger::root_of_unity(3, 1);
        assert_eq!(z.reduce_mod_p(2, 7), 2);
        let s = CyclotomicInteger::from_multiplicities(3, vec![1, 1, 1]);
        assert_eq!(s.reduce_mod_p(2, 7), 0);
    }
}

//! Finite fields GF(pⁿ).
//!
//! Elements are packed into a single `u64`: the coefficient vector
//! `c₀ + c₁x + … + c_{n−1}x^{n−1}` is stored as the base-`p` integer
//! `Σ cᵢ pⁱ`. For `p = 2` that is exactly the little-endian bit vector, so
//! addition is XOR and multiplication is a carry-less product reduced by the
//! modulus. Fields of order at most 2¹⁶ also carry exp/log tables.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("reduction polynomial {0} is reducible")]
    ReduciblePolynomial(String),
    #[error("polynomial must be monic of degree {expected}, got {got:?}")]
    BadPolynomial { expected: u32, got: Vec<u64> },
    #[error("field size out of range: {0}")]
    TooLarge(String),
    #[error("operands live in different fields")]
    MixedFields,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("value {0} is not an element of the field")]
    NotAnElement(u64),
    #[error("cannot parse field element: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, FieldError>;

/// A finite field with a verified irreducible reduction polynomial.
#[derive(Debug)]
pub struct FieldDescriptor {
    characteristic: u64,
    degree: u32,
    /// Monic modulus, coefficients lowest degree first, length `degree + 1`.
    modulus: Vec<u64>,
    cardinality: u64,
    /// Modulus as a bit vector including the leading term, `p = 2` only.
    modulus_bits: u64,
    tables: Option<LogTables>,
}

#[derive(Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub type Field = Arc<FieldDescriptor>;

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.characteristic == other.characteristic && self.modulus == other.modulus
    }
}
impl Eq for FieldDescriptor {}

/// Build GF(pⁿ). Without an explicit polynomial, the smallest monic
/// irreducible one in packed order is chosen.
pub fn create_field(p: u64, n: u32, poly: Option<&[u64]>) -> Result<Field> {
    if !numtheory::is_prime(p) {
        return Err(FieldError::NonPrimeCharacteristic(p));
    }
    if n == 0 {
        return Err(FieldError::TooLarge("degree must be at least 1".into()));
    }
    if p == 2 && n > 63 {
        return Err(FieldError::TooLarge(format!("GF(2^{n}) exceeds one machine word")));
    }
    if p >= 1 << 31 {
        return Err(FieldError::TooLarge(format!("characteristic {p} ≥ 2^31")));
    }
    let cardinality = p
        .checked_pow(n)
        .filter(|q| *q <= 1u64 << 63)
        .ok_or_else(|| FieldError::TooLarge(format!("{p}^{n} exceeds 2^63")))?;

    let modulus = match poly {
        Some(coeffs) => {
            let mut c = coeffs.to_vec();
            while c.len() > 1 && c.last() == Some(&0) {
                c.pop();
            }
            if c.len() != n as usize + 1 || c[n as usize] != 1 || c.iter().any(|&x| x >= p) {
                return Err(FieldError::BadPolynomial { expected: n, got: coeffs.to_vec() });
            }
            if !poly::is_irreducible(&c, p) {
                return Err(FieldError::ReduciblePolynomial(poly::render(&c)));
            }
            c
        }
        None => smallest_irreducible(p, n),
    };
    let modulus_bits = if p == 2 {
        modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
    } else {
        0
    };
    let mut field = FieldDescriptor {
        characteristic: p,
        degree: n,
        modulus,
        cardinality,
        modulus_bits,
        tables: None,
    };
    if cardinality <= 1 << 16 {
        field.tables = Some(field.build_tables());
    }
    Ok(Arc::new(field))
}

/// GF(2ⁿ) from a modulus written as a bit mask including the leading term,
/// e.g. `0xB` for x³ + x + 1.
pub fn create_binary_field(n: u32, modulus_bits: u64) -> Result<Field> {
    let coeffs: Vec<u64> = (0..=n).map(|i| (modulus_bits >> i) & 1).collect();
    if n > 63 || modulus_bits >> n != 1 {
        return Err(FieldError::BadPolynomial { expected: n, got: coeffs });
    }
    create_field(2, n, Some(&coeffs))
}

fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    // Monic polynomials of degree n in increasing packed order of their lower
    // coefficients.
    let lower = p.pow(n);
    for code in 0..lower {
        let mut c = poly::unpack(code, p, n as usize);
        c.push(1);
        if poly::is_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// Packed form of the modulus: the bit mask for `p = 2`, otherwise `Σ cᵢ pⁱ`
    /// over all coefficients including the leading one.
    pub fn modulus_code(&self) -> u128 {
        let p = self.characteristic as u128;
        self.modulus.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128)
    }

    pub fn is_element(&self, a: u64) -> bool {
        a < self.cardinality
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.cardinality
    }

    pub fn nonzero_elements(&self) -> std::ops::Range<u64> {
        1..self.cardinality
    }

    fn coeffs(&self, a: u64) -> Vec<u64> {
        poly::unpack(a, self.characteristic, self.degree as usize)
    }

    fn pack(&self, c: &[u64]) -> u64 {
        poly::pack(c, self.characteristic)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.characteristic == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return (a + b) % self.characteristic;
        }
        let p = self.characteristic;
        let (mut x, mut y, mut out, mut place) = (a, b, 0u64, 1u64);
        for _ in 0..self.degree {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.characteristic == 2 {
            return a;
        }
        let p = self.characteristic;
        if self.degree == 1 {
            return (p - a % p) % p;
        }
        let (mut x, mut out, mut place) = (a, 0u64, 1u64);
        for _ in 0..self.degree {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let q1 = (self.cardinality - 1) as usize;
            let s = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[if s >= q1 { s - q1 } else { s }] as u64;
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.characteristic == 2 {
            return gf2_mulmod(a, b, self.modulus_bits, self.degree);
        }
        if self.degree == 1 {
            return numtheory::mul_mod(a, b, self.characteristic);
        }
        let p = self.characteristic;
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), p);
        self.pack(&poly::rem(&prod, &self.modulus, p))
    }

    /// `a^k` for nonnegative `k`.
    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let q1 = self.cardinality - 1;
            let e = (t.log[a as usize] as u128 * (k % q1) as u128 % q1 as u128) as usize;
            return t.exp[e] as u64;
        }
        let mut base = a;
        let mut acc = 1u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^k` for any integer `k`; negative powers go through the inverse.
    pub fn pow_signed(&self, a: u64, k: i64) -> Result<u64> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.cardinality - 2))
    }

    /// `a^(p^h)`, the `h`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: u64, h: u32) -> u64 {
        let h = h % self.degree;
        let mut x = a;
        for _ in 0..h {
            x = self.pow(x, self.characteristic);
        }
        x
    }

    /// Least `k ≥ 1` with `a^k = 1`, found by stripping prime factors of `pⁿ − 1`.
    pub fn multiplicative_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(FieldError::ZeroElement);
        }
        let group_order = self.cardinality - 1;
        let mut order = group_order;
        for (q, _) in numtheory::factorize(group_order) {
            while order % q == 0 && self.pow(a, order / q) == 1 {
                order /= q;
            }
        }
        Ok(order)
    }

    /// Smallest element (in packed order) generating the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        if let Some(t) = &self.tables {
            return t.exp[1.min(t.exp.len() - 1)] as u64;
        }
        self.find_primitive()
    }

    fn find_primitive(&self) -> u64 {
        if self.cardinality == 2 {
            return 1;
        }
        (1..self.cardinality)
            .find(|&a| self.multiplicative_order(a) == Ok(self.cardinality - 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let q1 = (self.cardinality - 1) as usize;
        let g = self.find_primitive();
        let mut exp = vec![0u32; q1.max(1)];
        let mut log = vec![0u32; self.cardinality as usize];
        let mut x = 1u64;
        for (i, slot) in exp.iter_mut().enumerate().take(q1) {
            *slot = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, g);
        }
        if q1 == 1 {
            exp[0] = 1;
        }
        LogTables { exp, log }
    }

    /// The element `x` (class of the indeterminate), or the generator `1` in a prime field.
    pub fn generator_x(&self) -> u64 {
        if self.degree == 1 {
            self.primitive_element()
        } else {
            self.characteristic
        }
    }

    /// Additive basis `1, x, …, x^{n−1}` in packed form.
    pub fn basis(&self) -> Vec<u64> {
        (0..self.degree).map(|i| self.characteristic.pow(i)).collect()
    }

    /// Coefficient vector of `a` over the prime field.
    pub fn coordinates(&self, a: u64) -> Vec<u64> {
        self.coeffs(a)
    }

    pub fn from_coordinates(&self, c: &[u64]) -> u64 {
        self.pack(c)
    }

    /// Element from an integer (its image under ℤ → GF(p)).
    pub fn from_int(&self, k: i64) -> u64 {
        k.rem_euclid(self.characteristic as i64) as u64
    }

    pub fn element(self: &Arc<Self>, value: u64) -> Result<FieldElement> {
        FieldElement::new(self, value)
    }

    pub fn label(&self) -> String {
        format!("GF({}^{},0x{:X})", self.characteristic, self.degree, self.modulus_code())
    }
}

fn gf2_mulmod(a: u64, b: u64, modulus: u64, n: u32) -> u64 {
    let mut prod: u128 = 0;
    let (a, mut b) = (a as u128, b);
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            prod ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    let m = modulus as u128;
    let mut deg = 127 - prod.leading_zeros() as i32;
    while prod != 0 && deg >= n as i32 {
        prod ^= m << (deg - n as i32);
        deg = if prod == 0 { -1 } else { 127 - prod.leading_zeros() as i32 };
    }
    prod as u64
}

/// An element bound to its field, for API boundaries that need the field
/// check. Hot loops work on raw packed values through [`FieldDescriptor`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl FieldElement {
    pub fn new(field: &Field, value: u64) -> Result<Self> {
        if !field.is_element(value) {
            return Err(FieldError::NotAnElement(value));
        }
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self { field: self.field.clone(), value: self.field.add(self.value, other.value) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self { field: self.field.clone(), value: self.field.mul(self.value, other.value) })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { field: self.field.clone(), value: self.field.inv(self.value)? })
    }

    pub fn power(&self, k: i64) -> Result<Self> {
        Ok(Self { field: self.field.clone(), value: self.field.pow_signed(self.value, k)? })
    }

    pub fn frobenius_power(&self, h: u32) -> Self {
        Self { field: self.field.clone(), value: self.field.frobenius(self.value, h) }
    }

    pub fn multiplicative_order(&self) -> Result<u64> {
        self.field.multiplicative_order(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}
impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `0x5@GF(2^3,0xB)`: packed value in hex, then the field with its modulus.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:X}@{}", self.value, self.field.label())
    }
}

impl FromStr for FieldElement {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || FieldError::Parse(s.to_string());
        let (value, field) = s.trim().split_once('@').ok_or_else(bad)?;
        let value = parse_hex(value).ok_or_else(bad)? as u64;
        let inner = field
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (pn, modulus) = inner.split_once(',').ok_or_else(bad)?;
        let (p, n) = pn.split_once('^').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let code = parse_hex(modulus).ok_or_else(bad)?;
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut rest = code;
        for _ in 0..=n {
            coeffs.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        if rest != 0 {
            return Err(bad());
        }
        let field = create_field(p, n, Some(&coeffs))?;
        FieldElement::new(&field, value)
    }
}

fn parse_hex(s: &str) -> Option<u128> {
    let s = s.trim();
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X"))?;
    u128::from_str_radix(digits, 16).ok()
}

/// Dense polynomial helpers over GF(p), coefficients lowest degree first.
pub(crate) mod poly {
    use crate::numtheory::{mul_mod, pow_mod};

    pub fn unpack(mut code: u64, p: u64, len: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(code % p);
            code /= p;
        }
        out
    }

    pub fn pack(c: &[u64], p: u64) -> u64 {
        c.iter().rev().fold(0u64, |acc, &x| acc * p + x)
    }

    pub fn trim(mut c: Vec<u64>) -> Vec<u64> {
        while c.last() == Some(&0) {
            c.pop();
        }
        c
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        trim(out)
    }

    /// Remainder modulo `m`, zero-padded to `deg m` coefficients.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let dm = m.len() - 1;
        let lead_inv = pow_mod(m[dm], p - 2, p);
        let mut r = trim(a.to_vec());
        while r.len() > dm {
            let top = r.len() - 1;
            let c = mul_mod(r[top], lead_inv, p);
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - dm + j;
                r[idx] = (r[idx] + p - mul_mod(c, mj, p)) % p;
            }
            r = trim(r);
        }
        r.resize(dm, 0);
        r
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + p - y) % p;
        }
        trim(out)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = trim(rem(&a, &b, p));
            a = b;
            b = r;
        }
        a
    }

    fn powmod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        rem(&acc, m, p)
    }

    /// Rabin's test: `x^(pⁿ) ≡ x (mod f)` and `gcd(x^(p^(n/r)) − x, f) = 1`
    /// for every prime `r | n`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let n = (f.len() - 1) as u64;
        if n == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        // frob[k] = x^(p^k) mod f
        let mut frob = vec![rem(&x, &f, p)];
        for k in 1..=n {
            let prev = &frob[(k - 1) as usize];
            frob.push(powmod_poly(prev, p, &f, p));
        }
        let xr = rem(&x, &f, p);
        if trim(frob[n as usize].clone()) != trim(xr.clone()) {
            return false;
        }
        for r in crate::numtheory::prime_divisors(n) {
            let diff = sub(&frob[(n / r) as usize], &xr, p);
            let g = gcd(&f, &diff, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

    pub fn render(c: &[u64]) -> String {
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| match (i, x) {
                (0, _) => format!("{x}"),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{x}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{x}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Reducibility by exhaustive division against every monic polynomial of
    /// degree 1..=n/2.
    fn reducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            for code in 0..p.pow(d as u32) {
                let mut g = poly::unpack(code, p, d);
                g.push(1);
                if poly::trim(poly::rem(f, &g, p)).is_empty() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn gf2_degree_one() {
        let f = create_field(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.cardinality(), 2);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf8_default_polynomial() {
        let f = create_field(2, 3, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f.label(), "GF(2^3,0xB)");
        assert!(!reducible_by_trial_division(f.modulus(), 2));
    }

    #[test]
    fn reducible_polynomial_rejected() {
        let err = create_field(2, 3, Some(&[1, 0, 0, 1])).unwrap_err();
        assert!(matches!(err, FieldError::ReduciblePolynomial(_)));
        assert!(matches!(create_field(4, 2, None), Err(FieldError::NonPrimeCharacteristic(4))));
    }

    #[test]
    fn rabin_matches_trial_division() {
        for (p, max_n) in [(2u64, 7u32), (3, 4), (5, 3)] {
            for n in 1..=max_n {
                for code in 0..p.pow(n) {
                    let mut f = poly::unpack(code, p, n as usize);
                    f.push(1);
                    let rabin = poly::is_irreducible(&f, p);
                    let trial = n == 1 || !reducible_by_trial_division(&f, p);
                    assert_eq!(rabin, trial, "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn gf8_cube_of_generator() {
        let f = create_binary_field(3, 0xB).unwrap();
        let g = f.generator_x();
        assert_eq!(g, 0b010);
        let g2 = f.mul(g, g);
        assert_eq!(g2, 0b100);
        // g³ = g + 1
        assert_eq!(f.mul(g, g2), 0b011);
        assert_eq!(f.mul_slow(g, g2), 0b011);
    }

    #[test]
    fn inverse_of_zero() {
        let f = create_field(2, 3, None).unwrap();
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
        let zero = f.element(0).unwrap();
        assert!(zero.inverse().is_err());
        assert_eq!(zero.multiplicative_order(), Err(FieldError::ZeroElement));
    }

    #[test]
    fn frobenius_examples() {
        let f = create_binary_field(3, 0xB).unwrap();
        let g = f.generator_x();
        assert_eq!(f.frobenius(g, 0), g);
        assert_eq!(f.frobenius(g, 3), g);
        assert_eq!(f.frobenius(g, 1), f.mul(g, g));
    }

    #[test]
    fn orders() {
        let f8 = create_field(2, 3, None).unwrap();
        assert_eq!(f8.multiplicative_order(1).unwrap(), 1);
        let g = f8.primitive_element();
        // exhaustive: the least k with g^k = 1
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = f8.mul(x, g);
            k += 1;
        }
        assert_eq!(k, 7);
        assert_eq!(f8.multiplicative_order(g).unwrap(), 7);

        let f16 = create_field(2, 4, None).unwrap();
        let g = f16.primitive_element();
        let g3 = f16.pow(g, 3);
        let mut x = g3;
        let mut k = 1;
        while x != 1 {
            x = f16.mul(x, g3);
            k += 1;
        }
        assert_eq!(k, 5);
        assert_eq!(f16.multiplicative_order(g3).unwrap(), 5);
    }

    #[test]
    fn fermat_exhaustive() {
        for (p, n) in [(2u64, 1u32), (2, 4), (2, 8), (2, 12), (3, 2), (3, 5), (5, 3), (7, 1), (2, 16)] {
            let f = create_field(p, n, None).unwrap();
            let q1 = f.cardinality() - 1;
            for a in f.nonzero_elements() {
                assert_eq!(f.pow(a, q1), 1);
            }
        }
    }

    #[test]
    fn tables_agree_with_slow_path() {
        for (p, n) in [(2u64, 6u32), (3, 3), (5, 2), (7, 2)] {
            let f = create_field(p, n, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), if a == 0 || b == 0 { 0 } else { f.mul_slow(a, b) });
                }
            }
        }
    }

    #[test]
    fn large_binary_field_without_tables() {
        let f = create_field(2, 31, None).unwrap();
        assert!(f.tables.is_none());
        let g = f.primitive_element();
        assert_eq!(f.multiplicative_order(g).unwrap(), (1 << 31) - 1);
        let x = 0x1234_5678 & ((1 << 31) - 1);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
    }

    #[test]
    fn a_theta_a_is_bijective() {
        for n in 1..=12u32 {
            let f = create_field(2, n, None).unwrap();
            for h in 1..n {
                let order = n / crate::numtheory::gcd(n as u64, h as u64) as u32;
                if order % 2 == 0 || order == 1 {
                    continue;
                }
                let mut seen = vec![false; f.cardinality() as usize];
                for a in f.elements() {
                    seen[f.mul(a, f.frobenius(a, h)) as usize] = true;
                }
                assert!(seen.iter().all(|&s| s), "n={n} h={h}");
            }
        }
    }

    #[test]
    fn notation_round_trip() {
        let f = create_binary_field(3, 0xB).unwrap();
        let e = f.element(5).unwrap();
        assert_eq!(e.to_string(), "0x5@GF(2^3,0xB)");
        let back: FieldElement = "0x5@GF(2^3,0xB)".parse().unwrap();
        assert_eq!(back, e);
        let f9 = create_field(3, 2, None).unwrap();
        let e = f9.element(7).unwrap();
        let back: FieldElement = e.to_string().parse().unwrap();
        assert_eq!(back, e);
        assert!("0x9@GF(2^3,0xB)".parse::<FieldElement>().is_err());
    }

    #[test]
    fn mixed_fields() {
        let a = create_field(2, 3, None).unwrap().element(1).unwrap();
        let b = create_field(2, 4, None).unwrap().element(1).unwrap();
        assert_eq!(a.add(&b), Err(FieldError::MixedFields));
    }

    proptest! {
        #[test]
        fn frobenius_is_a_ring_map(n in 2u32..10, h in 0u32..10, a in any::<u64>(), b in any::<u64>()) {
            let f = create_field(2, n, None).unwrap();
            let (a, b) = (a % f.cardinality(), b % f.cardinality());
            prop_assert_eq!(f.frobenius(f.add(a, b), h), f.add(f.frobenius(a, h), f.frobenius(b, h)));
            prop_assert_eq!(f.frobenius(f.mul(a, b), h), f.mul(f.frobenius(a, h), f.frobenius(b, h)));
            prop_assert_eq!(f.frobenius(a, n), a);
        }

        #[test]
        fn odd_field_axioms(a in 0u64..125, b in 0u64..125, c in 0u64..125) {
            let f = create_field(5, 3, None).unwrap();
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                prop_assert_eq!(f.pow_signed(a, -3).unwrap(), f.inv(f.pow(a, 3)).unwrap());
            }
        }
    }
}

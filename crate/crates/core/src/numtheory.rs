//! Integer arithmetic behind the p-part, Zsigmondy, 3-adic and congruence lemmas.
//!
//! Everything works on machine integers. Products that could leave 64 bits go
//! through `u128` intermediates or checked arithmetic and surface as
//! [`NumberTheoryError::Overflow`].

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("{k} does not divide {n}")]
    NotDivisor { n: u64, k: u64 },
}

pub type Result<T> = std::result::Result<T, NumberTheoryError>;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
///
/// Small factors are stripped by trial division; whatever survives is split
/// with Pollard's rho and certified with Miller–Rabin.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes: Vec<u64> = Vec::new();
    if n <= 1 {
        return Vec::new();
    }
    let mut p = 2u64;
    while p < 1000 && p * p <= n {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            primes.push(m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Least `k ≥ 1` with `a^k ≡ 1 (mod m)`; `None` when `gcd(a, m) ≠ 1`.
pub fn multiplicative_order_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let lambda = carmichael(m);
    let mut order = lambda;
    for (p, _) in factorize(lambda) {
        while order % p == 0 && pow_mod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Some(order)
}

fn carmichael(m: u64) -> u64 {
    let mut acc = 1u64;
    for (p, e) in factorize(m) {
        let pe1 = p.pow(e - 1);
        let lam = if p == 2 && e >= 3 { pe1 / 2 } else { pe1 * (p - 1) };
        acc = lcm(acc, lam);
    }
    acc
}

/// Largest power of the prime `p` dividing `m`.
pub fn p_part(m: u64, p: u64) -> Result<u64> {
    if m == 0 {
        return Err(NumberTheoryError::OutOfRange("p_part of 0".into()));
    }
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    let mut m = m;
    let mut part = 1u64;
    while m % p == 0 {
        m /= p;
        part *= p;
    }
    Ok(part)
}

/// Exponent `k` with `p^k` the `p`-part of `m`.
pub fn valuation(mut m: u64, p: u64) -> u32 {
    let mut k = 0;
    while m != 0 && m % p == 0 {
        m /= p;
        k += 1;
    }
    k
}

/// `p`-part of `base^exp − 1` computed without forming the power.
///
/// Finds the largest `k` with `base^exp ≡ 1 (mod p^k)`, keeping every modulus
/// inside 64 bits.
pub fn p_part_of_power_minus_one(base: u64, exp: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if exp == 0 || base <= 1 {
        return Err(NumberTheoryError::OutOfRange("base^exp − 1 must be positive".into()));
    }
    let mut part = 1u64;
    loop {
        let next = part
            .checked_mul(p)
            .ok_or(NumberTheoryError::Overflow("p-part of p^n − 1"))?;
        if next > (1u64 << 62) {
            return Err(NumberTheoryError::Overflow("p-part of p^n − 1"));
        }
        if pow_mod(base, exp, next) == 1 % next {
            part = next;
        } else {
            return Ok(part);
        }
    }
}

/// Smallest Zsigmondy prime of `p^a − 1`: a prime dividing `p^a − 1` but no
/// `p^b − 1` with `b < a`.
///
/// Returns `Ok(None)` exactly in the exceptional cases (and for `p = 2, a = 1`).
pub fn zsigmondy(p: u64, a: u32) -> Result<Option<u64>> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if a == 0 {
        return Err(NumberTheoryError::OutOfRange("a must be positive".into()));
    }
    let pa = p
        .checked_pow(a)
        .filter(|v| *v <= 1u64 << 63)
        .ok_or(NumberTheoryError::Overflow("p^a"))?;
    let value = pa - 1;
    for (q, _) in factorize(value) {
        // ord_q(p) = a means q divides no smaller p^b − 1.
        if multiplicative_order_mod(p, q) == Some(a as u64) {
            debug_assert!((1..a).all(|b| (p.pow(b) - 1) % q != 0));
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    // x^n − 1 divided by Φ_d for each proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        poly = exact_div_monic(&poly, &phi_d);
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Existence of a Zsigmondy prime for `p^a − 1` without factoring it.
///
/// A prime dividing `Φ_a(p)` that does not divide `a` is exactly a Zsigmondy
/// prime, so a prime exists iff `Φ_a(p)` with every prime factor of `a`
/// removed is larger than 1. `Φ_a(p)` is evaluated in checked 128-bit
/// arithmetic, which covers all `p ≤ 127`, `a ≤ 20`.
pub fn has_zsigmondy_prime(p: u64, a: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if a == 0 {
        return Err(NumberTheoryError::OutOfRange("a must be positive".into()));
    }
    let phi = cyclotomic_polynomial(a as u64);
    let mut acc: i128 = 0;
    for &c in phi.iter().rev() {
        acc = acc
            .checked_mul(p as i128)
            .and_then(|v| v.checked_add(c as i128))
            .ok_or(NumberTheoryError::Overflow("cyclotomic value"))?;
    }
    let mut rest = acc;
    for q in prime_divisors(a as u64) {
        while rest % q as i128 == 0 {
            rest /= q as i128;
        }
    }
    Ok(rest > 1)
}

pub fn is_mersenne_prime(p: u64) -> bool {
    is_prime(p) && (p + 1).is_power_of_two()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOneVerdict {
    pub a: u32,
    pub residue_mod_3_a1: u64,
    pub residue_mod_3_a2: u64,
    pub congruent: bool,
    pub not_congruent_higher: bool,
}

impl LemmaOneVerdict {
    pub fn holds(&self) -> bool {
        self.congruent && self.not_congruent_higher
    }
}

/// `2^(3^a) ≡ −1 (mod 3^(a+1))` and `2^(3^a) ≢ −1 (mod 3^(a+2))`.
pub fn lemma_one_check(a: u32) -> Result<LemmaOneVerdict> {
    let exp = 3u64.checked_pow(a).ok_or(NumberTheoryError::Overflow("3^a"))?;
    let m1 = 3u64.checked_pow(a + 1).ok_or(NumberTheoryError::Overflow("3^(a+1)"))?;
    let m2 = 3u64.checked_pow(a + 2).ok_or(NumberTheoryError::Overflow("3^(a+2)"))?;
    let r1 = pow_mod(2, exp, m1);
    let r2 = pow_mod(2, exp, m2);
    Ok(LemmaOneVerdict {
        a,
        residue_mod_3_a1: r1,
        residue_mod_3_a2: r2,
        congruent: r1 == m1 - 1,
        not_congruent_higher: r2 != m2 - 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneaVerdict {
    pub n: u32,
    pub a: u32,
    pub three_part: u64,
    pub expected: u64,
    /// `2^n mod 3^(a+1)`, expected `−1` for odd `n` and `1` for even `n`.
    pub sign_residue: u64,
    pub sign_ok: bool,
}

impl OneaVerdict {
    pub fn holds(&self) -> bool {
        self.three_part == self.expected && self.sign_ok
    }
}

/// The 3-part of `(2^n − 1)(2^n + 1)` is `3^(a+1)` where `3^a` is the 3-part of `n`.
pub fn onea_three_part(n: u32) -> Result<OneaVerdict> {
    if n == 0 || n > 31 {
        return Err(NumberTheoryError::OutOfRange(format!("n = {n} outside [1, 31]")));
    }
    let a = valuation(n as u64, 3);
    let two_n = 1u64 << n;
    let product = (two_n - 1)
        .checked_mul(two_n + 1)
        .ok_or(NumberTheoryError::Overflow("(2^n − 1)(2^n + 1)"))?;
    let three_part = p_part(product, 3)?;
    let modulus = 3u64.pow(a + 1);
    let residue = two_n % modulus;
    let want = if n % 2 == 1 { modulus - 1 } else { 1 % modulus };
    Ok(OneaVerdict {
        n,
        a,
        three_part,
        expected: modulus,
        sign_residue: residue,
        sign_ok: residue == want,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum NorCondVerdict {
    HypothesisNotMet { reason: String },
    Checked { a: u32, m: u64, lhs: u64, rhs: u64, holds: bool },
}

/// `(p^n − 1)_q = q^a (p^m − 1)_q` when `n = q^a m`, `q ∤ m`, `a ≥ 1` and `q² | p^m − 1`.
pub fn norcond_check(p: u64, q: u64, n: u64) -> Result<NorCondVerdict> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(NumberTheoryError::NotPrime(q));
    }
    if n == 0 {
        return Err(NumberTheoryError::OutOfRange("n must be positive".into()));
    }
    let a = valuation(n, q);
    let m = n / q.pow(a);
    if a == 0 {
        return Ok(NorCondVerdict::HypothesisNotMet { reason: format!("{q} does not divide {n}") });
    }
    let qsq = q * q;
    if pow_mod(p, m, qsq) != 1 % qsq {
        return Ok(NorCondVerdict::HypothesisNotMet {
            reason: format!("{qsq} does not divide {p}^{m} − 1"),
        });
    }
    let lhs = p_part_of_power_minus_one(p, n, q)?;
    let rhs = q
        .pow(a)
        .checked_mul(p_part_of_power_minus_one(p, m, q)?)
        .ok_or(NumberTheoryError::Overflow("q^a (p^m − 1)_q"))?;
    Ok(NorCondVerdict::Checked { a, m, lhs, rhs, holds: lhs == rhs })
}

/// Whether `2^h + 1 ≡ 2^j (mod 2^d − 1)` for some `j ∈ [0, d)`.
///
/// Uses the reduction `2^h ≡ 2^(h mod d)`, since 2 has order `d` modulo `2^d − 1`.
pub fn numcond_solvable(h: u64, d: u32) -> Result<bool> {
    if d == 0 || d > 62 {
        return Err(NumberTheoryError::OutOfRange(format!("d = {d} outside [1, 62]")));
    }
    let modulus = (1u64 << d) - 1;
    if modulus == 1 {
        return Ok(true);
    }
    let reduced = h % d as u64;
    let lhs = ((1u64 << reduced) + 1) % modulus;
    Ok((0..d).any(|j| (1u64 << j) % modulus == lhs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexEntry {
    pub d: u64,
    /// `numcond_solvable(h mod d, d)` for the Frobenius exponent in use.
    pub numcond_solvable: bool,
}

fn prime_power_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for (p, e) in factorize(n) {
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.push(pk);
        }
    }
    out.sort_unstable();
    out
}

/// Prime powers `d | n` with `d ∤ k`, each tagged with the congruence test for
/// the Frobenius exponent `h = k`.
pub fn nonex_d_values(n: u64, k: u64) -> Result<Vec<NonexEntry>> {
    nonex_d_values_for(n, k, k)
}

/// As [`nonex_d_values`] but with an explicit Frobenius exponent `h`.
pub fn nonex_d_values_for(n: u64, k: u64, h: u64) -> Result<Vec<NonexEntry>> {
    if k == 0 || n == 0 || n % k != 0 {
        return Err(NumberTheoryError::NotDivisor { n, k });
    }
    prime_power_divisors(n)
        .into_iter()
        .filter(|d| k % d != 0)
        .map(|d| {
            let dd = u32::try_from(d).map_err(|_| NumberTheoryError::Overflow("d"))?;
            Ok(NonexEntry { d, numcond_solvable: numcond_solvable(h % d, dd)? })
        })
        .collect()
}

fn as_decimal<S: serde::Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2ThreePart {
    pub n: u32,
    /// Exceeds 64 bits for n > 21, so it serializes as a decimal string.
    #[serde(serialize_with = "as_decimal")]
    pub order: u128,
    pub three_part: u128,
    pub expected: u128,
}

impl Sl2ThreePart {
    pub fn holds(&self) -> bool {
        self.three_part == self.expected
    }
}

/// `|SL₂(2ⁿ)|₃ = 3^(a+1)` where `3^a` is the 3-part of `n`.
///
/// The group order exceeds 64 bits for `n > 21`, so this one lives in `u128`.
pub fn sl2_three_part_check(n: u32) -> Result<Sl2ThreePart> {
    if n == 0 || n > 40 {
        return Err(NumberTheoryError::OutOfRange(format!("n = {n} outside [1, 40]")));
    }
    let q = 1u128 << n;
    let order = (q - 1) * q * (q + 1);
    let mut rest = order;
    let mut three_part = 1u128;
    while rest % 3 == 0 {
        rest /= 3;
        three_part *= 3;
    }
    let a = valuation(n as u64, 3);
    Ok(Sl2ThreePart { n, order, three_part, expected: 3u128.pow(a + 1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn factorization_matches_trial_division() {
        for n in 1..3000u64 {
            assert_eq!(factorize(n), brute_factor(n), "n = {n}");
        }
        assert_eq!(factorize((1 << 63) - 1), vec![(7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1)]);
        assert_eq!(factorize((1 << 61) - 1), vec![((1 << 61) - 1, 1)]);
    }

    #[test]
    fn p_part_examples() {
        assert_eq!(p_part(1, 5).unwrap(), 1);
        assert_eq!(p_part(504, 3).unwrap(), 9);
        assert_eq!(p_part(4095, 3).unwrap(), 9);
        assert!(p_part(10, 4).is_err());
    }

    #[test]
    fn p_part_of_power_agrees_with_direct() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=12u64 {
                let v = p.pow(n as u32) - 1;
                for q in [2u64, 3, 5, 7, 11, 13] {
                    if v == 0 {
                        continue;
                    }
                    assert_eq!(p_part_of_power_minus_one(p, n, q).unwrap(), p_part(v, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn zsigmondy_examples() {
        assert_eq!(zsigmondy(2, 6).unwrap(), None);
        assert_eq!(zsigmondy(7, 2).unwrap(), None);
        assert_eq!(zsigmondy(2, 4).unwrap(), Some(5));
        assert_eq!(zsigmondy(2, 1).unwrap(), None);
        assert_eq!(zsigmondy(3, 1).unwrap(), Some(2));
    }

    #[test]
    fn zsigmondy_prime_is_primitive() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for a in 1..=10u32 {
                if let Some(q) = zsigmondy(p, a).unwrap() {
                    assert_eq!((p.pow(a) - 1) % q, 0);
                    for b in 1..a {
                        assert_ne!((p.pow(b) - 1) % q, 0);
                    }
                }
                assert_eq!(has_zsigmondy_prime(p, a).unwrap(), zsigmondy(p, a).unwrap().is_some());
            }
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        let phi105 = cyclotomic_polynomial(105);
        assert_eq!(phi105.len(), 49);
        assert_eq!(phi105.iter().map(|c| c.abs()).max(), Some(2));
    }

    #[test]
    fn lemma_one_small() {
        let v0 = lemma_one_check(0).unwrap();
        assert_eq!((v0.residue_mod_3_a1, v0.residue_mod_3_a2), (2, 2));
        assert!(v0.holds());
        let v1 = lemma_one_check(1).unwrap();
        assert_eq!((v1.residue_mod_3_a1, v1.residue_mod_3_a2), (8, 8));
        assert!(v1.holds());
        assert!(lemma_one_check(4).unwrap().holds());
    }

    #[test]
    fn onea_examples() {
        let v = onea_three_part(1).unwrap();
        assert_eq!(v.three_part, 3);
        assert!(v.holds());
        let v = onea_three_part(6).unwrap();
        assert_eq!((v.three_part, v.sign_residue), (9, 1));
        let v = onea_three_part(9).unwrap();
        assert_eq!(v.three_part, 27);
    }

    #[test]
    fn norcond_examples() {
        assert!(matches!(norcond_check(2, 3, 18).unwrap(), NorCondVerdict::HypothesisNotMet { .. }));
        assert!(matches!(norcond_check(2, 5, 20).unwrap(), NorCondVerdict::HypothesisNotMet { .. }));
        assert!(matches!(norcond_check(2, 7, 21).unwrap(), NorCondVerdict::HypothesisNotMet { .. }));
        assert!(matches!(norcond_check(7, 3, 9).unwrap(), NorCondVerdict::HypothesisNotMet { .. }));
        match norcond_check(19, 3, 9).unwrap() {
            NorCondVerdict::Checked { a, m, lhs, rhs, holds } => {
                assert_eq!((a, m), (2, 1));
                // 19 − 1 = 18 has 3-part 9; 19^9 − 1 has 3-part 81.
                assert_eq!((lhs, rhs), (81, 81));
                assert!(holds);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn numcond_examples() {
        assert!(numcond_solvable(3, 3).unwrap());
        assert!(numcond_solvable(0, 5).unwrap());
        assert!(!numcond_solvable(1, 3).unwrap());
        assert!(!numcond_solvable(2, 4).unwrap());
    }

    #[test]
    fn numcond_matches_direct_power() {
        for d in 2..=12u32 {
            let m = (1u64 << d) - 1;
            for h in 0..40u64 {
                let lhs = (pow_mod(2, h, m) + 1) % m;
                let direct = (0..64).any(|j| pow_mod(2, j, m) == lhs);
                assert_eq!(numcond_solvable(h, d).unwrap(), direct, "h={h} d={d}");
            }
        }
    }

    #[test]
    fn nonex_examples() {
        let ds = |n, k| nonex_d_values(n, k).unwrap().into_iter().map(|e| e.d).collect::<Vec<_>>();
        assert_eq!(ds(6, 2), vec![3]);
        assert_eq!(ds(12, 4), vec![3]);
        assert_eq!(ds(18, 6), vec![9]);
        assert!(nonex_d_values(6, 4).is_err());
    }

    #[test]
    fn sl2_three_parts() {
        assert_eq!(sl2_three_part_check(1).unwrap().three_part, 3);
        let v = sl2_three_part_check(3).unwrap();
        assert_eq!((v.order, v.three_part), (504, 9));
        assert_eq!(sl2_three_part_check(9).unwrap().three_part, 27);
    }

    #[test]
    fn order_mod() {
        assert_eq!(multiplicative_order_mod(2, 7), Some(3));
        assert_eq!(multiplicative_order_mod(2, 9), Some(6));
        assert_eq!(multiplicative_order_mod(3, 9), None);
    }
}

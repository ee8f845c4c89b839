//! Concrete group families: semilinear groups Γ(V), AGL(1,q), the
//! Heisenberg-type groups of order q³(q−1), SL₂(2ⁿ) and its modules, and
//! small Frobenius complements.

use serde::Serialize;
use thiserror::Error;

use crate::field::{create_field, Field, FieldDescriptor, FieldError};
use crate::group::{
    all_subgroups, centralizer, generate_group, generating_set, is_normal, normalizer, sylow_subgroup,
    FiniteGroup, GroupElement, GroupError, Subgroup,
};
use crate::linalg::{fixed_space_dimension, Mat};
use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("not a Frobenius complement: {0}")]
    NotFrobeniusComplement(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;

/// `(p, k)` with `q = p^k`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match numtheory::factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

fn field_of_order(q: u64) -> Result<Field> {
    let (p, k) = prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
    Ok(create_field(p, k, None)?)
}

fn perm_of(q: u64, f: impl Fn(u64) -> u64) -> GroupElement {
    GroupElement::perm((0..q).map(|x| f(x) as u32).collect()).expect("bijection")
}

/// A group together with a designated normal subgroup.
pub struct Construction {
    pub group: FiniteGroup,
    pub n: Subgroup,
}

/// `x ↦ ax + b` on GF(q), as permutations of the packed field elements.
/// `n` is the translation subgroup.
pub fn agl1(q: u64, cap: usize) -> Result<Construction> {
    let f = field_of_order(q)?;
    let w = f.primitive_element();
    let mut gens = vec![perm_of(q, |x| f.mul(w, x))];
    gens.extend(f.basis().into_iter().map(|b| perm_of(q, |x| f.add(x, b))));
    let g = generate_group(&gens, cap)?.with_label(format!("agl1:q={q}"));
    let ids: Vec<u32> = g
        .ids()
        .filter(|&x| match g.element(x) {
            // a translation moves every point by the same amount
            GroupElement::Perm(img) => {
                let t = img[0] as u64;
                (0..q).all(|v| img[v as usize] as u64 == f.add(v, t))
            }
            _ => false,
        })
        .collect();
    let n = g.subgroup_from_ids(ids)?;
    Ok(Construction { group: g, n })
}

/// Whether `g`, acting on points `0..m`, is sharply 2-transitive.
pub fn is_sharply_two_transitive(g: &FiniteGroup) -> bool {
    let m = match g.element(0) {
        GroupElement::Perm(img) => img.len(),
        _ => return false,
    };
    if g.order() != m * (m - 1) {
        return false;
    }
    let mut seen = vec![false; m * m];
    for x in g.ids() {
        if let GroupElement::Perm(img) = g.element(x) {
            let k = img[0] as usize * m + img[1] as usize;
            if seen[k] {
                return false;
            }
            seen[k] = true;
        }
    }
    true
}

/// Upper unitriangular `[[1,a,c],[0,1,b],[0,0,1]]` over GF(q) extended by
/// `diag(x,1,1)`, which acts as `(a,b,c) ↦ (xa, b, xc)`. `n` is `{(0,0,c)}`.
pub fn heisenberg_gagola(q: u64, cap: usize) -> Result<Construction> {
    let f = field_of_order(q)?;
    let order = q.checked_pow(3).and_then(|c| c.checked_mul(q - 1)).unwrap_or(u64::MAX);
    if order > cap as u64 {
        return Err(GroupError::CapExceeded(cap).into());
    }
    let w = f.primitive_element();
    let unit = |a: u64, b: u64, c: u64| Mat::from_rows(&[vec![1, a, c], vec![0, 1, b], vec![0, 0, 1]]);
    let mut gens = vec![GroupElement::matrix(Mat::from_rows(&[vec![w, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), &f)?];
    for b in f.basis() {
        gens.push(GroupElement::matrix(unit(b, 0, 0), &f)?);
        gens.push(GroupElement::matrix(unit(0, b, 0), &f)?);
    }
    let g = generate_group(&gens, cap)?.with_label(format!("heis:q={q}"));
    let ids: Vec<u32> = g
        .ids()
        .filter(|&x| match g.element(x) {
            GroupElement::Matrix { mat, .. } => {
                (0..3).all(|i| (0..3).all(|j| (i == 0 && j == 2) || mat.get(i, j) == u64::from(i == j)))
            }
            _ => false,
        })
        .collect();
    let n = g.subgroup_from_ids(ids)?;
    Ok(Construction { group: g, n })
}

pub fn sl2_order(q: u64) -> Option<u128> {
    let q = q as u128;
    (q - 1).checked_mul(q)?.checked_mul(q + 1)
}

/// SL₂(q) as 2×2 matrices, generated by a diagonal torus element and the
/// two elementary transvections.
pub fn sl2(q: u64, cap: usize) -> Result<FiniteGroup> {
    if q < 2 || q & (q - 1) != 0 {
        return Err(ConstructionError::Unsupported(format!("q = {q} is not a power of 2")));
    }
    if sl2_order(q).is_none_or(|o| o > cap as u128) {
        return Err(GroupError::CapExceeded(cap).into());
    }
    let f = field_of_order(q)?;
    let w = f.primitive_element();
    let wi = f.inv(w)?;
    let gens = vec![
        GroupElement::matrix(Mat::from_rows(&[vec![w, 0], vec![0, wi]]), &f)?,
        GroupElement::matrix(Mat::from_rows(&[vec![1, 1], vec![0, 1]]), &f)?,
        GroupElement::matrix(Mat::from_rows(&[vec![1, 0], vec![1, 1]]), &f)?,
    ];
    Ok(generate_group(&gens, cap)?.with_label(format!("sl2:q={q}")))
}

/// Γ(V) for V = GF(pⁿ) acting on the points of V, with its two marked
/// subgroups.
pub struct SemilinearGroup {
    pub field: Field,
    pub group: FiniteGroup,
    /// Multiplications `v ↦ λv`.
    pub gamma_o: Subgroup,
    /// Field automorphisms `v ↦ v^(p^i)`.
    pub galois: Subgroup,
}

pub fn semilinear_group(p: u64, n: u32, cap: usize) -> Result<SemilinearGroup> {
    if !numtheory::is_prime(p) {
        return Err(FieldError::NonPrimeCharacteristic(p).into());
    }
    let q = numtheory::checked_pow(p, n).filter(|&q| q <= 1 << 12).ok_or(GroupError::CapExceeded(cap))?;
    let f = create_field(p, n, None)?;
    let w = f.primitive_element();
    let mult = perm_of(q, |x| f.mul(w, x));
    let frob = perm_of(q, |x| f.frobenius(x, 1));
    let g = generate_group(&[mult.clone(), frob.clone()], cap)?.with_label(format!("gamma:p={p};n={n}"));
    let gamma_o = g.subgroup_generated(&[g.id_of(&mult).expect("generator")]);
    let galois = g.subgroup_generated(&[g.id_of(&frob).expect("generator")]);
    Ok(SemilinearGroup { field: f, group: g, gamma_o, galois })
}

impl SemilinearGroup {
    /// `C_Γ(Γ_o) = Γ_o`.
    pub fn centralizer_check(&self) -> bool {
        let gens = generating_set(&self.group, &self.gamma_o);
        let mut c = self.group.whole();
        for x in gens {
            c = c.intersection(&centralizer(&self.group, x));
        }
        c == self.gamma_o
    }

    /// Size of the orbit of the point `1` under `h`.
    pub fn orbit_of_one(&self, h: &Subgroup) -> usize {
        let mut pts: Vec<u32> = h
            .members()
            .iter()
            .map(|&x| match self.group.element(x) {
                GroupElement::Perm(img) => img[1],
                _ => unreachable!(),
            })
            .collect();
        pts.sort_unstable();
        pts.dedup();
        pts.len()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DCheck {
    pub d: u64,
    pub wanted_order: u64,
    pub found: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SingerSubgroup {
    pub order: usize,
    pub generators: Vec<String>,
    pub meet_gamma_o: usize,
    pub checks: Vec<DCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SingerReport {
    pub p: u64,
    pub n: u32,
    pub target_order: u64,
    pub enumerated: bool,
    /// Conjugacy classes of qualifying subgroups, one representative each.
    pub subgroups: Vec<SingerSubgroup>,
    /// Set when enumeration was skipped and the verdict is arithmetic only.
    pub arithmetic_note: Option<String>,
    pub holds: bool,
}

impl SingerReport {
    pub fn is_partial(&self) -> bool {
        !self.enumerated
    }
}

/// Largest |Γ| for which every subgroup is enumerated.
pub const SUBGROUP_ENUMERATION_LIMIT: u64 = 1024;

fn prime_power_divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = numtheory::divisors(n).into_iter().filter(|&d| d > 1 && prime_power(d).is_some()).collect();
    out.sort_unstable();
    out
}

/// Subgroups of Γ(GF(2ⁿ)) of order `target_order` acting transitively on
/// the nonzero vectors, up to conjugacy, each checked for elements of order
/// `2^d − 1` inside `Γ_o` for every prime power `d | n`.
pub fn singer_transitive_subgroups(p: u64, n: u32, target_order: u64, cap: usize) -> Result<SingerReport> {
    if p != 2 || n == 0 || n > 30 {
        return Err(ConstructionError::Unsupported(format!("p = {p}, n = {n}")));
    }
    let q = 1u64 << n;
    if target_order != q - 1 {
        return Err(ConstructionError::Unsupported(format!("target order {target_order} ≠ 2^{n} − 1")));
    }
    let ds = prime_power_divisors(n as u64);
    let gamma_order = (q - 1) * n as u64;
    if q > 1 << 12 || gamma_order > (cap as u64).min(SUBGROUP_ENUMERATION_LIMIT) {
        // |H : H ∩ Γ_o| divides both n and |H|
        let g = numtheory::gcd(q - 1, n as u64);
        let (note, holds) = if g == 1 {
            (format!("gcd(2^{n}−1, {n}) = 1 forces H = Γ_o, cyclic of order {}", q - 1), true)
        } else {
            (format!("gcd(2^{n}−1, {n}) = {g}; no arithmetic verdict"), false)
        };
        let checks = ds.iter().map(|&d| DCheck { d, wanted_order: (1 << d) - 1, found: holds }).collect();
        return Ok(SingerReport {
            p,
            n,
            target_order,
            enumerated: false,
            subgroups: vec![SingerSubgroup { order: (q - 1) as usize, generators: vec![], meet_gamma_o: (q - 1) as usize, checks }],
            arithmetic_note: Some(note),
            holds,
        });
    }
    let gamma = semilinear_group(2, n, cap)?;
    let g = &gamma.group;
    let subs = all_subgroups(g, 100_000)?;
    let mut reps: Vec<Subgroup> = Vec::new();
    for h in subs.into_iter().filter(|h| h.order() as u64 == target_order) {
        if gamma.orbit_of_one(&h) != (q - 1) as usize {
            continue;
        }
        // keep the conjugate whose member list is smallest
        let canonical = g
            .ids()
            .map(|x| {
                let mut m: Vec<u32> = h.members().iter().map(|&y| g.conj(y, x)).collect();
                m.sort_unstable();
                m
            })
            .min()
            .expect("nonempty");
        if canonical == h.members() {
            reps.push(h);
        }
    }
    let subgroups: Vec<SingerSubgroup> = reps
        .iter()
        .map(|h| {
            let meet = h.intersection(&gamma.gamma_o);
            let checks = ds
                .iter()
                .map(|&d| {
                    let wanted = (1u64 << d) - 1;
                    let found = meet.members().iter().any(|&x| g.element_order(x) as u64 == wanted);
                    DCheck { d, wanted_order: wanted, found }
                })
                .collect();
            SingerSubgroup {
                order: h.order(),
                generators: generating_set(g, h).iter().map(|&x| g.word_string(x)).collect(),
                meet_gamma_o: meet.order(),
                checks,
            }
        })
        .collect();
    let holds = !subgroups.is_empty() && subgroups.iter().all(|s| s.checks.iter().all(|c| c.found));
    Ok(SingerReport { p, n, target_order, enumerated: true, subgroups, arithmetic_note: None, holds })
}

/// A representation of a matrix group over GF(2ⁿ) given by a tensor
/// product of Frobenius twists of the natural module: `twists = [0]` is the
/// natural module, `[0, m, 2m]` the twisted tensor module.
#[derive(Debug, Clone)]
pub struct ModuleRep {
    pub field: Field,
    pub twists: Vec<u32>,
    pub dimension: usize,
}

impl ModuleRep {
    pub fn natural(field: &Field) -> Self {
        ModuleRep { field: field.clone(), twists: vec![0], dimension: 2 }
    }

    pub fn act(&self, m: &Mat) -> Mat {
        let f: &FieldDescriptor = &self.field;
        let mut out = Mat::identity(1);
        for &t in &self.twists {
            out = out.kron(&m.map_entries(|x| f.frobenius(x, t)), f);
        }
        out
    }

    fn matrix_of<'a>(g: &'a FiniteGroup, x: u32) -> &'a Mat {
        match g.element(x) {
            GroupElement::Matrix { mat, .. } => mat,
            _ => panic!("module for a non-matrix group"),
        }
    }

    /// `ρ(xy) = ρ(x)ρ(y)` and invertibility, for `x` among the first 64
    /// elements and `y` among the generators.
    pub fn check_homomorphism(&self, g: &FiniteGroup) -> bool {
        let f: &FieldDescriptor = &self.field;
        g.ids().take(64).all(|x| {
            let rx = self.act(Self::matrix_of(g, x));
            rx.determinant(f) != 0
                && g.generator_ids().iter().all(|&s| {
                    self.act(Self::matrix_of(g, g.mul(x, s))) == rx.mul(&self.act(Self::matrix_of(g, s)), f)
                })
        })
    }

    /// Dimension of the subspace fixed by every element of `p`.
    pub fn fixed_space(&self, g: &FiniteGroup, p: &Subgroup) -> usize {
        let mats: Vec<Mat> = generating_set(g, p).iter().map(|&x| self.act(Self::matrix_of(g, x))).collect();
        fixed_space_dimension(&mats, self.dimension, &self.field)
    }
}

/// `W ⊗ W^(c^m) ⊗ W^(c^(2m))` for SL₂(2ⁿ), `m = n/3`.
pub fn twisted_tensor_module(g: &FiniteGroup, n: u32) -> Result<ModuleRep> {
    if n == 0 || n % 3 != 0 {
        return Err(ConstructionError::Unsupported(format!("n = {n} is not a multiple of 3")));
    }
    let field = match g.generators().first() {
        Some(GroupElement::Matrix { field, mat }) if mat.rows == 2 && field.degree() == n && field.characteristic() == 2 => {
            field.clone()
        }
        _ => return Err(ConstructionError::Unsupported("group is not SL₂(2ⁿ)".into())),
    };
    let m = n / 3;
    Ok(ModuleRep { field, twists: vec![0, m, 2 * m], dimension: 8 })
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorReport {
    pub n: u32,
    pub group_order: usize,
    pub sylow3_order: usize,
    pub homomorphism_ok: bool,
    pub fixed_dim_trivial: usize,
    pub fixed_dim_sylow3: usize,
    pub natural_fixed_dim_sylow3: usize,
}

impl TensorReport {
    pub fn holds(&self) -> bool {
        self.homomorphism_ok && self.fixed_dim_trivial == 8 && self.fixed_dim_sylow3 == 0 && self.natural_fixed_dim_sylow3 == 0
    }
}

/// The fixed-space computation on SL₂(8) and its twisted tensor module.
pub fn twisted_tensor_check(n: u32, cap: usize) -> Result<TensorReport> {
    if n != 3 {
        return Err(ConstructionError::Unsupported(format!("materialized only for n = 3, got {n}")));
    }
    let g = sl2(1 << n, cap)?;
    let v = twisted_tensor_module(&g, n)?;
    let p = sylow_subgroup(&g, 3)?;
    let w = ModuleRep::natural(&v.field);
    Ok(TensorReport {
        n,
        group_order: g.order(),
        sylow3_order: p.order(),
        homomorphism_ok: v.check_homomorphism(&g),
        fixed_dim_trivial: v.fixed_space(&g, &g.trivial()),
        fixed_dim_sylow3: v.fixed_space(&g, &p),
        natural_fixed_dim_sylow3: w.fixed_space(&g, &p),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeCheck {
    pub p: u64,
    pub subgroups_of_order_p: usize,
    pub sylow_cyclic: bool,
    pub all_normal: bool,
    pub exception_applies: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FrobeniusReport {
    pub label: String,
    pub order: usize,
    pub z_group: bool,
    pub sylow2_quaternion: bool,
    pub primes: Vec<PrimeCheck>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.primes.iter().all(|c| {
            (!self.z_group || c.subgroups_of_order_p == 1) && (c.all_normal || c.exception_applies)
        })
    }
}

/// `h` must be a permutation group whose point 0 is the origin of the
/// kernel it acts on: every nonidentity element fixes point 0 and nothing
/// else.
pub fn frobenius_complement_checks(h: &FiniteGroup) -> Result<FrobeniusReport> {
    for x in h.ids().skip(1) {
        if let GroupElement::Perm(img) = h.element(x) {
            if img[0] != 0 {
                return Err(ConstructionError::NotFrobeniusComplement(format!("element {x} moves the origin")));
            }
            if let Some(v) = (1..img.len()).find(|&v| img[v] as usize == v) {
                return Err(ConstructionError::NotFrobeniusComplement(format!("element {x} fixes point {v}")));
            }
        } else {
            return Err(ConstructionError::Unsupported("expected a permutation group".into()));
        }
    }
    let order = h.order() as u64;
    let primes = numtheory::prime_divisors(order);
    let sylow2_quaternion = match sylow_subgroup(h, 2) {
        Ok(s) if s.order() == 8 => {
            !is_abelian_subgroup(h, &s) && s.members().iter().filter(|&&x| h.element_order(x) == 2).count() == 1
        }
        _ => false,
    };
    let mut checks = Vec::new();
    let mut z_group = true;
    for &p in &primes {
        let s = sylow_subgroup(h, p)?;
        let cyclic = s.members().iter().any(|&x| h.element_order(x) as usize == s.order());
        z_group &= cyclic;
        let mut subs: Vec<Subgroup> = h
            .ids()
            .filter(|&x| h.element_order(x) as u64 == p)
            .map(|x| h.subgroup_generated(&[x]))
            .collect();
        subs.sort_by(|a, b| a.members().cmp(b.members()));
        subs.dedup();
        checks.push(PrimeCheck {
            p,
            subgroups_of_order_p: subs.len(),
            sylow_cyclic: cyclic,
            all_normal: subs.iter().all(|k| is_normal(h, k)),
            exception_applies: p == 3 && order % 9 != 0 && sylow2_quaternion,
        });
    }
    Ok(FrobeniusReport { label: h.label().to_string(), order: h.order(), z_group, sylow2_quaternion, primes: checks })
}

fn is_abelian_subgroup(g: &FiniteGroup, s: &Subgroup) -> bool {
    let gens = generating_set(g, s);
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Linear action of a 2×2 matrix on GF(p)², points indexed `x + p·y`.
fn linear_perm(f: &FieldDescriptor, m: &Mat) -> GroupElement {
    let p = f.characteristic();
    perm_of(p * p, |v| {
        let (x, y) = (v % p, v / p);
        let nx = f.add(f.mul(m.get(0, 0), x), f.mul(m.get(0, 1), y));
        let ny = f.add(f.mul(m.get(1, 0), x), f.mul(m.get(1, 1), y));
        nx + p * ny
    })
}

/// Three complements with their fixed-point-free actions: C₆ on C₇, Q₈ on
/// C₃², and SL₂(3) on C₅².
pub fn frobenius_instances() -> Result<Vec<FiniteGroup>> {
    let f7 = create_field(7, 1, None)?;
    let c6 = generate_group(&[perm_of(7, |x| f7.mul(3, x))], 100)?.with_label("C6 on C7");

    let f3 = create_field(3, 1, None)?;
    let i3 = Mat::from_rows(&[vec![0, 2], vec![1, 0]]);
    let j3 = Mat::from_rows(&[vec![1, 1], vec![1, 2]]);
    let q8 = generate_group(&[linear_perm(&f3, &i3), linear_perm(&f3, &j3)], 100)?.with_label("Q8 on C3^2");

    // SL₂(3) is the normalizer of a quaternion subgroup inside SL₂(5)
    let f5 = create_field(5, 1, None)?;
    let s = generate_group(
        &[
            GroupElement::matrix(Mat::from_rows(&[vec![1, 1], vec![0, 1]]), &f5)?,
            GroupElement::matrix(Mat::from_rows(&[vec![1, 0], vec![1, 1]]), &f5)?,
        ],
        1000,
    )?;
    let i5 = s.id_of(&GroupElement::matrix(Mat::from_rows(&[vec![0, 4], vec![1, 0]]), &f5)?).expect("in SL2(5)");
    let j5 = s.id_of(&GroupElement::matrix(Mat::from_rows(&[vec![0, 2], vec![2, 0]]), &f5)?).expect("in SL2(5)");
    let nq = normalizer(&s, &s.subgroup_generated(&[i5, j5]));
    let gens: Vec<GroupElement> = generating_set(&s, &nq)
        .iter()
        .map(|&x| match s.element(x) {
            GroupElement::Matrix { mat, .. } => linear_perm(&f5, mat),
            _ => unreachable!(),
        })
        .collect();
    let sl23 = generate_group(&gens, 1000)?.with_label("SL2(3) on C5^2");
    Ok(vec![c6, q8, sl23])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::center;

    #[test]
    fn heisenberg_orders() {
        for (q, order) in [(2u64, 8usize), (3, 54), (4, 192), (5, 500)] {
            let c = heisenberg_gagola(q, 20_000).unwrap();
            assert_eq!(c.group.order(), order);
            assert_eq!(c.n.order() as u64, q);
        }
        assert!(heisenberg_gagola(6, 20_000).is_err());
        assert!(matches!(heisenberg_gagola(9, 1000), Err(ConstructionError::Group(GroupError::CapExceeded(_)))));
    }

    #[test]
    fn agl1_family() {
        let c = agl1(8, 1000).unwrap();
        assert_eq!(c.group.order(), 56);
        assert_eq!(c.n.order(), 8);
        assert!(is_sharply_two_transitive(&c.group));
        assert_eq!(agl1(2, 10).unwrap().group.order(), 2);
        assert_eq!(agl1(9, 1000).unwrap().group.order(), 72);
    }

    #[test]
    fn sl2_orders() {
        for q in [2u64, 4, 8, 16] {
            assert_eq!(sl2(q, 20_000).unwrap().order() as u128, sl2_order(q).unwrap());
        }
        assert_eq!(sl2_order(1 << 30).unwrap(), ((1u128 << 30) - 1) * (1 << 30) * ((1 << 30) + 1));
    }

    #[test]
    fn semilinear_examples() {
        for (p, n, order) in [(2u64, 1u32, 1usize), (2, 4, 60), (3, 2, 16)] {
            let s = semilinear_group(p, n, 20_000).unwrap();
            assert_eq!(s.group.order(), order);
            assert_eq!(s.gamma_o.order() as u64, p.pow(n) - 1);
            assert_eq!(s.galois.order() as u32, n);
            assert!(s.centralizer_check());
        }
    }

    #[test]
    fn singer_n4_and_n9() {
        let r = singer_transitive_subgroups(2, 4, 15, 20_000).unwrap();
        assert!(r.enumerated && r.holds);
        assert_eq!(r.subgroups.len(), 1);
        assert_eq!(r.subgroups[0].meet_gamma_o, 15);
        let r9 = singer_transitive_subgroups(2, 9, 511, 20_000).unwrap();
        assert!(r9.is_partial() && r9.holds);
        assert_eq!(r9.subgroups[0].checks.iter().map(|c| c.wanted_order).collect::<Vec<_>>(), vec![7, 511]);
    }

    #[test]
    fn tensor_fixed_space() {
        let r = twisted_tensor_check(3, 20_000).unwrap();
        assert_eq!(r.group_order, 504);
        assert_eq!(r.sylow3_order, 9);
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn frobenius_examples() {
        let inst = frobenius_instances().unwrap();
        let orders: Vec<usize> = inst.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![6, 8, 24]);
        let reports: Vec<FrobeniusReport> = inst.iter().map(|h| frobenius_complement_checks(h).unwrap()).collect();
        assert!(reports.iter().all(|r| r.holds()));
        assert!(reports[0].z_group);
        assert_eq!(reports[1].primes[0].subgroups_of_order_p, 1);
        let sl = &reports[2];
        assert!(sl.sylow2_quaternion);
        let three = sl.primes.iter().find(|c| c.p == 3).unwrap();
        assert_eq!(three.subgroups_of_order_p, 4);
        assert!(!three.all_normal && three.exception_applies);
        assert_eq!(center(&inst[2]).order(), 2);
    }

    #[test]
    fn not_a_complement() {
        // a transposition fixes points other than 0
        let g = generate_group(&[GroupElement::perm(vec![0, 2, 1, 3]).unwrap()], 10).unwrap();
        assert!(matches!(frobenius_complement_checks(&g), Err(ConstructionError::NotFrobeniusComplement(_))));
    }
}

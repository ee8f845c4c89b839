//! Finite groups materialized from generators.
//!
//! A [`FiniteGroup`] numbers its elements in breadth-first discovery order
//! from the sorted generators, identity first. Right multiplication by each
//! generator is tabulated during the closure, so any product can be formed by
//! walking the stored word of the right factor. Small groups also get a dense
//! multiplication table.

mod auto;
mod classes;
mod element;
mod subgroups;

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

pub use auto::{
    automorphism_from_generator_images, automorphisms, class3_hypotheses, class3_lemma_check, find_class3_sigma, is_automorphism, Automorphism, Class3Report, Class3Witness,
};
pub use classes::{centralizer, center, conjugacy_classes, ClassTable};
pub use element::{Action, GroupElement, SemidirectPair, SuzukiLaw};
pub use subgroups::{
    all_subgroups, derived_subgroup, frattini_subgroup, frattini_via_maximal_subgroups, generating_set,
    is_normal, lower_central_series, minimal_normal_subgroups, nilpotency_class, normal_closure,
    normal_subgroups, normalizer, o_p_subgroup, quotient_group, sylow_subgroup, Quotient,
};

pub const DEFAULT_CAP: usize = 20_000;
const DENSE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("generators are not mutually composable")]
    IncompatibleElements,
    #[error("no generators given")]
    NoGenerators,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{p} does not divide the group order {order}")]
    PNotDividing { p: u64, order: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("subgroup enumeration exceeded {0} subgroups")]
    TooManySubgroups(usize),
}

pub type Result<T> = std::result::Result<T, GroupError>;

#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    parent: Vec<u32>,
    gen_of: Vec<u32>,
    word_start: Vec<u32>,
    word_data: Vec<u32>,
    right: Vec<Vec<u32>>,
    conj: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    dense: Option<Vec<u32>>,
    classes: OnceLock<ClassTable>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `gens`, failing once more than `cap` elements
/// are found.
pub fn generate_group(gens: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    if gens.iter().any(|g| !g.compatible(first)) {
        return Err(GroupError::IncompatibleElements);
    }
    let mut generators = gens.to_vec();
    generators.sort_by_key(|g| g.sort_key());
    generators.dedup();

    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0u32);
    let mut parent = vec![0u32];
    let mut gen_of = vec![u32::MAX];
    let ngen = generators.len();
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); ngen];

    let mut head = 0usize;
    while head < elements.len() {
        let x = elements[head].clone();
        for (s, g) in generators.iter().enumerate() {
            let y = x.mul(g);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elements.len() as u32;
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(y.clone(), id);
                    elements.push(y);
                    parent.push(head as u32);
                    gen_of.push(s as u32);
                    id
                }
            };
            right[s].push(id);
        }
        head += 1;
    }

    let n = elements.len();
    let mut word_start = Vec::with_capacity(n + 1);
    let mut word_data = Vec::new();
    for x in 0..n {
        word_start.push(word_data.len() as u32);
        if x > 0 {
            let p = parent[x] as usize;
            // parent precedes x, so its word is already stored
            let (a, b) = (word_start[p] as usize, word_start[p + 1] as usize);
            word_data.extend_from_within(a..b);
            word_data.push(gen_of[x]);
        }
    }
    word_start.push(word_data.len() as u32);

    let inverse: Vec<u32> = elements.par_iter().map(|e| index[&e.inverse()]).collect();
    let conj: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| {
            let gi = g.inverse();
            elements.par_iter().map(|e| index[&gi.mul(e).mul(g)]).collect()
        })
        .collect();

    let mut group = FiniteGroup {
        label: String::new(),
        generators,
        elements,
        index,
        parent,
        gen_of,
        word_start,
        word_data,
        right,
        conj,
        inverse,
        orders: Vec::new(),
        dense: None,
        classes: OnceLock::new(),
    };
    if n <= DENSE_LIMIT {
        let rows: Vec<Vec<u32>> = (0..n as u32)
            .into_par_iter()
            .map(|x| {
                let mut row = vec![0u32; n];
                row[0] = x;
                for y in 1..n {
                    row[y] = group.right[group.gen_of[y] as usize][row[group.parent[y] as usize] as usize];
                }
                row
            })
            .collect();
        group.dense = Some(rows.concat());
    }
    group.orders = (0..n as u32)
        .into_par_iter()
        .map(|x| {
            let mut k = 1u32;
            let mut z = x;
            while z != 0 {
                z = group.mul(z, x);
                k += 1;
            }
            k
        })
        .collect();
    Ok(group)
}

impl FiniteGroup {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator_ids(&self) -> Vec<u32> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn element(&self, id: u32) -> &GroupElement {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn id_of(&self, g: &GroupElement) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn ids(&self) -> std::ops::Range<u32> {
        0..self.order() as u32
    }

    /// Generator indices whose product, left to right, is the element.
    pub fn word(&self, id: u32) -> &[u32] {
        let a = self.word_start[id as usize] as usize;
        let b = self.word_start[id as usize + 1] as usize;
        &self.word_data[a..b]
    }

    pub fn word_string(&self, id: u32) -> String {
        let w = self.word(id);
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|s| format!("g{s}")).collect::<Vec<_>>().join("*")
    }

    /// `x · g_s` for the `s`-th generator.
    #[inline]
    pub fn right_by_generator(&self, x: u32, s: usize) -> u32 {
        self.right[s][x as usize]
    }

    /// `g_s⁻¹ · x · g_s`.
    #[inline]
    pub fn conj_by_generator(&self, x: u32, s: usize) -> u32 {
        self.conj[s][x as usize]
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if let Some(t) = &self.dense {
            return t[x as usize * self.order() + y as usize];
        }
        let mut z = x;
        for &s in self.word(y) {
            z = self.right[s as usize][z as usize];
        }
        z
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x,y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.inv(x), self.conj(x, y))
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let o = self.orders[x as usize] as i64;
        let k = k.rem_euclid(o);
        let mut acc = 0u32;
        let mut base = x;
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| crate::numtheory::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_ids();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_p_group(&self) -> Option<u64> {
        let n = self.order() as u64;
        if n == 1 {
            return None;
        }
        let primes = crate::numtheory::prime_divisors(n);
        (primes.len() == 1).then(|| primes[0])
    }

    pub fn classes(&self) -> &ClassTable {
        self.classes.get_or_init(|| conjugacy_classes(self))
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut members = vec![0u32];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_ids(self.order(), members)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_ids(self.order(), self.ids().collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_ids(self.order(), vec![0])
    }

    /// Checks that `ids` is closed under products and contains the identity.
    pub fn subgroup_from_ids(&self, ids: Vec<u32>) -> Result<Subgroup> {
        let s = Subgroup::from_ids(self.order(), ids);
        if !s.contains(0) {
            return Err(GroupError::InvalidElement("subset lacks the identity".into()));
        }
        for &a in s.members() {
            for &b in s.members() {
                if !s.contains(self.mul(a, b)) {
                    return Err(GroupError::InvalidElement("subset is not closed".into()));
                }
            }
        }
        Ok(s)
    }
}

/// A subgroup stored as its sorted element ids in the parent group.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: Vec<u64>,
}

impl Subgroup {
    pub(crate) fn from_ids(parent_order: usize, mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        let mut mask = vec![0u64; parent_order.div_ceil(64)];
        for &x in &ids {
            mask[x as usize / 64] |= 1 << (x % 64);
        }
        Subgroup { members: ids, mask }
    }

    pub(crate) fn from_mask(mask: Vec<u64>) -> Self {
        let mut members = Vec::new();
        for (w, &bits) in mask.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let t = b.trailing_zeros();
                members.push((w * 64) as u32 + t);
                b &= b - 1;
            }
        }
        Subgroup { members, mask }
    }

    #[inline]
    pub fn contains(&self, id: u32) -> bool {
        (self.mask[id as usize / 64] >> (id % 64)) & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &[u64] {
        &self.mask
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.mask.iter().zip(&other.mask).map(|(a, b)| a & b).collect())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), &self.members[..self.members.len().min(8)])
    }
}

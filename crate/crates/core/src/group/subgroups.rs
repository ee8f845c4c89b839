use std::collections::HashSet;

use rayon::prelude::*;

use super::{generate_group, FiniteGroup, GroupElement, GroupError, Result, Subgroup};
use crate::numtheory;

pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    let ngen = g.generators().len();
    n.members().iter().all(|&m| (0..ngen).all(|s| n.contains(g.conj_by_generator(m, s))))
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(g: &FiniteGroup, set: &[u32]) -> Subgroup {
    let ngen = g.generators().len();
    let mut seen = vec![false; g.order()];
    let mut closed: Vec<u32> = Vec::new();
    for &x in set {
        if !seen[x as usize] {
            seen[x as usize] = true;
            closed.push(x);
        }
    }
    let mut head = 0;
    while head < closed.len() {
        let y = closed[head];
        for s in 0..ngen {
            let z = g.conj_by_generator(y, s);
            if !seen[z as usize] {
                seen[z as usize] = true;
                closed.push(z);
            }
        }
        head += 1;
    }
    g.subgroup_generated(&closed)
}

/// A small generating set, chosen greedily in id order.
pub fn generating_set(g: &FiniteGroup, h: &Subgroup) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut span = g.trivial();
    for &x in h.members() {
        if !span.contains(x) {
            gens.push(x);
            span = g.subgroup_generated(&gens);
            if span.order() == h.order() {
                break;
            }
        }
    }
    gens
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let gens = g.generator_ids();
    let comms: Vec<u32> =
        gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).map(|(a, b)| g.commutator(a, b)).collect();
    normal_closure(g, &comms)
}

/// `[H, G]` for a normal subgroup `H`.
fn commutator_with_group(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let gens = g.generator_ids();
    let hgens = generating_set(g, h);
    let comms: Vec<u32> =
        hgens.iter().flat_map(|&x| gens.iter().map(move |&s| (x, s))).map(|(x, s)| g.commutator(x, s)).collect();
    normal_closure(g, &comms)
}

/// `G = γ₁ ≥ γ₂ ≥ …` until the series stabilizes.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let next = commutator_with_group(g, series.last().unwrap());
        if next == *series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

/// Nilpotency class, or `None` when the group is not nilpotent.
pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    let series = lower_central_series(g);
    series.last().unwrap().is_trivial().then(|| series.len() - 1)
}

pub fn frattini_subgroup(g: &FiniteGroup) -> Subgroup {
    if g.order() == 1 {
        return g.trivial();
    }
    match g.is_p_group() {
        Some(p) => {
            let mut gens: Vec<u32> = generating_set(g, &derived_subgroup(g));
            let mut powers: Vec<u32> = g.ids().map(|x| g.pow(x, p as i64)).collect();
            powers.sort_unstable();
            powers.dedup();
            gens.extend(powers);
            g.subgroup_generated(&gens)
        }
        None => frattini_via_maximal_subgroups(g).expect("subgroup lattice within limits"),
    }
}

pub fn frattini_via_maximal_subgroups(g: &FiniteGroup) -> Result<Subgroup> {
    if g.order() == 1 {
        return Ok(g.trivial());
    }
    let subs = all_subgroups(g, 200_000)?;
    let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order() < g.order()).collect();
    let maximal: Vec<&Subgroup> = proper
        .iter()
        .copied()
        .filter(|s| !proper.iter().any(|t| t.order() > s.order() && s.is_subset_of(t)))
        .collect();
    Ok(maximal.iter().fold(g.whole(), |acc, m| acc.intersection(m)))
}

/// Every subgroup, by repeatedly joining cyclic subgroups. Sorted by order,
/// then by member ids.
pub fn all_subgroups(g: &FiniteGroup, limit: usize) -> Result<Vec<Subgroup>> {
    let mut cyclic: Vec<(u32, Subgroup)> = Vec::new();
    let mut seen_cyclic: HashSet<Subgroup> = HashSet::new();
    for x in g.ids() {
        let c = g.subgroup_generated(&[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut found: HashSet<Subgroup> = seen_cyclic.clone();
    let mut layer: Vec<(Vec<u32>, Subgroup)> = cyclic.iter().map(|(x, c)| (vec![*x], c.clone())).collect();
    while !layer.is_empty() {
        let candidates: Vec<(Vec<u32>, Subgroup)> = layer
            .par_iter()
            .flat_map_iter(|(gens, h)| {
                cyclic.iter().filter(|(x, _)| !h.contains(*x)).map(move |(x, _)| {
                    let mut gs = gens.clone();
                    gs.push(*x);
                    let k = g.subgroup_generated(&gs);
                    (gs, k)
                })
            })
            .collect();
        let mut next = Vec::new();
        for (gs, k) in candidates {
            if found.insert(k.clone()) {
                if found.len() > limit {
                    return Err(GroupError::TooManySubgroups(limit));
                }
                next.push((gs, k));
            }
        }
        layer = next;
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(out)
}

pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let hgens = generating_set(g, h);
    let ids: Vec<u32> = g
        .ids()
        .into_par_iter()
        .filter(|&x| hgens.iter().all(|&y| h.contains(g.conj(y, x))))
        .collect();
    Subgroup::from_ids(g.order(), ids)
}

/// `G/N` as the permutation action of `G` on the right cosets of `N`.
pub struct Quotient {
    pub group: FiniteGroup,
    /// Quotient id of the image of each element of `G`.
    pub projection: Vec<u32>,
    /// Coset index of each element of `G`; cosets numbered by smallest member.
    pub coset_of: Vec<u32>,
}

pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.ids() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in n.members() {
            coset_of[g.mul(m, x) as usize] = c;
        }
    }
    let gens: Vec<GroupElement> = (0..g.generators().len())
        .map(|s| {
            let images = reps.iter().map(|&r| coset_of[g.right_by_generator(r, s) as usize]).collect();
            GroupElement::Perm(images)
        })
        .collect();
    let q = generate_group(&gens, usize::MAX)?;
    let mut coset_to_q = vec![0u32; reps.len()];
    for qid in q.ids() {
        if let GroupElement::Perm(images) = q.element(qid) {
            coset_to_q[images[0] as usize] = qid;
        }
    }
    let projection = coset_of.iter().map(|&c| coset_to_q[c as usize]).collect();
    let label = format!("{}/N", g.label());
    Ok(Quotient { group: q.with_label(label), projection, coset_of })
}

pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    let order = g.order() as u64;
    if !numtheory::is_prime(p) || order % p != 0 {
        return Err(GroupError::PNotDividing { p, order: g.order() });
    }
    let target = numtheory::p_part(order, p).expect("p is prime") as usize;
    let mut sub = g.trivial();
    let mut gens: Vec<u32> = Vec::new();
    let is_p_power = |k: u32| {
        let mut k = k as u64;
        while k % p == 0 {
            k /= p;
        }
        k == 1
    };
    while sub.order() < target {
        let norm = normalizer(g, &sub);
        let x = norm
            .members()
            .iter()
            .copied()
            .find(|&x| !sub.contains(x) && is_p_power(g.element_order(x)))
            .expect("a non-Sylow p-subgroup has a p-element in its normalizer outside it");
        let mut y = x;
        loop {
            let yp = g.pow(y, p as i64);
            if sub.contains(yp) {
                break;
            }
            y = yp;
        }
        gens.push(y);
        sub = g.subgroup_generated(&gens);
    }
    Ok(sub)
}

/// Largest normal p-subgroup: the union of the classes inside a Sylow p-subgroup.
pub fn o_p_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let Ok(sylow) = sylow_subgroup(g, p) else {
        return g.trivial();
    };
    let ct = g.classes();
    let ids: Vec<u32> = (0..ct.len())
        .filter(|&c| ct.members(c).iter().all(|&x| sylow.contains(x)))
        .flat_map(|c| ct.members(c).iter().copied())
        .collect();
    Subgroup::from_ids(g.order(), ids)
}

fn sort_subgroups(v: &mut [Subgroup]) {
    v.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
}

pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let ct = g.classes();
    let mut closures: Vec<Subgroup> = (1..ct.len()).map(|c| normal_closure(g, &[ct.reps()[c]])).collect();
    sort_subgroups(&mut closures);
    closures.dedup();
    let minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|s| !closures.iter().any(|t| t.order() < s.order() && t.is_subset_of(s)))
        .cloned()
        .collect();
    minimal
}

/// Every normal subgroup, as joins of normal closures of classes.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let ct = g.classes();
    let mut closures: Vec<Subgroup> = (1..ct.len()).into_par_iter().map(|c| normal_closure(g, &[ct.reps()[c]])).collect();
    sort_subgroups(&mut closures);
    closures.dedup();
    let closure_gens: Vec<Vec<u32>> = closures.iter().map(|k| generating_set(g, k)).collect();

    let mut found: HashSet<Subgroup> = HashSet::new();
    let trivial = g.trivial();
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(m) = queue.pop() {
        let base = generating_set(g, &m);
        let joins: Vec<Subgroup> = closures
            .par_iter()
            .zip(&closure_gens)
            .filter(|(k, _)| !k.is_subset_of(&m))
            .map(|(_, kg)| {
                let mut set = base.clone();
                set.extend_from_slice(kg);
                g.subgroup_generated(&set)
            })
            .collect();
        for k in joins {
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    sort_subgroups(&mut out);
    out
}

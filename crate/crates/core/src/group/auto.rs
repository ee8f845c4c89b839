use rayon::prelude::*;
use serde::Serialize;

use super::subgroups::{derived_subgroup, lower_central_series, nilpotency_class};
use super::{center, FiniteGroup, GroupError, Result, Subgroup};

/// An automorphism as a permutation of element ids; `images[x]` is the image
/// of `x`. Composition applies `self` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub images: Vec<u32>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism { images: (0..order as u32).collect() }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Automorphism { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut a = self.clone();
        while !a.is_identity() {
            a = a.then(self);
            k += 1;
        }
        k
    }
}

/// Extends generator images along the stored words; `None` if the result is
/// not a bijective homomorphism.
pub fn automorphism_from_generator_images(g: &FiniteGroup, gen_images: &[u32]) -> Option<Automorphism> {
    let n = g.order();
    let mut images = vec![0u32; n];
    let mut hit = vec![false; n];
    hit[0] = true;
    for x in 1..n {
        let y = g.mul(images[g.parent[x] as usize], gen_images[g.gen_of[x] as usize]);
        if hit[y as usize] {
            return None;
        }
        hit[y as usize] = true;
        images[x] = y;
    }
    for (s, &img) in gen_images.iter().enumerate() {
        for x in 0..n {
            if images[g.right_by_generator(x as u32, s) as usize] != g.mul(images[x], img) {
                return None;
            }
        }
    }
    Some(Automorphism { images })
}

pub fn is_automorphism(g: &FiniteGroup, a: &Automorphism) -> bool {
    if a.images.len() != g.order() || a.images[0] != 0 {
        return false;
    }
    let mut hit = vec![false; g.order()];
    for &y in &a.images {
        if y as usize >= g.order() || hit[y as usize] {
            return false;
        }
        hit[y as usize] = true;
    }
    let gens = g.generator_ids();
    g.ids().all(|x| gens.iter().all(|&s| a.apply(g.mul(x, s)) == g.mul(a.apply(x), a.apply(s))))
}

/// Every automorphism, found by trying all order-preserving images of the
/// generators. Sorted by image vector.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Automorphism> {
    let gens = g.generator_ids();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| g.ids().filter(|&x| g.element_order(x) == g.element_order(s)).collect())
        .collect();
    let total: usize = candidates.iter().map(|c| c.len()).product();
    let mut out: Vec<Automorphism> = (0..total)
        .into_par_iter()
        .filter_map(|mut k| {
            let mut imgs = Vec::with_capacity(gens.len());
            for c in &candidates {
                imgs.push(c[k % c.len()]);
                k /= c.len();
            }
            automorphism_from_generator_images(g, &imgs)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Class3Witness {
    /// Smallest element of the coset `xP′`.
    pub coset_rep: u32,
    pub y: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Class3Report {
    pub prime: u64,
    pub cosets_checked: usize,
    pub witnesses: Vec<Class3Witness>,
    /// A coset rep with no suitable `y`; never expected.
    pub counterexample: Option<u32>,
}

impl Class3Report {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn violated(msg: impl Into<String>) -> GroupError {
    GroupError::HypothesisViolated(msg.into())
}

/// Checks the hypotheses on `(P, Z, σ)` in order, reporting the first one
/// that fails.
pub fn class3_hypotheses(p: &FiniteGroup, z: &Subgroup, sigma: &Automorphism) -> Result<u64> {
    let prime = match p.is_p_group() {
        Some(q) if q != 2 => q,
        _ => return Err(violated("not a p-group for an odd prime p")),
    };
    match nilpotency_class(p) {
        Some(3) => {}
        Some(c) => return Err(violated(format!("nilpotence class is {c}, not 3"))),
        None => return Err(violated("not nilpotent")),
    }
    let series = lower_central_series(p);
    let derived = derived_subgroup(p);
    let gamma3 = &series[2];
    if !gamma3.is_subset_of(z) {
        return Err(violated("[P',P] is not contained in Z"));
    }
    if !z.is_subset_of(&center(p).intersection(&derived)) {
        return Err(violated("Z is not contained in Z(P) ∩ P'"));
    }
    if !is_automorphism(p, sigma) {
        return Err(violated("sigma is not an automorphism"));
    }
    let ord = sigma.order();
    if ord != 2 {
        return Err(violated(format!("order of sigma is {ord}, not 2")));
    }
    if let Some(x) = p.ids().find(|&x| !derived.contains(p.mul(sigma.apply(x), x))) {
        return Err(violated(format!("sigma does not invert P/P' (element {x})")));
    }
    if let Some(&x) = z.members().iter().find(|&&x| sigma.apply(x) != p.inv(x)) {
        return Err(violated(format!("sigma does not invert Z (element {x})")));
    }
    if let Some(&x) = derived.members().iter().find(|&&x| !z.contains(p.mul(p.inv(sigma.apply(x)), x))) {
        return Err(violated(format!("sigma does not centralize P'/Z (element {x})")));
    }
    Ok(prime)
}

/// For every `x ∈ P∖P′`, looks for `y ∈ xP′` with `C_{P/Z}(yZ) = C_P(y)P′/Z`,
/// comparing full preimages in `P`.
pub fn class3_lemma_check(p: &FiniteGroup, z: &Subgroup, sigma: &Automorphism) -> Result<Class3Report> {
    let prime = class3_hypotheses(p, z, sigma)?;
    let derived = derived_subgroup(p);
    let mut seen = vec![false; p.order()];
    let mut reps = Vec::new();
    for x in p.ids() {
        if seen[x as usize] {
            continue;
        }
        for &d in derived.members() {
            seen[p.mul(x, d) as usize] = true;
        }
        if !derived.contains(x) {
            reps.push(x);
        }
    }
    let results: Vec<(u32, Option<u32>)> = reps
        .par_iter()
        .map(|&x| {
            let mut coset: Vec<u32> = derived.members().iter().map(|&d| p.mul(x, d)).collect();
            coset.sort_unstable();
            let y = coset.iter().copied().find(|&y| {
                let d_y: Vec<u32> = p.ids().filter(|&d| z.contains(p.commutator(d, y))).collect();
                let cent: Vec<u32> = p.ids().filter(|&c| p.mul(c, y) == p.mul(y, c)).collect();
                let mut prod = cent.clone();
                prod.extend(derived.members());
                let cp = p.subgroup_generated(&prod);
                cp.members() == d_y.as_slice()
            });
            (coset[0], y)
        })
        .collect();
    let counterexample = results.iter().find(|(_, y)| y.is_none()).map(|(x, _)| *x);
    let witnesses =
        results.iter().filter_map(|(x, y)| y.map(|y| Class3Witness { coset_rep: *x, y })).collect();
    Ok(Class3Report { prime, cosets_checked: reps.len(), witnesses, counterexample })
}

/// An automorphism satisfying every hypothesis for `(P, Z)`, if one exists.
pub fn find_class3_sigma(p: &FiniteGroup, z: &Subgroup) -> Option<Automorphism> {
    automorphisms(p)
        .into_iter()
        .filter(|a| !a.is_identity() && a.then(a).is_identity())
        .find(|a| class3_hypotheses(p, z, a).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, GroupElement};

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

    #[test]
    fn aut_counts() {
        // |Aut(S3)| = 6, |Aut(Q8)| = 24, |Aut(C3 × C3)| = 48
        let s3 = perm_group(3, &[&[&[1, 2, 3]], &[&[1, 2]]]);
        assert_eq!(automorphisms(&s3).len(), 6);
        let q8 = perm_group(8, &[&[&[1, 2, 4, 7], &[3, 6, 8, 5]], &[&[1, 3, 4, 8], &[2, 5, 7, 6]]]);
        assert_eq!(automorphisms(&q8).len(), 24);
        let c3c3 = perm_group(6, &[&[&[1, 2, 3]], &[&[4, 5, 6]]]);
        assert_eq!(automorphisms(&c3c3).len(), 48);
        for a in automorphisms(&q8) {
            assert!(is_automorphism(&q8, &a));
        }
    }

    #[test]
    fn extraspecial_has_class_two() {
        // Heisenberg group mod 3 as permutations of the 9 points of GF(3)².
        let g = perm_group(9, &[&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]], &[&[2, 5, 8], &[3, 9, 6]]]);
        assert_eq!(g.order(), 27);
        let z = center(&g);
        let err = class3_lemma_check(&g, &z, &Automorphism::identity(27)).unwrap_err();
        assert_eq!(err, GroupError::HypothesisViolated("nilpotence class is 2, not 3".into()));
    }

    #[test]
    fn maximal_class_three_group() {
        let p = perm_group(9, &[&[&[1, 2, 3]], &[&[1, 4, 7], &[2, 5, 8], &[3, 6, 9]]]);
        let z = lower_central_series(&p)[2].clone();
        let err = class3_lemma_check(&p, &z, &Automorphism::identity(81)).unwrap_err();
        assert!(matches!(err, GroupError::HypothesisViolated(m) if m.starts_with("order of sigma")));
        let sigma = find_class3_sigma(&p, &z).expect("inversion-type automorphism exists");
        let report = class3_lemma_check(&p, &z, &sigma).unwrap();
        assert!(report.holds());
        assert_eq!(report.cosets_checked, 8);
    }
}

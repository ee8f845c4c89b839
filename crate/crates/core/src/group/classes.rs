use rayon::prelude::*;

use super::{FiniteGroup, Subgroup};
use crate::numtheory;

/// Conjugacy classes ordered by `(size, representative)`; the representative
/// of a class is its smallest element id, so class 0 is the identity.
#[derive(Debug, Clone)]
pub struct ClassTable {
    reps: Vec<u32>,
    sizes: Vec<usize>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    inverse_class: Vec<u32>,
    power_maps: Vec<(u64, Vec<u32>)>,
    rep_orders: Vec<u32>,
    group_order: usize,
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ClassTable {
    let n = g.order();
    let ngen = g.generators().len();
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for x in 0..n as u32 {
        if seen[x as usize] {
            continue;
        }
        seen[x as usize] = true;
        let mut orbit = vec![x];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            for s in 0..ngen {
                let z = g.conj_by_generator(y, s);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    orbit.push(z);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| (o.len(), o[0]));

    let mut class_of = vec![0u32; n];
    for (c, orbit) in orbits.iter().enumerate() {
        for &x in orbit {
            class_of[x as usize] = c as u32;
        }
    }
    let reps: Vec<u32> = orbits.iter().map(|o| o[0]).collect();
    let sizes = orbits.iter().map(|o| o.len()).collect();
    let inverse_class = reps.iter().map(|&r| class_of[g.inv(r) as usize]).collect();
    let rep_orders = reps.iter().map(|&r| g.element_order(r)).collect();
    let power_maps = numtheory::prime_divisors(n as u64)
        .into_iter()
        .map(|p| {
            let map = reps.iter().map(|&r| class_of[g.pow(r, p as i64) as usize]).collect();
            (p, map)
        })
        .collect();
    ClassTable {
        reps,
        sizes,
        class_of,
        members: orbits,
        inverse_class,
        power_maps,
        rep_orders,
        group_order: n,
    }
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn class_of(&self, id: u32) -> usize {
        self.class_of[id as usize] as usize
    }

    pub fn class_map(&self) -> &[u32] {
        &self.class_of
    }

    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c] as usize
    }

    pub fn rep_order(&self, c: usize) -> u32 {
        self.rep_orders[c]
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.group_order / self.sizes[c]
    }

    /// Class of `g^p` for `g` in class `c`, for a prime `p` dividing `|G|`.
    pub fn power_map(&self, p: u64) -> Option<&[u32]> {
        self.power_maps.iter().find(|(q, _)| *q == p).map(|(_, m)| m.as_slice())
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, g: &FiniteGroup, c: usize, k: i64) -> usize {
        self.class_of(g.pow(self.reps[c], k))
    }
}

pub fn centralizer(g: &FiniteGroup, x: u32) -> Subgroup {
    let ids: Vec<u32> =
        g.ids().into_par_iter().filter(|&y| g.mul(x, y) == g.mul(y, x)).collect();
    Subgroup::from_ids(g.order(), ids)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let gens = g.generator_ids();
    let ids: Vec<u32> = g
        .ids()
        .into_par_iter()
        .filter(|&y| gens.iter().all(|&s| g.mul(s, y) == g.mul(y, s)))
        .collect();
    Subgroup::from_ids(g.order(), ids)
}

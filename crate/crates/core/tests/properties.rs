use std::collections::{HashSet, VecDeque};

use gagola_core::field::{create_binary_field, create_field, FieldElement};
use gagola_core::group::{generate_group, GroupElement};
use gagola_core::numtheory::{factorize, gcd, lcm};
use gagola_core::suzuki::{make_a1, make_a2, make_a3, suzuki_group, BitMatrix, SuzukiAutomorphism};
use proptest::prelude::*;

/// Carry-less product reduced by a modulus given as a bit vector.
fn gf2_mul(mut a: u64, mut b: u64, n: u32, modulus: u64) -> u64 {
    let mut acc = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> n & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

fn compose(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().map(|&i| y[i as usize]).collect()
}

fn closure_order(gens: &[Vec<u32>]) -> usize {
    let id: Vec<u32> = (0..gens[0].len() as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn permutation(m: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..m as u32).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn binary_field_matches_carryless_oracle(n in 1u32..=12, a in any::<u64>(), b in any::<u64>()) {
        let f = create_field(2, n, None).unwrap();
        let modulus = f.modulus_code() as u64;
        let mask = (1u64 << n) - 1;
        let (a, b) = (a & mask, b & mask);
        prop_assert_eq!(f.mul(a, b), gf2_mul(a, b, n, modulus));
        prop_assert_eq!(f.add(a, b), a ^ b);
    }

    #[test]
    fn field_axioms(idx in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), h in 0u32..6) {
        let (p, n) = [(2, 3), (2, 8), (3, 4), (5, 2), (7, 1), (13, 2)][idx];
        let f = create_field(p, n, None).unwrap();
        let q = f.cardinality();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, q - 1), 1);
            prop_assert_eq!((q - 1) % f.multiplicative_order(a).unwrap(), 0);
        }
        prop_assert_eq!(f.frobenius(f.add(a, b), h), f.add(f.frobenius(a, h), f.frobenius(b, h)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), h), f.mul(f.frobenius(a, h), f.frobenius(b, h)));
        prop_assert_eq!(f.frobenius(a, n), a);
    }

    #[test]
    fn element_text_round_trips(n in 1u32..=16, v in any::<u64>()) {
        let f = create_field(2, n, None).unwrap();
        let x = FieldElement::new(&f, v & ((1 << n) - 1)).unwrap();
        let back: FieldElement = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn permutation_groups_match_naive_closure(raw in (2usize..=6).prop_flat_map(|m| prop::collection::vec(permutation(m), 1..3))) {
        let elems: Vec<GroupElement> = raw.iter().map(|p| GroupElement::perm(p.clone()).unwrap()).collect();
        let g = generate_group(&elems, 1000).unwrap();
        prop_assert_eq!(g.order(), closure_order(&raw));
        prop_assert_eq!(720 % g.order(), 0);

        let classes = g.classes();
        let total: usize = (0..classes.len()).map(|k| classes.size(k)).sum();
        prop_assert_eq!(total, g.order());
        for k in 0..classes.len() {
            prop_assert_eq!(g.order() % classes.size(k), 0);
        }
        for x in g.ids() {
            prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
            prop_assert_eq!(g.order() % g.element_order(x) as usize, 0);
        }
    }

    #[test]
    fn suzuki_law_is_associative(n in prop::sample::select(vec![3u32, 5, 7]), h in 1u32..3, a in any::<[u64; 6]>()) {
        let m = suzuki_group(n, h, 0).unwrap();
        let mask = (1u64 << n) - 1;
        let x = (a[0] & mask, a[1] & mask);
        let y = (a[2] & mask, a[3] & mask);
        let z = (a[4] & mask, a[5] & mask);
        prop_assert_eq!(m.mul(m.mul(x, y), z), m.mul(x, m.mul(y, z)));
        prop_assert_eq!(m.mul(x, m.inv(x)), (0, 0));
        // (a,c)(b,d) = (a+b, c+d+bΘ(a)) with Θ(a) = a^(2^h)
        let f = m.field();
        prop_assert_eq!(m.mul(x, y), (x.0 ^ y.0, x.1 ^ y.1 ^ f.mul(y.0, f.frobenius(x.0, h))));
    }

    #[test]
    fn suzuki_automorphisms_respect_the_law(psi in any::<u64>(), s in 1u64..8, t in 0u32..3, a in any::<[u64; 4]>()) {
        let m = suzuki_group(3, 1, 0).unwrap();
        let x = (a[0] & 7, a[1] & 7);
        let y = (a[2] & 7, a[3] & 7);
        let phi = SuzukiAutomorphism::Product(vec![
            make_a1(&m, BitMatrix::from_index(3, psi & 511)).unwrap(),
            make_a2(&m, s).unwrap(),
            make_a3(&m, t).unwrap(),
        ]);
        prop_assert_eq!(phi.apply(&m, m.mul(x, y)), m.mul(phi.apply(&m, x), phi.apply(&m, y)));
        prop_assert_eq!(phi.inverse(&m).apply(&m, phi.apply(&m, x)), x);
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..u64::MAX) {
        let f = factorize(n);
        let mut prod = 1u128;
        for &(p, e) in &f {
            prop_assert!((2..).take_while(|d: &u64| d * d <= p && *d < 1_000).all(|d| p % d != 0));
            prod *= (p as u128).pow(e);
        }
        prop_assert_eq!(prod, n as u128);
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn gcd_lcm_identity(a in 1u64..1 << 30, b in 1u64..1 << 30) {
        prop_assert_eq!(gcd(a, b) as u128 * lcm(a, b) as u128, a as u128 * b as u128);
    }
}

#[test]
fn explicit_binary_modulus() {
    let f = create_binary_field(3, 0xB).unwrap();
    let x = FieldElement::new(&f, 0x5).unwrap();
    assert_eq!(x.to_string(), "0x5@GF(2^3,0xB)");
    assert!(create_binary_field(3, 0x9).is_err(), "x^3+1 is reducible");
}

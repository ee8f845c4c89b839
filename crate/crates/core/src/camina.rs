//! Camina and Gagola pairs: certification, the `(d, e)` parameters by two
//! routes, the degree and order bounds, and the involution lemmas for p = 2.

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::chartable::{character_table_with_cap, find_gagola_character, CharTableError, TABLE_CAP};
use crate::group::{
    derived_subgroup, generating_set, is_normal, minimal_normal_subgroups, normal_subgroups, o_p_subgroup,
    quotient_group, sylow_subgroup, FiniteGroup, GroupError, Subgroup,
};
use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaminaError {
    #[error("N is not normal in G")]
    NotNormal,
    #[error("N must be a proper nontrivial subgroup")]
    TrivialOrFull,
    #[error("Camina conditions disagree: {0}")]
    ConditionDisagreement(String),
    #[error("d and e disagree: character table gives ({d_table}, {e_table}), structure gives ({d_struct}, {e_struct})")]
    DAndEDisagree { d_table: u64, e_table: u64, d_struct: u64, e_struct: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a 2-Gagola pair")]
    NotTwoGagola,
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T> = std::result::Result<T, CaminaError>;

fn violated(msg: impl Into<String>) -> CaminaError {
    CaminaError::HypothesisViolated(msg.into())
}

#[derive(Debug, Clone, Serialize)]
pub struct CaminaEvidence {
    /// `gN ⊆ class(g)` for every `g ∉ N`.
    pub cosets_in_classes: bool,
    /// `|C_G(g)| = |C_{G/N}(gN)|` for every `g ∉ N`.
    pub centralizer_orders: bool,
    /// `N ⊆ {[g,y] : y ∈ G}` for every `g ∉ N`.
    pub commutators_cover: bool,
    /// First `g ∉ N` failing the coset condition.
    pub witness: Option<u32>,
}

impl CaminaEvidence {
    pub fn holds(&self) -> bool {
        self.cosets_in_classes
    }
}

fn check_pair(g: &FiniteGroup, n: &Subgroup) -> Result<()> {
    if n.is_trivial() || n.order() == g.order() {
        return Err(CaminaError::TrivialOrFull);
    }
    if !is_normal(g, n) {
        return Err(CaminaError::NotNormal);
    }
    Ok(())
}

/// Evaluates the three Camina conditions independently; they must agree.
pub fn is_camina_pair(g: &FiniteGroup, n: &Subgroup) -> Result<CaminaEvidence> {
    check_pair(g, n)?;
    let ct = g.classes();
    let outside: Vec<u32> = g.ids().filter(|&x| !n.contains(x)).collect();

    let witness = outside
        .iter()
        .copied()
        .find(|&x| n.members().iter().any(|&y| ct.class_of(g.mul(x, y)) != ct.class_of(x)));
    let cosets_in_classes = witness.is_none();

    let q = quotient_group(g, n)?;
    let qct = q.group.classes();
    let qorder = q.group.order();
    let centralizer_orders = outside.iter().all(|&x| {
        let c = ct.class_of(x);
        let qc = qct.class_of(q.projection[x as usize]);
        g.order() / ct.size(c) == qorder / qct.size(qc)
    });

    let commutators_cover = outside.iter().all(|&x| {
        let mut hit = vec![false; g.order()];
        for y in g.ids() {
            hit[g.commutator(x, y) as usize] = true;
        }
        n.members().iter().all(|&m| hit[m as usize])
    });

    if cosets_in_classes != centralizer_orders || cosets_in_classes != commutators_cover {
        return Err(CaminaError::ConditionDisagreement(format!(
            "{}: cosets {cosets_in_classes}, centralizers {centralizer_orders}, commutators {commutators_cover}",
            g.label()
        )));
    }
    Ok(CaminaEvidence { cosets_in_classes, centralizer_orders, commutators_cover, witness })
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundVerdicts {
    pub d_le_e2_minus_e: bool,
    pub order_le_e4_minus_e3: bool,
    pub e2_eq_p_index: bool,
    pub d_eq_e_times_n_minus_1: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GagolaWitness {
    pub character: usize,
    pub classes: [usize; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct PairCertificate {
    pub group: String,
    pub order: u64,
    pub n_order: u64,
    /// Words in the group generators generating `N`.
    pub n_generators: Vec<String>,
    pub camina: CaminaEvidence,
    pub is_camina: bool,
    pub is_gagola: bool,
    /// The first Gagola condition that failed.
    pub reason: Option<String>,
    pub p: Option<u64>,
    pub d: Option<u64>,
    pub e: Option<u64>,
    /// `|P:N|` for a Sylow p-subgroup `P`.
    pub p_index: Option<u64>,
    /// `|G:P|`.
    pub p_complement_index: Option<u64>,
    pub bounds: Option<BoundVerdicts>,
    pub witness: Option<GagolaWitness>,
}

impl PairCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "pairCert/1",
            "group": self.group,
            "order": self.order,
            "n": { "order": self.n_order, "generators": self.n_generators },
            "isCamina": self.is_camina,
            "camina": {
                "cosetsInClasses": self.camina.cosets_in_classes,
                "centralizerOrders": self.camina.centralizer_orders,
                "commutatorsCover": self.camina.commutators_cover,
            },
            "isGagola": self.is_gagola,
            "reason": self.reason,
            "p": self.p,
            "d": self.d,
            "e": self.e,
            "pIndex": self.p_index,
            "bounds": self.bounds.as_ref().map(|b| json!({
                "dLeE2MinusE": b.d_le_e2_minus_e,
                "orderLeE4MinusE3": b.order_le_e4_minus_e3,
                "e2EqPIndex": b.e2_eq_p_index,
                "dEqETimesNMinus1": b.d_eq_e_times_n_minus_1,
            })),
            "gagolaWitness": self.witness.as_ref().map(|w| json!({
                "character": w.character,
                "classes": w.classes,
            })),
        })
    }
}

/// Exponent `p` when `n` is a nontrivial elementary abelian p-group.
fn elementary_abelian_prime(g: &FiniteGroup, n: &Subgroup) -> Option<u64> {
    let p = g.element_order(*n.members().get(1)?) as u64;
    if !numtheory::is_prime(p) {
        return None;
    }
    let gens = generating_set(g, n);
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    (abelian && n.members()[1..].iter().all(|&x| g.element_order(x) as u64 == p)).then_some(p)
}

pub fn is_gagola_pair(g: &FiniteGroup, n: &Subgroup) -> Result<PairCertificate> {
    is_gagola_pair_with_cap(g, n, TABLE_CAP)
}

pub fn is_gagola_pair_with_cap(g: &FiniteGroup, n: &Subgroup, cap: usize) -> Result<PairCertificate> {
    let camina = is_camina_pair(g, n)?;
    let mut cert = PairCertificate {
        group: g.label().to_string(),
        order: g.order() as u64,
        n_order: n.order() as u64,
        n_generators: generating_set(g, n).iter().map(|&x| g.word_string(x)).collect(),
        is_camina: camina.holds(),
        camina,
        is_gagola: false,
        reason: None,
        p: None,
        d: None,
        e: None,
        p_index: None,
        p_complement_index: None,
        bounds: None,
        witness: None,
    };
    let minimal = minimal_normal_subgroups(g);
    if minimal.len() != 1 || &minimal[0] != n {
        cert.reason = Some("N is not the unique minimal normal subgroup".into());
        return Ok(cert);
    }
    let Some(p) = elementary_abelian_prime(g, n) else {
        cert.reason = Some("N is not an elementary abelian p-group".into());
        return Ok(cert);
    };
    cert.p = Some(p);
    let ct = g.classes();
    let c0 = ct.class_of(n.members()[1]);
    if n.members()[1..].iter().any(|&x| ct.class_of(x) != c0) {
        cert.reason = Some("G is not transitive on N∖{1}".into());
        return Ok(cert);
    }
    let table = character_table_with_cap(g, cap)?;
    let chi = match find_gagola_character(g, &table)? {
        Some(chi) if &chi.n == n => chi,
        _ => {
            cert.reason = Some("no Gagola character vanishing off N".into());
            return Ok(cert);
        }
    };
    let order = g.order() as u64;
    let d_table = chi.degree;
    let e_table = order / d_table - d_table;

    let sylow = sylow_subgroup(g, p)?;
    let p_index = (sylow.order() / n.order()) as u64;
    let e_struct = p_index.isqrt();
    let d_struct = e_struct * (n.order() as u64 - 1);
    if e_struct * e_struct != p_index || d_struct != d_table || e_struct != e_table {
        return Err(CaminaError::DAndEDisagree { d_table, e_table, d_struct, e_struct });
    }
    let (d, e) = (d_table, e_table);
    cert.is_gagola = true;
    cert.d = Some(d);
    cert.e = Some(e);
    cert.p_index = Some(p_index);
    cert.p_complement_index = Some((g.order() / sylow.order()) as u64);
    cert.bounds = Some(BoundVerdicts {
        d_le_e2_minus_e: d + e <= e * e,
        order_le_e4_minus_e3: order + e.pow(3) <= e.pow(4),
        e2_eq_p_index: e * e == p_index,
        d_eq_e_times_n_minus_1: d == e * (n.order() as u64 - 1),
    });
    cert.witness = Some(GagolaWitness { character: chi.index, classes: chi.classes });
    Ok(cert)
}

/// The Gagola certificate for each minimal normal subgroup.
pub fn certify_minimal_normals(g: &FiniteGroup, cap: usize) -> Result<Vec<PairCertificate>> {
    minimal_normal_subgroups(g)
        .iter()
        .filter(|n| n.order() < g.order())
        .map(|n| is_gagola_pair_with_cap(g, n, cap))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub d: u64,
    pub e: u64,
    pub order: u64,
    /// Present when `e > 1`.
    pub d_le_e2_minus_e: Option<bool>,
    pub order_le_e4_minus_e3: Option<bool>,
    pub d_lt_e2: Option<bool>,
    pub order_lt_e4_plus_e3: Option<bool>,
    /// `|N|² ≤ |G:N|_p`.
    pub n_squared_le_p_part: Option<bool>,
    /// `|N| ≤ p²` implies `|G:N|_p ≥ |N|²`.
    pub small_n_consequence: Option<bool>,
    /// Present when `e = 1`: G is a 2-transitive Frobenius group with kernel N.
    pub two_transitive_frobenius: Option<bool>,
    /// `|G| = d(d+e)`.
    pub order_identity: bool,
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        [
            self.d_le_e2_minus_e,
            self.order_le_e4_minus_e3,
            self.d_lt_e2,
            self.order_lt_e4_plus_e3,
            self.n_squared_le_p_part,
            self.small_n_consequence,
            self.two_transitive_frobenius,
        ]
        .iter()
        .all(|v| v.unwrap_or(true))
            && self.order_identity
    }
}

/// N abelian, `|G| = |N|(|N|−1)`, N∖{1} a single class, and `C_G(x) = N`
/// for `x ∈ N∖{1}`: G/N acts regularly on N∖{1} by conjugation.
pub fn is_two_transitive_frobenius(g: &FiniteGroup, n: &Subgroup) -> bool {
    let k = n.order();
    if k < 2 || g.order() != k * (k - 1) {
        return false;
    }
    let abelian = n.members().iter().all(|&a| n.members().iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let x = n.members()[1];
    let ct = g.classes();
    let c = ct.class_of(x);
    abelian && ct.size(c) == k - 1 && n.members()[1..].iter().all(|&y| ct.class_of(y) == c)
        && g.ids().filter(|&y| g.mul(x, y) == g.mul(y, x)).count() == k
}

pub fn verify_bounds(g: &FiniteGroup, n: &Subgroup, cert: &PairCertificate) -> Result<BoundsReport> {
    let (Some(d), Some(e), Some(p)) = (cert.d, cert.e, cert.p) else {
        return Err(violated("certificate has no (d, e)"));
    };
    let order = cert.order;
    let nn = cert.n_order;
    let index_p = numtheory::p_part(order / nn, p).map_err(|e| violated(e.to_string()))?;
    let mut r = BoundsReport {
        d,
        e,
        order,
        d_le_e2_minus_e: None,
        order_le_e4_minus_e3: None,
        d_lt_e2: None,
        order_lt_e4_plus_e3: None,
        n_squared_le_p_part: None,
        small_n_consequence: None,
        two_transitive_frobenius: None,
        order_identity: order == d * (d + e),
    };
    if e > 1 {
        r.d_le_e2_minus_e = Some(d + e <= e * e);
        r.order_le_e4_minus_e3 = Some(order + e.pow(3) <= e.pow(4));
        r.d_lt_e2 = Some(d < e * e);
        r.order_lt_e4_plus_e3 = Some(order < e.pow(4) + e.pow(3));
        r.n_squared_le_p_part = Some(nn * nn <= index_p);
        if nn <= p * p {
            r.small_n_consequence = Some(index_p >= nn * nn);
        }
    } else {
        r.two_transitive_frobenius = Some(is_two_transitive_frobenius(g, n));
    }
    Ok(r)
}

#[derive(Debug, Clone, Serialize)]
pub struct AbelianQuotientVerdict {
    pub index: u64,
    pub n_order: u64,
    pub derived_equals_n: bool,
}

impl AbelianQuotientVerdict {
    pub fn holds(&self) -> bool {
        self.index >= self.n_order * self.n_order && self.derived_equals_n
    }
}

/// For a Camina pair of a p-group with abelian quotient: `|G:N| ≥ |N|²` and `G′ = N`.
pub fn camina_abelian_quotient_bound(g: &FiniteGroup, n: &Subgroup) -> Result<AbelianQuotientVerdict> {
    if g.is_p_group().is_none() {
        return Err(violated("G is not a p-group"));
    }
    if !is_camina_pair(g, n)?.holds() {
        return Err(violated("(G, N) is not a Camina pair"));
    }
    let derived = derived_subgroup(g);
    if !derived.is_subset_of(n) {
        return Err(violated("G/N is not abelian"));
    }
    Ok(AbelianQuotientVerdict {
        index: (g.order() / n.order()) as u64,
        n_order: n.order() as u64,
        derived_equals_n: &derived == n,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OvergroupVerdict {
    pub m_order: u64,
    /// `|P:M|`.
    pub p_index_m: u64,
    /// `|M:N|`.
    pub m_index_n: u64,
    pub first_ok: bool,
    /// `|N|² ≤ |P:N|`, checked when `|N| ≤ |M:N|`.
    pub second: Option<bool>,
}

impl OvergroupVerdict {
    pub fn holds(&self) -> bool {
        self.first_ok && self.second.unwrap_or(true)
    }
}

pub fn abelian_overgroup_bound(g: &FiniteGroup, n: &Subgroup, cert: &PairCertificate, m: &Subgroup) -> Result<OvergroupVerdict> {
    let Some(p) = cert.p.filter(|_| cert.is_gagola) else {
        return Err(violated("(G, N) is not a certified Gagola pair"));
    };
    if !n.is_subset_of(m) {
        return Err(violated("N is not contained in M"));
    }
    if !is_normal(g, m) {
        return Err(violated("M is not normal"));
    }
    if m.members().iter().any(|&x| numtheory::p_part(g.element_order(x) as u64, p) != Ok(g.element_order(x) as u64)) {
        return Err(violated("M is not a p-group"));
    }
    let gens = generating_set(g, m);
    if !gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a))) {
        return Err(violated("M is not abelian"));
    }
    let sylow = sylow_subgroup(g, p)?;
    let p_index_m = (sylow.order() / m.order()) as u64;
    let m_index_n = (m.order() / n.order()) as u64;
    let nn = n.order() as u64;
    let second = (nn <= m_index_n).then(|| nn * nn <= (sylow.order() / n.order()) as u64);
    Ok(OvergroupVerdict { m_order: m.order() as u64, p_index_m, m_index_n, first_ok: p_index_m >= m_index_n, second })
}

/// Normal abelian p-subgroups strictly containing `N`.
pub fn abelian_overgroups(g: &FiniteGroup, n: &Subgroup, p: u64) -> Vec<Subgroup> {
    normal_subgroups(g)
        .into_iter()
        .filter(|m| m.order() > n.order() && n.is_subset_of(m))
        .filter(|m| numtheory::p_part(m.order() as u64, p) == Ok(m.order() as u64))
        .filter(|m| {
            let gens = generating_set(g, m);
            gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct InvolutionReport {
    pub involutions_in_quotient: usize,
    pub all_in_o2: bool,
    pub o2_order: u64,
    /// Whether `O₂(G)/N` has an element of order at least 4.
    pub o2_quotient_not_exponent_two: bool,
    /// `|G:N|₂ ≥ |N|²`, checked when the previous flag is set.
    pub two_part_bound: Option<bool>,
}

impl InvolutionReport {
    pub fn holds(&self) -> bool {
        self.all_in_o2 && self.two_part_bound.unwrap_or(true)
    }
}

pub fn involution_lemma_checks(g: &FiniteGroup, n: &Subgroup, cert: &PairCertificate) -> Result<InvolutionReport> {
    if !cert.is_gagola || cert.p != Some(2) {
        return Err(CaminaError::NotTwoGagola);
    }
    let q = quotient_group(g, n)?;
    let o2 = o_p_subgroup(g, 2);
    let mut in_image = vec![false; q.group.order()];
    for &x in o2.members() {
        in_image[q.projection[x as usize] as usize] = true;
    }
    let involutions: Vec<u32> = q.group.ids().filter(|&x| q.group.element_order(x) == 2).collect();
    let all_in_o2 = involutions.iter().all(|&x| in_image[x as usize]);
    let big = o2.members().iter().any(|&x| !n.contains(g.mul(x, x)));
    let two_part = numtheory::p_part((g.order() / n.order()) as u64, 2).unwrap_or(1);
    let nn = n.order() as u64;
    Ok(InvolutionReport {
        involutions_in_quotient: involutions.len(),
        all_in_o2,
        o2_order: o2.order() as u64,
        o2_quotient_not_exponent_two: big,
        two_part_bound: big.then_some(two_part >= nn * nn),
    })
}

/// Whether a group is dihedral of order `2m` (including orders 2 and 4).
fn is_dihedral(g: &FiniteGroup) -> bool {
    let order = g.order();
    if order % 2 != 0 {
        return false;
    }
    let m = order / 2;
    g.ids().filter(|&r| g.element_order(r) as usize == m).any(|r| {
        let rot = g.subgroup_generated(&[r]);
        g.ids().any(|s| !rot.contains(s) && g.element_order(s) == 2 && g.conj(r, s) == g.inv(r))
    })
}

/// Checks the hypotheses on `(K, M, N)` and returns an involution of `K∖M`,
/// or `None` if there is none.
pub fn lemma_five_check(k: &FiniteGroup, m: &Subgroup, n: &Subgroup) -> Result<Option<u32>> {
    if !is_normal(k, n) || !n.is_subset_of(m) {
        return Err(violated("N is not a normal subgroup of K contained in M"));
    }
    if !n.is_trivial() && elementary_abelian_prime(k, n) != Some(2) {
        return Err(violated("N is not an elementary abelian 2-group"));
    }
    let mn = m.order() / n.order();
    if mn % 2 == 0 {
        return Err(violated("|M:N| is even"));
    }
    let coset_order = |x: u32| (1..=mn).find(|&i| n.contains(k.pow(x, i as i64))).unwrap_or(0);
    if !m.members().iter().any(|&x| coset_order(x) == mn) {
        return Err(violated("M/N is not cyclic"));
    }
    if k.order() != 2 * m.order() {
        return Err(violated("|K:M| ≠ 2"));
    }
    let mgens = generating_set(k, m);
    if n.members()[1..].iter().any(|&x| mgens.iter().all(|&y| k.mul(x, y) == k.mul(y, x))) {
        return Err(violated("C_N(M/N) ≠ 1"));
    }
    let q = quotient_group(k, n)?;
    if !is_dihedral(&q.group) {
        return Err(violated("K/N is not dihedral"));
    }
    Ok(k.ids().find(|&x| !m.contains(x) && k.element_order(x) == 2))
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
    fn camina_examples() {
        let d4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]);
        assert!(is_camina_pair(&d4, &center(&d4)).unwrap().holds());
        let g = q8();
        assert!(is_camina_pair(&g, &center(&g)).unwrap().holds());
        let c4 = perm_group(4, &[&[&[1, 2, 3, 4]]]);
        let c2 = c4.subgroup_generated(&[c4.pow(1, 2)]);
        let ev = is_camina_pair(&c4, &c2).unwrap();
        assert!(!ev.holds() && !ev.centralizer_orders && !ev.commutators_cover);
        assert_eq!(is_camina_pair(&c4, &c4.whole()).unwrap_err(), CaminaError::TrivialOrFull);
        let s3 = perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        let t = s3.ids().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(is_camina_pair(&s3, &s3.subgroup_generated(&[t])).unwrap_err(), CaminaError::NotNormal);
    }

    #[test]
    fn q8_certificate() {
        let g = q8();
        let z = center(&g);
        let cert = is_gagola_pair(&g, &z).unwrap();
        assert!(cert.is_gagola && cert.is_camina);
        assert_eq!((cert.d, cert.e, cert.p_index), (Some(2), Some(2), Some(4)));
        let b = verify_bounds(&g, &z, &cert).unwrap();
        assert!(b.holds());
        assert_eq!(b.d_le_e2_minus_e, Some(true));
        assert_eq!(b.order_le_e4_minus_e3, Some(true));
        assert_eq!(cert.to_json()["schema"], "pairCert/1");
        let abel = camina_abelian_quotient_bound(&g, &z).unwrap();
        assert!(abel.holds());
        assert_eq!(abel.index, 4);
        let inv = involution_lemma_checks(&g, &z, &cert).unwrap();
        assert!(inv.holds());
        assert_eq!(inv.involutions_in_quotient, 3);
        let overs = abelian_overgroups(&g, &z, 2);
        assert_eq!(overs.len(), 3);
        for m in &overs {
            let v = abelian_overgroup_bound(&g, &z, &cert, m).unwrap();
            assert!(v.holds());
            assert_eq!(v.second, Some(true));
        }
    }

    #[test]
    fn s3_is_a_frobenius_pair() {
        let s3 = perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        let a3 = s3.subgroup_generated(&[s3.ids().find(|&x| s3.element_order(x) == 3).unwrap()]);
        let cert = is_gagola_pair(&s3, &a3).unwrap();
        assert_eq!((cert.d, cert.e), (Some(2), Some(1)));
        let b = verify_bounds(&s3, &a3, &cert).unwrap();
        assert_eq!(b.two_transitive_frobenius, Some(true));
        assert_eq!(b.d_le_e2_minus_e, None);
        assert!(matches!(camina_abelian_quotient_bound(&s3, &a3), Err(CaminaError::HypothesisViolated(_))));
    }

    #[test]
    fn lemma_five_examples() {
        let s4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        let v4 = s4.subgroup_generated(&[
            s4.id_of(&GroupElement::perm_from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap()).unwrap(),
            s4.id_of(&GroupElement::perm_from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap()).unwrap(),
        ]);
        let a4 = derived_subgroup(&s4);
        let inv = lemma_five_check(&s4, &a4, &v4).unwrap().expect("involution outside A4");
        assert!(!a4.contains(inv));

        // S3 × C2 with N the direct factor C2
        let k = perm_group(5, &[&[&[1, 2, 3]], &[&[1, 2]], &[&[4, 5]]]);
        let n = k.subgroup_generated(&[k.id_of(&GroupElement::perm_from_cycles(5, &[vec![4, 5]]).unwrap()).unwrap()]);
        let m = k.subgroup_generated(&[
            k.id_of(&GroupElement::perm_from_cycles(5, &[vec![1, 2, 3]]).unwrap()).unwrap(),
            n.members()[1],
        ]);
        assert_eq!(lemma_five_check(&k, &m, &n).unwrap_err(), violated("C_N(M/N) ≠ 1"));
    }
}

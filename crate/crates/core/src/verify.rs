//! Verification suites and the `report/1` format.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::camina::{
    abelian_overgroup_bound, abelian_overgroups, camina_abelian_quotient_bound, involution_lemma_checks,
    is_camina_pair, is_gagola_pair_with_cap, lemma_five_check, verify_bounds, CaminaError,
};
use crate::chartable::{character_table_with_cap, TABLE_CAP};
use crate::constructions::{
    frobenius_complement_checks, frobenius_instances, is_sharply_two_transitive, semilinear_group,
    singer_transitive_subgroups, sl2, sl2_order, twisted_tensor_check,
};
use crate::group::{
    center, class3_lemma_check, derived_subgroup, find_class3_sigma, frattini_subgroup, lower_central_series,
    normal_subgroups, DEFAULT_CAP,
};
use crate::numtheory::{self, NorCondVerdict};
use crate::spec::parse_group;
use crate::suzuki::{
    brute_force_aut, centralizer_in_a1, conjugation_relations_check, squaring_bijection_check, suzuki_group,
};

pub const VERSION: &str = concat!("gagola ", env!("CARGO_PKG_VERSION"));

pub const SUITES: &[&str] = &["numtheory", "suzuki", "bounds", "charcheck", "frobenius", "sl2", "all"];

/// Groups whose Camina conditions are compared over every normal subgroup.
pub const CAMINA_CORPUS: &[&str] = &[
    "perm:m=4;gens=(1,2,3,4),(1,3)",
    "perm:m=8;gens=(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)",
    "perm:m=9;gens=(1,2,3)(4,5,6)(7,8,9),(2,5,8)(3,9,6)",
    "heis:q=3",
    "heis:q=4",
    "agl1:q=4",
    "agl1:q=8",
    "suzuki:n=3;h=1",
];

/// Groups of order at most 500 whose character tables are checked.
pub const TABLE_CORPUS: &[&str] = &[
    "perm:m=3;gens=(1,2),(1,2,3)",
    "perm:m=4;gens=(1,2,3,4),(1,3)",
    "perm:m=8;gens=(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)",
    "perm:m=4;gens=(1,2,3,4),(1,2)",
    "perm:m=5;gens=(1,2,3,4,5),(1,2,3)",
    "perm:m=5;gens=(1,2,3),(4,5)",
    "perm:m=9;gens=(1,2,3)(4,5,6)(7,8,9),(2,5,8)(3,9,6)",
    "perm:m=9;gens=(1,2,3),(1,4,7)(2,5,8)(3,6,9)",
    "heis:q=2",
    "heis:q=3",
    "heis:q=4",
    "heis:q=5",
    "agl1:q=4",
    "agl1:q=5",
    "agl1:q=7",
    "agl1:q=8",
    "agl1:q=9",
    "sl2:q=4",
    "sl2:q=8",
    "gamma:p=2;n=4",
    "gamma:p=3;n=2",
    "suzuki:n=3;h=1",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Partial,
    HypothesisNotMet,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
            Status::HypothesisNotMet => "hypothesis-not-met",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, status: Status, witness: Value) -> Self {
        Check { id: id.into(), claim: claim.into(), status, witness }
    }

    fn error(id: impl Into<String>, claim: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check::new(id, claim, Status::Fail, json!({ "error": err.to_string() }))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn ids_unique(&self) -> bool {
        let mut ids: Vec<&str> = self.checks.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.windows(2).all(|w| w[0] != w[1])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "report/1",
            "suite": self.suite,
            "version": self.version,
            "status": self.status(),
            "checks": self.checks,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<18} {}  {}\n", c.status.as_str(), c.id, c.claim));
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        out.push_str(&format!("{}: {} checks, {} failed ({})\n", self.suite, self.checks.len(), fails, self.status()));
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub cap: usize,
    pub family: Option<String>,
    pub q: Vec<u64>,
    pub n: Option<u32>,
    pub h: Option<u32>,
    pub full_aut: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { cap: DEFAULT_CAP, family: None, q: Vec::new(), n: None, h: None, full_aut: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`; expected one of numtheory, suzuki, bounds, charcheck, frobenius, sl2, all")]
    UnknownSuite(String),
    #[error("unknown family `{0}`; expected heis, agl1 or all")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub fn run_suite(suite: &str, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let mut seen = std::collections::HashSet::new();
    let mut opts = opts.clone();
    opts.q.retain(|q| seen.insert(*q));
    let opts = &opts;
    let checks = match suite {
        "numtheory" => numtheory_suite(),
        "suzuki" => suzuki_suite(opts)?,
        "bounds" => bounds_suite(opts)?,
        "charcheck" => charcheck_suite(opts),
        "frobenius" => frobenius_suite(opts),
        "sl2" => sl2_suite(opts),
        "all" => {
            let mut all = numtheory_suite();
            all.extend(suzuki_suite(opts)?);
            all.extend(bounds_suite(opts)?);
            all.extend(charcheck_suite(opts));
            all.extend(frobenius_suite(opts));
            all.extend(sl2_suite(opts));
            all
        }
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    };
    let report = VerificationReport { suite: suite.to_string(), version: VERSION.to_string(), checks };
    debug_assert!(report.ids_unique());
    Ok(report)
}

/// `(p, a)` with `p ≤ max_p` prime and `2 ≤ a ≤ max_a` (and `a = 1` for odd
/// `p`) for which `p^a − 1` has no Zsigmondy prime.
pub fn zsigmondy_exceptions(max_p: u64, max_a: u32) -> Result<Vec<(u64, u32)>, numtheory::NumberTheoryError> {
    let mut out = Vec::new();
    for p in (2..=max_p).filter(|&p| numtheory::is_prime(p)) {
        for a in 1..=max_a {
            if p == 2 && a == 1 {
                continue;
            }
            let exists = match numtheory::checked_pow(p, a).filter(|&v| v <= 1 << 63) {
                Some(_) => numtheory::zsigmondy(p, a)?.is_some(),
                None => numtheory::has_zsigmondy_prime(p, a)?,
            };
            if !exists {
                out.push((p, a));
            }
        }
    }
    Ok(out)
}

/// Every `(p, q, n)` with `p ≤ 50`, odd `q ≤ 11`, `n ≤ 40` meeting the
/// hypothesis `q² | p^m − 1`, with its verdict.
pub fn norcond_search() -> Vec<(u64, u64, u64, NorCondVerdict)> {
    let mut out = Vec::new();
    for p in (2..=50u64).filter(|&p| numtheory::is_prime(p)) {
        for q in (3..=11u64).filter(|&q| numtheory::is_prime(q)) {
            for n in 1..=40u64 {
                if let Ok(v @ NorCondVerdict::Checked { .. }) = numtheory::norcond_check(p, q, n) {
                    out.push((p, q, n, v));
                }
            }
        }
    }
    out
}

fn numtheory_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for a in 0..=6 {
        let claim = format!("2^(3^{a}) ≡ −1 mod 3^{} and not mod 3^{}", a + 1, a + 2);
        checks.push(match numtheory::lemma_one_check(a) {
            Ok(v) => Check::new(format!("numtheory.lemma-one.a={a}"), claim, Status::from_bool(v.holds()), json!(v)),
            Err(e) => Check::error(format!("numtheory.lemma-one.a={a}"), claim, e),
        });
    }
    for n in 1..=30 {
        let claim = "((2^n − 1)(2^n + 1))_3 = 3^(a+1) with the parity sign of 2^n";
        checks.push(match numtheory::onea_three_part(n) {
            Ok(v) => Check::new(format!("numtheory.onea.n={n}"), claim, Status::from_bool(v.holds()), json!(v)),
            Err(e) => Check::error(format!("numtheory.onea.n={n}"), claim, e),
        });
    }

    let claim = "p^a − 1 lacks a Zsigmondy prime exactly for (2,6) and (Mersenne p, 2), p ≤ 127, a ≤ 20";
    checks.push(match zsigmondy_exceptions(127, 20) {
        Ok(found) => {
            let mut expected: Vec<(u64, u32)> =
                (2..=127).filter(|&p| numtheory::is_mersenne_prime(p)).map(|p| (p, 2)).collect();
            expected.push((2, 6));
            expected.sort_unstable();
            Check::new("numtheory.zsigmondy.exceptions", claim, Status::from_bool(found == expected), json!({ "exceptions": found }))
        }
        Err(e) => Check::error("numtheory.zsigmondy.exceptions", claim, e),
    });
    let primitive = (2..=31u64).filter(|&p| numtheory::is_prime(p)).all(|p| {
        (1..=12u32).all(|a| match numtheory::zsigmondy(p, a) {
            Ok(Some(q)) => {
                (numtheory::checked_pow(p, a).unwrap() - 1) % q == 0
                    && (1..a).all(|b| (numtheory::checked_pow(p, b).unwrap() - 1) % q != 0)
            }
            Ok(None) => true,
            Err(_) => false,
        })
    });
    checks.push(Check::new(
        "numtheory.zsigmondy.primitive",
        "each returned prime divides p^a − 1 and no earlier p^b − 1 (p ≤ 31, a ≤ 12)",
        Status::from_bool(primitive),
        Value::Null,
    ));

    let found = norcond_search();
    let all_hold = found.iter().all(|(_, _, _, v)| matches!(v, NorCondVerdict::Checked { holds: true, .. }));
    let sample: Vec<Value> = found.iter().take(10).map(|(p, q, n, v)| json!({ "p": p, "q": q, "n": n, "verdict": v })).collect();
    checks.push(Check::new(
        "numtheory.norcond.search",
        "(p^n − 1)_q = q^a (p^m − 1)_q on every searched triple with q² | p^m − 1",
        Status::from_bool(!found.is_empty() && all_hold),
        json!({ "triples": found.len(), "sample": sample }),
    ));
    for (p, q, n) in [(2u64, 3u64, 18u64), (2, 5, 20)] {
        let id = format!("numtheory.norcond.p={p},q={q},n={n}");
        let claim = "identity for a triple outside the hypothesis";
        checks.push(match numtheory::norcond_check(p, q, n) {
            Ok(v @ NorCondVerdict::HypothesisNotMet { .. }) => Check::new(id, claim, Status::HypothesisNotMet, json!(v)),
            Ok(v) => Check::new(id, claim, Status::from_bool(matches!(v, NorCondVerdict::Checked { holds: true, .. })), json!(v)),
            Err(e) => Check::error(id, claim, e),
        });
    }

    let numcond = [(0u64, 3u32, true), (3, 3, true), (1, 3, false), (2, 4, false)];
    let ok = numcond.iter().all(|&(h, d, want)| numtheory::numcond_solvable(h, d) == Ok(want));
    checks.push(Check::new(
        "numtheory.numcond.examples",
        "2^h + 1 ≡ 2^j mod 2^d − 1 solvable for (0,3), (3,3); not for (1,3), (2,4)",
        Status::from_bool(ok),
        json!(numcond.iter().map(|&(h, d, _)| json!({ "h": h, "d": d, "solvable": numtheory::numcond_solvable(h, d).ok() })).collect::<Vec<_>>()),
    ));
    let nonex = [(6u64, 2u64, vec![3u64]), (12, 4, vec![3]), (18, 6, vec![9])];
    let ok = nonex.iter().all(|(n, k, want)| {
        numtheory::nonex_d_values(*n, *k).map(|v| v.iter().map(|e| e.d).collect::<Vec<_>>()).as_ref() == Ok(want)
    });
    checks.push(Check::new(
        "numtheory.nonex.examples",
        "prime powers d | n with d ∤ k for (6,2), (12,4), (18,6)",
        Status::from_bool(ok),
        Value::Null,
    ));
    checks
}

fn suzuki_suite(opts: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let n = opts.n.unwrap_or(3);
    let h = opts.h.unwrap_or(1);
    let m = suzuki_group(n, h, opts.cap).map_err(|e| VerifyError::BadParameter(e.to_string()))?;
    let pre = format!("suzuki.n={n},h={h}");
    let mut checks = Vec::new();

    match m.materialized() {
        Ok((g, nsub)) => {
            let z = center(g);
            let ok = g.order() as u64 == 1u64 << (2 * n)
                && &z == nsub
                && &derived_subgroup(g) == nsub
                && &frattini_subgroup(g) == nsub;
            checks.push(Check::new(
                format!("{pre}.structure"),
                "|A| = 2^(2n) and N = Z(A) = A′ = Φ(A)",
                Status::from_bool(ok),
                json!({ "order": g.order(), "n": nsub.order() }),
            ));
            let inv_ok = g.ids().all(|x| g.pow(x, 4) == 0 && (g.element_order(x) != 2 || nsub.contains(x)));
            checks.push(Check::new(format!("{pre}.involutions"), "exponent 4 and every involution lies in N", Status::from_bool(inv_ok), Value::Null));
        }
        Err(_) => checks.push(Check::new(
            format!("{pre}.structure"),
            "|A| = 2^(2n) and N = Z(A) = A′ = Φ(A)",
            Status::Partial,
            json!({ "note": "group exceeds the materialization cap" }),
        )),
    }

    let sq = squaring_bijection_check(&m);
    let status = if sq.image_size.is_some() { Status::from_bool(sq.bijective) } else { Status::Partial };
    checks.push(Check::new(format!("{pre}.squaring"), "bN ↦ b² is a well-defined bijection M/N → N", status, json!(sq)));

    if n <= 6 {
        let claim = "A₁ is normalized by A₂ and A₃ with the displayed conjugation formulas";
        checks.push(match conjugation_relations_check(&m, 64) {
            Ok(r) => {
                let status = if !r.holds() { Status::Fail } else if r.exhaustive { Status::Pass } else { Status::Partial };
                Check::new(format!("{pre}.relations"), claim, status, json!(r))
            }
            Err(e) => Check::error(format!("{pre}.relations"), claim, e),
        });
    }

    let exhaustive = n <= 4;
    let f = m.field().clone();
    let reports: Vec<_> = f.nonzero_elements().collect::<Vec<_>>().into_par_iter().map(|x| centralizer_in_a1(&m, x, exhaustive)).collect();
    let solvable = numtheory::numcond_solvable(h as u64, n).unwrap_or(true);
    let mut ok = true;
    let mut nontrivial = 0;
    for r in &reports {
        match r {
            Ok(r) => {
                ok &= r.routes_agree && r.criterion_holds;
                if r.linear_dimension > 0 {
                    nontrivial += 1;
                }
                if r.order_of_x == (1u64 << n) - 1 {
                    ok &= (r.linear_dimension > 0) == solvable;
                }
            }
            Err(_) => ok = false,
        }
    }
    checks.push(Check::new(
        format!("{pre}.centralizer"),
        "C_{A₁}(φ_x) ≠ 1 iff xΘ(x) = x^(2^j) iff 2^h + 1 ≡ 2^j mod o(x); linear and exhaustive routes agree",
        Status::from_bool(ok),
        json!({ "exhaustive": exhaustive, "nontrivial": nontrivial, "numcondSolvable": solvable }),
    ));

    let k = n / m.theta_order;
    let nonex = numtheory::nonex_d_values_for(n as u64, k as u64, h as u64);
    checks.push(Check::new(
        format!("{pre}.nonex"),
        "prime powers d | n with d ∤ n/o(Θ), with solvability of 2^h + 1 ≡ 2^j mod 2^d − 1",
        Status::from_bool(nonex.is_ok()),
        json!(nonex.ok()),
    ));

    if opts.full_aut {
        let claim = "|Aut(A)| = 2^(n²)(2^n − 1)n, every automorphism lies in A₁A₂A₃, C_Aut(N) = A₁";
        checks.push(match brute_force_aut(&m) {
            Ok(r) => Check::new(format!("{pre}.aut"), claim, Status::from_bool(r.holds()), json!(r)),
            Err(e) => Check::error(format!("{pre}.aut"), claim, e),
        });
    }
    Ok(checks)
}

fn bounds_suite(opts: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let family = opts.family.as_deref().unwrap_or("all");
    let families: Vec<&str> = match family {
        "heis" => vec!["heis"],
        "agl1" => vec!["agl1"],
        "all" => vec!["heis", "agl1"],
        other => return Err(VerifyError::UnknownFamily(other.to_string())),
    };
    let mut jobs: Vec<(&str, u64)> = Vec::new();
    for fam in families {
        let qs = if opts.q.is_empty() {
            match fam {
                "heis" => vec![3, 4, 5, 7, 8],
                _ => vec![3, 4, 5, 7, 8, 9],
            }
        } else {
            opts.q.clone()
        };
        jobs.extend(qs.into_iter().map(|q| (fam, q)));
    }
    let mut checks: Vec<Check> = jobs.par_iter().flat_map_iter(|&(fam, q)| family_checks(fam, q, opts.cap)).collect();
    checks.extend(small_pair_checks(opts.cap));
    Ok(checks)
}

fn family_checks(fam: &str, q: u64, cap: usize) -> Vec<Check> {
    let spec = format!("{fam}:q={q}");
    let pre = format!("bounds.{spec}");
    let claim = if fam == "heis" {
        "Gagola with e = q, d = q(q−1), |G| = e⁴ − e³ and all bounds"
    } else {
        "Gagola with e = 1, d = q − 1, and G a 2-transitive Frobenius group"
    };
    let sg = match parse_group(&spec, cap.max(4096)) {
        Ok(sg) => sg,
        Err(e) => return vec![Check::error(format!("{pre}.certificate"), claim, e)],
    };
    let (g, n) = (&sg.group, sg.designated.as_ref().expect("designated subgroup"));
    let cert = match is_gagola_pair_with_cap(g, n, TABLE_CAP.max(cap)) {
        Ok(c) => c,
        Err(e) => return vec![Check::error(format!("{pre}.certificate"), claim, e)],
    };
    let bounds = verify_bounds(g, n, &cert);
    let mut out = Vec::new();
    let ok = match (&bounds, cert.d, cert.e) {
        (Ok(b), Some(d), Some(e)) => {
            let shape = if fam == "heis" {
                e == q && d == q * (q - 1) && cert.order == e.pow(4) - e.pow(3)
            } else {
                e == 1 && d == q - 1 && is_sharply_two_transitive(g)
            };
            cert.is_gagola && b.holds() && shape && cert.p_complement_index == Some(cert.n_order - 1)
        }
        _ => false,
    };
    out.push(Check::new(
        format!("{pre}.certificate"),
        claim,
        Status::from_bool(ok),
        json!({ "certificate": cert.to_json(), "bounds": bounds.as_ref().ok() }),
    ));

    if cert.p == Some(2) && cert.is_gagola {
        let claim = "involutions of G/N lie in O₂(G)/N; |G:N|₂ ≥ |N|² when O₂(G)/N has exponent > 2";
        out.push(match involution_lemma_checks(g, n, &cert) {
            Ok(r) => Check::new(format!("{pre}.involutions"), claim, Status::from_bool(r.holds()), json!(r)),
            Err(e) => Check::error(format!("{pre}.involutions"), claim, e),
        });
    }
    if let (Some(p), true) = (cert.p, cert.is_gagola) {
        let overs = abelian_overgroups(g, n, p);
        let claim = "|P:M| ≥ |M:N| for normal abelian p-subgroups M > N";
        if overs.is_empty() {
            out.push(Check::new(format!("{pre}.overgroups"), claim, Status::Pass, json!({ "note": "no qualifying M" })));
        } else {
            let verdicts: Vec<_> = overs.iter().map(|m| abelian_overgroup_bound(g, n, &cert, m)).collect();
            let ok = verdicts.iter().all(|v| v.as_ref().is_ok_and(|v| v.holds()));
            let ws: Vec<Value> = verdicts.into_iter().filter_map(|v| v.ok()).map(|v| json!(v)).collect();
            out.push(Check::new(format!("{pre}.overgroups"), claim, Status::from_bool(ok), json!(ws)));
        }
    }
    out
}

fn small_pair_checks(cap: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let pairs = [
        ("q8", "perm:m=8;gens=(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)", 2u64, 2u64),
        ("extraspecial27", "perm:m=9;gens=(1,2,3)(4,5,6)(7,8,9),(2,5,8)(3,9,6)", 0, 0),
    ];
    for (name, spec, d, e) in pairs {
        let Ok(sg) = parse_group(spec, cap) else { continue };
        let g = &sg.group;
        let z = center(g);
        let claim = "|G:N| ≥ |N|² and G′ = N for a Camina pair of a p-group with G/N abelian";
        out.push(match camina_abelian_quotient_bound(g, &z) {
            Ok(v) => Check::new(format!("bounds.{name}.abel-pair"), claim, Status::from_bool(v.holds()), json!(v)),
            Err(err) => Check::error(format!("bounds.{name}.abel-pair"), claim, err),
        });
        if d > 0 {
            let claim = "(Q₈, Z) is Gagola with d = 2, e = 2, |G| = 8 = e⁴ − e³";
            let ok = is_gagola_pair_with_cap(g, &z, cap.max(TABLE_CAP))
                .ok()
                .filter(|c| c.is_gagola && c.d == Some(d) && c.e == Some(e))
                .and_then(|c| verify_bounds(g, &z, &c).ok())
                .is_some_and(|b| b.holds() && b.order == e.pow(4) - e.pow(3));
            out.push(Check::new(format!("bounds.{name}.certificate"), claim, Status::from_bool(ok), Value::Null));
        }
    }

    let claim = "K∖M contains an involution when (K, M, N) meets the hypotheses";
    match parse_group("perm:m=4;gens=(1,2,3,4),(1,2)", cap) {
        Ok(sg) => {
            let k = &sg.group;
            let a4 = derived_subgroup(k);
            let v4 = normal_subgroups(k).into_iter().find(|s| s.order() == 4).unwrap_or_else(|| k.trivial());
            out.push(match lemma_five_check(k, &a4, &v4) {
                Ok(Some(x)) => Check::new("bounds.lemma-five.s4", claim, Status::Pass, json!({ "involution": k.element(x).to_string() })),
                Ok(None) => Check::new("bounds.lemma-five.s4", claim, Status::Fail, Value::Null),
                Err(e) => Check::error("bounds.lemma-five.s4", claim, e),
            });
        }
        Err(e) => out.push(Check::error("bounds.lemma-five.s4", claim, e)),
    }
    if let Ok(sg) = parse_group("perm:m=5;gens=(1,2,3),(1,2),(4,5)", cap) {
        let k = &sg.group;
        let n = center(k);
        let three = k.ids().find(|&x| k.element_order(x) == 3).expect("element of order 3");
        let m = k.subgroup_generated(&[three, n.members()[1]]);
        out.push(match lemma_five_check(k, &m, &n) {
            Err(CaminaError::HypothesisViolated(r)) => {
                Check::new("bounds.lemma-five.s3xc2", claim, Status::HypothesisNotMet, json!({ "reason": r }))
            }
            Ok(w) => Check::new("bounds.lemma-five.s3xc2", claim, Status::from_bool(w.is_some()), Value::Null),
            Err(e) => Check::error("bounds.lemma-five.s3xc2", claim, e),
        });
    }
    out
}

/// Orthogonality and `Σ d² = |G|` for one group.
pub fn table_check(spec: &str, cap: usize) -> Check {
    let id = format!("charcheck.table.{spec}");
    let claim = "row and column orthogonality hold exactly and Σ d² = |G|";
    let sg = match parse_group(spec, cap) {
        Ok(sg) => sg,
        Err(e) => return Check::error(id, claim, e),
    };
    match character_table_with_cap(&sg.group, TABLE_CAP.max(cap)) {
        Ok(t) => {
            let r = t.check_orthogonality();
            let sum: u64 = t.degrees.iter().map(|d| d * d).sum();
            Check::new(
                id,
                claim,
                Status::from_bool(r.holds() && sum == t.order as u64),
                json!({ "order": t.order, "classes": t.num_classes(), "degrees": t.degrees }),
            )
        }
        Err(e) => Check::error(id, claim, e),
    }
}

/// Compares the three Camina conditions over every normal subgroup.
pub fn camina_equivalence_check(spec: &str, cap: usize) -> Check {
    let id = format!("charcheck.camina.{spec}");
    let claim = "the three Camina conditions agree on every proper nontrivial normal subgroup";
    let sg = match parse_group(spec, cap) {
        Ok(sg) => sg,
        Err(e) => return Check::error(id, claim, e),
    };
    let g = &sg.group;
    let mut pairs = 0;
    let mut camina = 0;
    for n in normal_subgroups(g).iter().filter(|n| !n.is_trivial() && n.order() < g.order()) {
        pairs += 1;
        match is_camina_pair(g, n) {
            Ok(ev) => camina += ev.holds() as usize,
            Err(e) => return Check::error(id, claim, e),
        }
    }
    Check::new(id, claim, Status::Pass, json!({ "normalSubgroups": pairs, "caminaPairs": camina }))
}

fn charcheck_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks: Vec<Check> = TABLE_CORPUS.par_iter().map(|s| table_check(s, opts.cap)).collect();
    checks.extend(CAMINA_CORPUS.par_iter().map(|s| camina_equivalence_check(s, opts.cap)).collect::<Vec<_>>());

    let claim = "each coset xP′ outside P′ has y with C_{P/Z}(yZ) = C_P(y)P′/Z";
    let spec = "perm:m=9;gens=(1,2,3),(1,4,7)(2,5,8)(3,6,9)";
    checks.push(match parse_group(spec, opts.cap) {
        Ok(sg) => {
            let p = &sg.group;
            let z = lower_central_series(p)[2].clone();
            match find_class3_sigma(p, &z).map(|s| class3_lemma_check(p, &z, &s)) {
                Some(Ok(r)) => Check::new("charcheck.class3", claim, Status::from_bool(r.holds()), json!(r)),
                Some(Err(e)) => Check::error("charcheck.class3", claim, e),
                None => Check::new("charcheck.class3", claim, Status::HypothesisNotMet, json!({ "reason": "no suitable automorphism" })),
            }
        }
        Err(e) => Check::error("charcheck.class3", claim, e),
    });
    checks
}

fn frobenius_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let claim = "order-p subgroups unique in Z-groups and normal except for p = 3 with quaternion Sylow 2";
    match frobenius_instances() {
        Ok(inst) => {
            for h in &inst {
                let id = format!("frobenius.complement.{}", h.label().split_whitespace().next().unwrap_or("H"));
                checks.push(match frobenius_complement_checks(h) {
                    Ok(r) => Check::new(id, claim, Status::from_bool(r.holds()), json!(r)),
                    Err(e) => Check::error(id, claim, e),
                });
            }
        }
        Err(e) => checks.push(Check::error("frobenius.complement", claim, e)),
    }
    for (p, n) in [(2u64, 1u32), (2, 4), (3, 2), (2, 6), (5, 2)] {
        let id = format!("frobenius.semilinear.p={p},n={n}");
        let claim = "|Γ| = (p^n − 1)n and C_Γ(Γ_o) = Γ_o";
        checks.push(match semilinear_group(p, n, opts.cap) {
            Ok(s) => {
                let q = p.pow(n);
                let ok = s.group.order() as u64 == (q - 1) * n as u64
                    && s.gamma_o.order() as u64 == q - 1
                    && s.centralizer_check();
                Check::new(id, claim, Status::from_bool(ok), json!({ "order": s.group.order() }))
            }
            Err(e) => Check::error(id, claim, e),
        });
    }
    for n in [4u32, 6, 9] {
        let id = format!("frobenius.singer.n={n}");
        let claim = "transitive subgroups of order 2^n − 1 meet Γ_o in elements of order 2^d − 1 for prime powers d | n";
        checks.push(match singer_transitive_subgroups(2, n, (1 << n) - 1, opts.cap) {
            Ok(r) => {
                let status = if !r.holds { Status::Fail } else if r.is_partial() { Status::Partial } else { Status::Pass };
                Check::new(id, claim, status, json!(r))
            }
            Err(e) => Check::error(id, claim, e),
        });
    }
    checks
}

fn sl2_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    for q in [2u64, 4, 8, 16] {
        let id = format!("sl2.order.q={q}");
        let claim = "|SL₂(q)| = (q − 1)q(q + 1)";
        checks.push(match sl2(q, opts.cap) {
            Ok(g) => Check::new(id, claim, Status::from_bool(Some(g.order() as u128) == sl2_order(q)), json!({ "order": g.order() })),
            Err(e) => Check::error(id, claim, e),
        });
    }
    for n in 1..=30 {
        let id = format!("sl2.three-part.n={n}");
        let claim = "|SL₂(2^n)|₃ = 3^(a+1) where 3^a = n₃";
        checks.push(match numtheory::sl2_three_part_check(n) {
            Ok(v) => Check::new(id, claim, Status::from_bool(v.holds()), json!(v)),
            Err(e) => Check::error(id, claim, e),
        });
    }
    let claim = "the twisted tensor module of SL₂(8) and the natural module have no nonzero vectors fixed by a Sylow 3-subgroup";
    checks.push(match twisted_tensor_check(3, opts.cap) {
        Ok(r) => Check::new("sl2.twisted-tensor.n=3", claim, Status::from_bool(r.holds()), json!(r)),
        Err(e) => Check::error("sl2.twisted-tensor.n=3", claim, e),
    });
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numtheory_suite_passes() {
        let r = run_suite("numtheory", &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert!(r.ids_unique());
        assert!(r.checks.iter().any(|c| c.status == Status::HypothesisNotMet));
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("nope", &VerifyOptions::default()).unwrap_err(),
            VerifyError::UnknownSuite("nope".into())
        );
    }

    #[test]
    fn zsigmondy_exception_set() {
        let ex = zsigmondy_exceptions(31, 12).unwrap();
        assert_eq!(ex, vec![(2, 6), (3, 2), (7, 2), (31, 2)]);
    }
}

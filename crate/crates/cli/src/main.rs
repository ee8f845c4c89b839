use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use gagola_core::camina::{self, PairCertificate};
use gagola_core::chartable::{self, TABLE_CAP};
use gagola_core::group::{self, FiniteGroup, GroupElement, Subgroup, DEFAULT_CAP};
use gagola_core::spec::{self, SpecError, SpecGroup};
use gagola_core::verify::{self, VerifyError, VerifyOptions, SUITES};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gagola", version, about = "Check Camina and Gagola pairs, character tables and the Suzuki 2-group harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to materialize.
    #[arg(long, env = "GAGOLA_CAP", global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a report.
    Verify {
        /// numtheory, suzuki, bounds, charcheck, frobenius, sl2 or all.
        suite_arg: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        /// Family for the bounds suite: heis, agl1 or all.
        #[arg(long)]
        family: Option<String>,
        /// Field sizes, comma separated; `8` and `2^3` both work.
        #[arg(long, value_delimiter = ',')]
        q: Vec<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
        /// Enumerate the whole automorphism group of the Suzuki group.
        #[arg(long)]
        full_aut: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Certify a pair (G, N). Without a selector every minimal normal
    /// subgroup is tried, unless the family designates one.
    Certify {
        spec: String,
        /// designated, minimal, center, derived, order=<k>, or cycle
        /// generators such as `(1,2)(3,4)` for permutation groups.
        #[arg(long = "n")]
        n: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the character table of a group.
    Chartable {
        spec: String,
        #[command(flatten)]
        common: Common,
    },
}

/// Failure class that decides the exit code.
enum Failure {
    Usage(anyhow::Error),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let usage = e.chain().any(|c| {
            matches!(c.downcast_ref::<SpecError>(), Some(SpecError::Parse { .. })) || c.downcast_ref::<VerifyError>().is_some()
        });
        if usage {
            Failure::Usage(e)
        } else {
            Failure::Other(e)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Verify { suite_arg, suite, family, q, n, h, full_aut, common } => {
            cmd_verify(suite_arg, suite, family, q, n, h, full_aut, &common)
        }
        Command::Certify { spec, n, common } => cmd_certify(&spec, n.as_deref(), &common),
        Command::Chartable { spec, common } => cmd_chartable(&spec, &common),
    };
    eprintln!("wall time {:.3}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite_arg: Option<String>,
    suite: Option<String>,
    family: Option<String>,
    q: Vec<String>,
    n: Option<u32>,
    h: Option<u32>,
    full_aut: bool,
    common: &Common,
) -> Result<bool, Failure> {
    let suite = match (suite_arg, suite) {
        (Some(a), Some(b)) if a != b => return Err(Failure::Usage(anyhow!("suite given twice: `{a}` and `{b}`"))),
        (Some(s), _) | (None, Some(s)) => s,
        (None, None) => return Err(Failure::Usage(anyhow!("no suite given; expected one of {}", SUITES.join(", ")))),
    };
    let q = q
        .iter()
        .map(|s| spec::parse_q(s).ok_or_else(|| Failure::Usage(anyhow!("bad field size `{s}`"))))
        .collect::<Result<Vec<u64>, Failure>>()?;
    let opts = VerifyOptions { cap: common.cap.unwrap_or(DEFAULT_CAP), family, q, n, h, full_aut };
    let report = verify::run_suite(&suite, &opts).map_err(anyhow::Error::from)?;
    if common.json {
        print_json(&report.to_json());
    } else {
        print!("{}", report.render());
    }
    Ok(report.passed())
}

fn select_subgroups(sg: &SpecGroup, selector: Option<&str>) -> anyhow::Result<Vec<Subgroup>> {
    let g = &sg.group;
    let selector = match selector {
        Some(s) => s.trim(),
        None => return Ok(sg.designated.clone().map_or_else(|| group::minimal_normal_subgroups(g), |n| vec![n])),
    };
    Ok(match selector {
        "designated" => vec![sg.designated.clone().ok_or_else(|| anyhow!("`{}` has no designated subgroup", sg.spec))?],
        "minimal" => group::minimal_normal_subgroups(g),
        "center" => vec![group::center(g)],
        "derived" => vec![group::derived_subgroup(g)],
        s if s.starts_with("order=") => {
            let k: usize = s["order=".len()..].trim().parse().with_context(|| format!("bad subgroup order in `{s}`"))?;
            let found: Vec<Subgroup> = group::normal_subgroups(g).into_iter().filter(|n| n.order() == k).collect();
            if found.is_empty() {
                bail!("no normal subgroup of order {k}");
            }
            found
        }
        s if s.starts_with('(') => vec![subgroup_from_cycles(g, &sg.spec, s)?],
        s => {
            return Err(SpecError::Parse { spec: s.to_string(), reason: "unknown subgroup selector".into() }.into());
        }
    })
}

fn subgroup_from_cycles(g: &FiniteGroup, spec: &str, text: &str) -> anyhow::Result<Subgroup> {
    let degree = match g.generators().first() {
        Some(GroupElement::Perm(p)) => p.len(),
        _ => bail!("cycle selectors need a permutation group"),
    };
    let mut ids = Vec::new();
    for cycles in spec::parse_generators(spec, text)? {
        let x = GroupElement::perm_from_cycles(degree, &cycles)?;
        ids.push(g.id_of(&x).ok_or_else(|| anyhow!("{text} is not an element of the group"))?);
    }
    Ok(g.subgroup_generated(&ids))
}

fn cmd_certify(spec_text: &str, selector: Option<&str>, common: &Common) -> Result<bool, Failure> {
    let sg = spec::parse_group(spec_text, common.cap.unwrap_or(DEFAULT_CAP)).map_err(anyhow::Error::from)?;
    let g = &sg.group;
    let table_cap = common.cap.map_or(TABLE_CAP, |c| c.max(TABLE_CAP));
    let mut ok = true;
    let mut out = Vec::new();
    for n in select_subgroups(&sg, selector).map_err(Failure::Usage)? {
        if !group::is_normal(g, &n) {
            return Err(Failure::Usage(anyhow!("the selected subgroup of order {} is not normal", n.order())));
        }
        let cert = camina::is_gagola_pair_with_cap(g, &n, table_cap).map_err(anyhow::Error::from)?;
        let harness = bounds_for(g, &n, &cert)?;
        ok &= harness.as_ref().map_or(true, |h| h.1);
        let mut v = cert.to_json();
        if let Some((report, _)) = harness {
            v["boundsHarness"] = report;
        }
        out.push((cert, v));
    }
    if common.json {
        if out.len() == 1 {
            print_json(&out[0].1);
        } else {
            print_json(&Value::Array(out.iter().map(|(_, v)| v.clone()).collect()));
        }
    } else {
        for (cert, _) in &out {
            print!("{}", render_certificate(cert));
        }
    }
    Ok(ok)
}

fn bounds_for(g: &FiniteGroup, n: &Subgroup, cert: &PairCertificate) -> anyhow::Result<Option<(Value, bool)>> {
    if !cert.is_gagola {
        return Ok(None);
    }
    let report = camina::verify_bounds(g, n, cert)?;
    let holds = report.holds();
    let mut v = camel_keys(serde_json::to_value(&report)?);
    v["holds"] = json!(holds);
    Ok(Some((v, holds)))
}

/// `n_squared_le_p_part` becomes `nSquaredLePPart`, matching pairCert/1.
fn camel_keys(v: Value) -> Value {
    match v {
        Value::Object(m) => Value::Object(
            m.into_iter()
                .map(|(k, v)| {
                    let mut out = String::new();
                    let mut up = false;
                    for ch in k.chars() {
                        if ch == '_' {
                            up = true;
                        } else if up {
                            out.extend(ch.to_uppercase());
                            up = false;
                        } else {
                            out.push(ch);
                        }
                    }
                    (out, v)
                })
                .collect(),
        ),
        other => other,
    }
}

fn render_certificate(c: &PairCertificate) -> String {
    let mut s = format!("{}: |G| = {}, |N| = {}, N = <{}>\n", c.group, c.order, c.n_order, c.n_generators.join(", "));
    s.push_str(&format!("  camina: {}\n", c.is_camina));
    if c.is_gagola {
        let show = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        s.push_str(&format!("  gagola: p = {}, d = {}, e = {}, |P:N| = {}\n", show(c.p), show(c.d), show(c.e), show(c.p_index)));
    } else {
        s.push_str(&format!("  gagola: no ({})\n", c.reason.as_deref().unwrap_or("unknown")));
    }
    s
}

fn cmd_chartable(spec_text: &str, common: &Common) -> Result<bool, Failure> {
    let sg = spec::parse_group(spec_text, common.cap.unwrap_or(DEFAULT_CAP)).map_err(anyhow::Error::from)?;
    let table_cap = common.cap.map_or(TABLE_CAP, |c| c.max(TABLE_CAP));
    let table = chartable::character_table_with_cap(&sg.group, table_cap).map_err(anyhow::Error::from)?;
    let orth = table.check_orthogonality();
    if common.json {
        print_json(&table.to_json());
    } else {
        print!("{}", table.render());
    }
    Ok(orth.holds())
}

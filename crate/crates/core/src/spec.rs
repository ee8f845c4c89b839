//! Group specifications such as `perm:m=3;gens=(1,2),(1,2,3)`,
//! `suzuki:n=3;h=1`, `heis:q=3`, `agl1:q=2^3`, `sl2:q=8`, `gamma:p=2;n=4`.

use std::collections::HashMap;

use thiserror::Error;

use crate::constructions::{self, ConstructionError};
use crate::group::{generate_group, FiniteGroup, GroupElement, GroupError, Subgroup};
use crate::suzuki::{self, SuzukiError, SuzukiGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Suzuki(#[from] SuzukiError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T> = std::result::Result<T, SpecError>;

/// A parsed and materialized group.
pub struct SpecGroup {
    pub spec: String,
    pub group: FiniteGroup,
    /// The normal subgroup the family singles out, if any.
    pub designated: Option<Subgroup>,
    pub suzuki: Option<SuzukiGroup>,
}

fn parse_err(spec: &str, reason: impl Into<String>) -> SpecError {
    SpecError::Parse { spec: spec.to_string(), reason: reason.into() }
}

/// Accepts `8` or `2^3`.
pub fn parse_q(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.split_once('^') {
        Some((b, e)) => b.trim().parse::<u64>().ok()?.checked_pow(e.trim().parse().ok()?),
        None => s.parse().ok(),
    }
}

fn params(spec: &str, body: &str) -> Result<HashMap<String, String>> {
    let mut out = HashMap::new();
    for part in body.split(';').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| parse_err(spec, format!("expected key=value, got `{part}`")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn take<T: std::str::FromStr>(spec: &str, p: &HashMap<String, String>, key: &str) -> Result<T> {
    let v = p.get(key).ok_or_else(|| parse_err(spec, format!("missing `{key}`")))?;
    v.parse().map_err(|_| parse_err(spec, format!("bad value for `{key}`: `{v}`")))
}

fn take_q(spec: &str, p: &HashMap<String, String>) -> Result<u64> {
    let v = p.get("q").ok_or_else(|| parse_err(spec, "missing `q`"))?;
    parse_q(v).ok_or_else(|| parse_err(spec, format!("bad value for `q`: `{v}`")))
}

/// Generators as lists of cycles. Generators are separated by `,` or `;`
/// between a closing and an opening parenthesis; `()` is the identity.
pub fn parse_generators(spec: &str, text: &str) -> Result<Vec<Vec<Vec<u32>>>> {
    let mut gens = Vec::new();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut started = false;
    let mut chars = text.trim().chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '(' => {
                let mut body = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(ch) => body.push(ch),
                        None => return Err(parse_err(spec, "unclosed cycle")),
                    }
                }
                if !body.trim().is_empty() {
                    let cycle = body
                        .split(',')
                        .map(|x| x.trim().parse::<u32>().map_err(|_| parse_err(spec, format!("bad point `{x}`"))))
                        .collect::<Result<Vec<u32>>>()?;
                    cycles.push(cycle);
                }
                started = true;
            }
            ',' | ';' if started => {
                gens.push(std::mem::take(&mut cycles));
                started = false;
            }
            c if c.is_whitespace() => {}
            other => return Err(parse_err(spec, format!("unexpected `{other}`"))),
        }
    }
    if started {
        gens.push(cycles);
    }
    if gens.is_empty() {
        return Err(parse_err(spec, "no generators"));
    }
    Ok(gens)
}

pub fn parse_group(spec: &str, cap: usize) -> Result<SpecGroup> {
    let spec = spec.trim();
    let (kind, body) = spec.split_once(':').ok_or_else(|| parse_err(spec, "missing family prefix"))?;
    let done = |group: FiniteGroup, designated: Option<Subgroup>, suzuki: Option<SuzukiGroup>| SpecGroup {
        spec: spec.to_string(),
        group: group.with_label(spec),
        designated,
        suzuki,
    };
    match kind.trim() {
        "perm" => {
            let (mpart, rest) = body.split_once(';').ok_or_else(|| parse_err(spec, "expected m=<n>;gens=..."))?;
            let m: usize = mpart
                .trim()
                .strip_prefix("m=")
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| parse_err(spec, "bad `m`"))?;
            let gtext = rest.trim().strip_prefix("gens=").ok_or_else(|| parse_err(spec, "missing `gens=`"))?;
            let gens = parse_generators(spec, gtext)?
                .iter()
                .map(|c| GroupElement::perm_from_cycles(m, c))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(done(generate_group(&gens, cap)?, None, None))
        }
        "suzuki" => {
            let p = params(spec, body)?;
            let m = suzuki::suzuki_group(take(spec, &p, "n")?, take(spec, &p, "h")?, cap)?;
            let (g, n) = m.materialized()?;
            let (g, n) = (g.clone(), n.clone());
            Ok(done(g, Some(n), Some(m)))
        }
        "heis" => {
            let c = constructions::heisenberg_gagola(take_q(spec, &params(spec, body)?)?, cap)?;
            Ok(done(c.group, Some(c.n), None))
        }
        "agl1" => {
            let c = constructions::agl1(take_q(spec, &params(spec, body)?)?, cap)?;
            Ok(done(c.group, Some(c.n), None))
        }
        "sl2" => Ok(done(constructions::sl2(take_q(spec, &params(spec, body)?)?, cap)?, None, None)),
        "gamma" => {
            let p = params(spec, body)?;
            let s = constructions::semilinear_group(take(spec, &p, "p")?, take(spec, &p, "n")?, cap)?;
            Ok(done(s.group, None, None))
        }
        other => Err(parse_err(spec, format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_generator_separators() {
        let a = parse_group("perm:m=3;gens=(1,2),(1,2,3)", 100).unwrap();
        let b = parse_group("perm:m=3;gens=(1,2);(1,2,3)", 100).unwrap();
        assert_eq!(a.group.order(), 6);
        assert_eq!(b.group.order(), 6);
        let q8 = parse_group("perm:m=8;gens=(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)", 100).unwrap();
        assert_eq!(q8.group.order(), 8);
        assert_eq!(parse_group("perm:m=2;gens=()", 10).unwrap().group.order(), 1);
    }

    #[test]
    fn families() {
        assert_eq!(parse_group("heis:q=3", 20_000).unwrap().group.order(), 54);
        assert_eq!(parse_group("agl1:q=2^3", 20_000).unwrap().group.order(), 56);
        assert_eq!(parse_group("sl2:q=4", 20_000).unwrap().group.order(), 60);
        assert_eq!(parse_group("gamma:p=2;n=4", 20_000).unwrap().group.order(), 60);
        let s = parse_group("suzuki:n=3;h=1", 20_000).unwrap();
        assert_eq!(s.group.order(), 64);
        assert_eq!(s.designated.unwrap().order(), 8);
        assert_eq!(s.group.label(), "suzuki:n=3;h=1");
    }

    #[test]
    fn errors() {
        for bad in ["perm:m=3;gens=(1,2", "perm:gens=(1,2)", "heis:q=six", "foo:q=2", "heis", "perm:m=3;gens=(1,x)"] {
            assert!(matches!(parse_group(bad, 100), Err(SpecError::Parse { .. })), "{bad}");
        }
        assert!(matches!(parse_group("heis:q=6", 100), Err(SpecError::Construction(_))));
        assert!(matches!(parse_group("perm:m=3;gens=(1,4)", 100), Err(SpecError::Group(_))));
        assert!(matches!(parse_group("heis:q=9", 100), Err(SpecError::Construction(ConstructionError::Group(GroupError::CapExceeded(_))))));
    }
}

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Explicit group description by Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDefinition {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupDefinition {
    pub fn build(&self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::NotAGroup(format!("table has {} rows, order is {}", self.table.len(), self.order)));
        }
        FiniteGroup::from_cayley(self.table.clone())
    }

    pub fn of(g: &FiniteGroup) -> Self {
        GroupDefinition { order: g.order(), table: g.table() }
    }
}

/// Parses family names such as `C6`, `D4`, `Q8`, `S3`, `A4`, `Heis3`,
/// `E(2,3)`, and direct products `C2xC4` or `C2^3`.
pub fn parse_group(s: &str) -> Result<FiniteGroup> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut result: Option<FiniteGroup> = None;
    for factor in s.split(['x', '×']) {
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => (b.trim(), p.trim().parse::<usize>().map_err(|_| bad(s))?),
            None => (factor.trim(), 1),
        };
        let g = parse_factor(base).map_err(|e| match e {
            Error::Parse(_) => bad(s),
            other => other,
        })?;
        for _ in 0..power {
            result = Some(match result {
                None => g.clone(),
                Some(acc) => FiniteGroup::direct_product(&acc, &g),
            });
        }
    }
    let g = result.unwrap_or_else(FiniteGroup::trivial);
    Ok(g.with_name(s.replace(' ', "")))
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("unrecognized group spec {s:?}"))
}

fn parse_factor(f: &str) -> Result<FiniteGroup> {
    if f == "1" {
        return Ok(FiniteGroup::trivial());
    }
    if let Some(args) = f.strip_prefix("E(").and_then(|r| r.strip_suffix(')')) {
        let (p, k) = args.split_once(',').ok_or_else(|| bad(f))?;
        let p = p.trim().parse().map_err(|_| bad(f))?;
        let k = k.trim().parse().map_err(|_| bad(f))?;
        return FiniteGroup::elementary_abelian(p, k);
    }
    let split = f.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad(f))?;
    let (name, num) = f.split_at(split);
    let n: usize = num.parse().map_err(|_| bad(f))?;
    match name {
        "C" => FiniteGroup::cyclic(n),
        "D" => FiniteGroup::dihedral(n),
        "S" => FiniteGroup::symmetric(n),
        "A" => FiniteGroup::alternating(n),
        "Heis" => FiniteGroup::heisenberg(n),
        "Q" if n == 8 => Ok(FiniteGroup::quaternion8()),
        _ => Err(bad(f)),
    }
}

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_ring::GroupRing;
use crate::ring::{FiniteRing, RingElement};

/// `[x,ₙ y] = [[x,ₙ₋₁ y], y]` with `[x,₁ y] = xy − yx`.
pub fn engel_bracket(b: &FiniteRing, x: &[i64], y: &[i64], n: usize) -> Result<RingElement> {
    if n == 0 {
        return Err(Error::InvalidParameter("Engel length must be at least 1".into()));
    }
    Ok((0..n).fold(x.to_vec(), |z, _| b.bracket(&z, y)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EngelOutcome {
    /// `[g,ₘ h] = 0` first at this `m`
    Vanishes { m: usize },
    /// the orbit enters a cycle of nonzero elements
    Cycles { start: usize, period: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngelPair {
    pub g: usize,
    pub h: usize,
    pub outcome: EngelOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct EngelReport {
    pub pairs: Vec<EngelPair>,
    pub engel: bool,
    pub first_non_engel: Option<EngelPair>,
}

fn orbit(b: &FiniteRing, x: &[i64], y: &[i64]) -> EngelOutcome {
    let mut seen: HashMap<RingElement, usize> = HashMap::new();
    let mut z = x.to_vec();
    let mut m = 0;
    loop {
        if b.is_zero(&z) {
            return EngelOutcome::Vanishes { m };
        }
        if let Some(&start) = seen.get(&z) {
            return EngelOutcome::Cycles { start, period: m - start };
        }
        seen.insert(z.clone(), m);
        z = b.bracket(&z, y);
        m += 1;
    }
}

/// Follows `[g,ₘ h]` for every pair of group elements until it vanishes or cycles.
pub fn engel_scan(gr: &GroupRing) -> EngelReport {
    let n = gr.group().order();
    let c = gr.carrier();
    let mut pairs = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let outcome = orbit(c, &gr.group_element(g), &gr.group_element(h));
            pairs.push(EngelPair { g, h, outcome });
        }
    }
    let first_non_engel = pairs.iter().find(|p| matches!(p.outcome, EngelOutcome::Cycles { .. })).cloned();
    EngelReport { engel: first_non_engel.is_none(), first_non_engel, pairs }
}

/// `[xᵏ, y] = k·xᵏ⁻¹[x, y]` under `[[x, y], x] = 0`.
pub fn commutator_power_identity_check(b: &FiniteRing, x: &[i64], y: &[i64], k: u64) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("exponent must be at least 1".into()));
    }
    let xy = b.bracket(x, y);
    if !b.is_zero(&b.bracket(&xy, x)) {
        return Err(Error::Precondition("[[x, y], x] is not zero".into()));
    }
    let lhs = b.bracket(&b.pow(x, k), y);
    let rhs = b.scale((k % b.exponent() as u64) as i64, &b.mul(&b.pow(x, k - 1), &xy));
    Ok(lhs == rhs)
}

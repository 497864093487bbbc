//! Series computed on explicit element sets, without the linear algebra layer.

use std::collections::BTreeSet;

use super::{FiniteLieRing, LieElement};
use crate::error::{cap_exceeded, Result};

type ElementSet = BTreeSet<LieElement>;

fn additive_closure(lie: &FiniteLieRing, seeds: ElementSet) -> ElementSet {
    let amb = lie.ambient();
    let gens: Vec<LieElement> = seeds.iter().filter(|v| !amb.is_zero(v)).cloned().collect();
    let mut set: ElementSet = BTreeSet::from([amb.zero()]);
    let mut frontier = vec![amb.zero()];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = amb.add(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn bracket_set(lie: &FiniteLieRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let brackets = a.iter().flat_map(|x| b.iter().map(move |y| lie.bracket(x, y))).collect();
    additive_closure(lie, brackets)
}

fn all_elements(lie: &FiniteLieRing, cap: u64) -> Result<ElementSet> {
    let it = lie.ambient().elements(cap).ok_or_else(|| cap_exceeded("dense Lie oracle", lie.ambient().cardinality(), cap))?;
    Ok(it.collect())
}

/// Orders of `γ₁, γ₂, …` up to the first repeated term.
pub fn lower_central_sizes(lie: &FiniteLieRing, cap: u64) -> Result<Vec<u64>> {
    let l = all_elements(lie, cap)?;
    let mut sizes = vec![l.len() as u64];
    let mut cur = l.clone();
    loop {
        let next = bracket_set(lie, &cur, &l);
        if next == cur {
            return Ok(sizes);
        }
        sizes.push(next.len() as u64);
        cur = next;
    }
}

/// Orders of `L⁽⁰⁾, L⁽¹⁾, …` up to the first repeated term.
pub fn derived_sizes(lie: &FiniteLieRing, cap: u64) -> Result<Vec<u64>> {
    let mut cur = all_elements(lie, cap)?;
    let mut sizes = vec![cur.len() as u64];
    loop {
        let next = bracket_set(lie, &cur, &cur);
        if next == cur {
            return Ok(sizes);
        }
        sizes.push(next.len() as u64);
        cur = next;
    }
}

//! Dense enumeration of derivations, independent of the linear solver.

use std::sync::Arc;

use num_bigint::BigUint;

use super::{extend_values, is_derivation, DerivationSpace};
use crate::error::{cap_exceeded, Result};
use crate::group_ring::GroupRing;
use crate::linalg::{Ambient, Submodule};
use crate::ring::{FiniteRing, RingElement};

/// Odometer over `choices[0] × choices[1] × …`, calling `f` on each tuple.
fn for_each_tuple(choices: &[Vec<RingElement>], mut f: impl FnMut(&[RingElement])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut cur: Vec<RingElement> = choices.iter().map(|c| c[0].clone()).collect();
    loop {
        f(&cur);
        let mut pos = 0;
        loop {
            if pos == choices.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                cur[pos] = choices[pos][idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            cur[pos] = choices[pos][0].clone();
            pos += 1;
        }
    }
}

/// Elements `v` of `amb` with `n·v = 0`: coordinate `j` runs over the
/// multiples of `oⱼ / gcd(n, oⱼ)`.
fn killed_by(amb: &Ambient, n: i64) -> Vec<RingElement> {
    let steps: Vec<Vec<RingElement>> = amb
        .orders()
        .iter()
        .map(|&o| {
            let g = num_integer::Integer::gcd(&n, &o);
            (0..g).map(|t| vec![t * (o / g)]).collect()
        })
        .collect();
    let mut out = Vec::new();
    for_each_tuple(&steps, |coords| out.push(coords.concat()));
    out
}

fn killed_count(amb: &Ambient, n: i64) -> BigUint {
    amb.orders().iter().map(|&o| BigUint::from(num_integer::Integer::gcd(&n, &o) as u64)).product()
}

/// Every derivation of `ring`, found by testing all candidate image tuples.
/// Returns the space and the number of derivations found.
pub fn oracle_der(ring: &Arc<FiniteRing>, cap: u64) -> Result<(DerivationSpace, u64)> {
    let amb = ring.ambient();
    let total: BigUint = amb.orders().iter().map(|&n| killed_count(amb, n)).product();
    if total > BigUint::from(cap) {
        return Err(cap_exceeded(format!("oracle for {}", ring.label()), total, cap));
    }
    let choices: Vec<Vec<RingElement>> = amb.orders().iter().map(|&n| killed_by(amb, n)).collect();
    let mut found = Vec::new();
    for_each_tuple(&choices, |images| {
        if is_derivation(ring, images).unwrap_or(false) {
            found.push(images.concat());
        }
    });
    let count = found.len() as u64;
    let module = Submodule::span(&super::map_ambient(ring), &found)?;
    Ok((DerivationSpace::new(Arc::clone(ring), module), count))
}

/// Every `R`-derivation of `R[G]`, found by testing all tuples of values `δ(g)`.
pub fn oracle_der_r(gr: &GroupRing, cap: u64) -> Result<(DerivationSpace, u64)> {
    let c = gr.carrier();
    let n = gr.group().order();
    let total = c.ambient().cardinality().pow(n as u32);
    if total > BigUint::from(cap) {
        return Err(cap_exceeded(format!("R-derivation oracle for {}", gr.label()), total, cap));
    }
    let choices = vec![c.elements(cap)?; n];
    let mut found = Vec::new();
    for_each_tuple(&choices, |values| {
        let images = extend_values(gr, &values.concat());
        let per_gen: Vec<RingElement> = images.chunks(c.rank()).map(<[i64]>::to_vec).collect();
        let vanishes_on_r = per_gen[..gr.block_size()].iter().all(|v| c.is_zero(v));
        // δ must also commute with the coefficient ring for the extension to be well defined
        let consistent = gr.ring().generators().iter().all(|r| {
            let rs = gr.scalar(r);
            (0..gr.group().order()).all(|g| {
                let dg = &values[g];
                c.mul(&rs, dg) == c.mul(dg, &rs)
            })
        });
        if vanishes_on_r && consistent && is_derivation(c, &per_gen).unwrap_or(false) {
            found.push(images);
        }
    });
    let count = found.len() as u64;
    let module = Submodule::span(&super::map_ambient(c), &found)?;
    Ok((DerivationSpace::new(gr.carrier_arc(), module), count))
}

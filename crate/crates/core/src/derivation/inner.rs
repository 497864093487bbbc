use std::sync::Arc;

use super::{Derivation, DerivationSpace};
use crate::error::{Error, Result};
use crate::group::SubgroupSet;
use crate::group_ring::GroupRing;
use crate::ring::{FiniteRing, RingElement};

/// `∂_a : x ↦ ax − xa`
pub fn inner(ring: &Arc<FiniteRing>, a: &[i64]) -> Derivation {
    let images = ring.generators().iter().map(|g| ring.bracket(a, g)).collect();
    Derivation::from_images(Arc::clone(ring), images)
}

/// Span of all inner derivations.
pub fn inner_space(ring: &Arc<FiniteRing>) -> DerivationSpace {
    let ds: Vec<Derivation> = ring.generators().iter().map(|g| inner(ring, g)).collect();
    DerivationSpace::span(Arc::clone(ring), &ds).expect("inner derivations live in the map ambient")
}

/// Some `a` with `∂_a = δ`, or `None` when `δ` is outer. The witness is the
/// canonical representative of its coset modulo the center.
pub fn is_inner(delta: &Derivation) -> Option<RingElement> {
    let ring = delta.ring();
    let gens = ring.generators();
    let k = gens.len();
    let hom = ring.stacked_hom(k, |i| gens.iter().flat_map(|g| ring.bracket(&gens[i], g)).collect());
    hom.solve(&delta.to_vector()).expect("target has codomain length").map(|(a, _)| a)
}

fn check_r_derivation(gr: &GroupRing, delta: &Derivation) -> Result<()> {
    if delta.ring() != gr.carrier() {
        return Err(Error::RingMismatch);
    }
    let k = gr.block_size();
    if delta.images()[..k].iter().any(|v| !gr.carrier().is_zero(v)) {
        return Err(Error::NotAnRDerivation);
    }
    if !super::is_derivation(gr.carrier(), delta.images())? {
        return Err(Error::NotADerivation("Leibniz rule fails".into()));
    }
    Ok(())
}

/// `x_H = |H|⁻¹ Σ_{a∈H} a⁻¹δ(a)`. On `R[H]` the derivation agrees with `∂_{−x_H}`.
pub fn averaging_witness(gr: &GroupRing, delta: &Derivation, h: &SubgroupSet) -> Result<RingElement> {
    check_r_derivation(gr, delta)?;
    let order = h.order() as i64;
    let r = gr.ring();
    let inv = r
        .inverse(&r.integer(order))
        .ok_or_else(|| Error::NotInvertible(format!("|H| = {order} in {}", r.label())))?;
    let c = gr.carrier();
    let group = gr.group();
    let mut sum = c.zero();
    for a in h.elements() {
        let term = c.mul(&gr.group_element(group.inv(a)), &delta.apply(&gr.group_element(a)));
        sum = c.add(&sum, &term);
    }
    Ok(c.mul(&gr.scalar(&inv), &sum))
}

/// `L_δ(g) = g⁻¹δ(g)`
pub fn l_map(gr: &GroupRing, delta: &Derivation, g: usize) -> Result<RingElement> {
    if delta.ring() != gr.carrier() {
        return Err(Error::RingMismatch);
    }
    let c = gr.carrier();
    Ok(c.mul(&gr.group_element(gr.group().inv(g)), &delta.apply(&gr.group_element(g))))
}

/// For every `t` commuting with `g`, the coefficient of `t` in `δ(g)` vanishes.
pub fn check_coefficient_vanishing(gr: &GroupRing, delta: &Derivation, g: usize) -> Result<bool> {
    if delta.ring() != gr.carrier() {
        return Err(Error::RingMismatch);
    }
    let group = gr.group();
    let order = group.element_order(g) as u64;
    if !gr.ring().inverts(order) {
        return Err(Error::Precondition(format!("order {order} of g{g} is not invertible in {}", gr.ring().label())));
    }
    let dg = delta.apply(&gr.group_element(g));
    Ok((0..group.order())
        .filter(|&t| group.mul(g, t) == group.mul(t, g))
        .all(|t| gr.ring().is_zero(&gr.coefficient(&dg, t))))
}

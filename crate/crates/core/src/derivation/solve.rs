use std::sync::Arc;

use super::{map_ambient, DerivationSpace};
use crate::error::{cap_exceeded, Error, Result};
use crate::group_ring::GroupRing;
use crate::linalg::{Ambient, Hom, Submodule};
use crate::ring::{FiniteRing, RingElement};

/// Largest number of unknown coordinates a derivation system may have.
pub const DEFAULT_SOLVER_CAP: usize = 4096;

/// First generator pair `(i, j)` where `δ(gᵢgⱼ) ≠ δ(gᵢ)gⱼ + gᵢδ(gⱼ)`.
pub fn leibniz_defect(ring: &FiniteRing, images: &[RingElement]) -> Result<Option<(usize, usize)>> {
    let k = ring.rank();
    if images.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: images.len() });
    }
    let amb = ring.ambient();
    for (img, &n) in images.iter().zip(amb.orders()) {
        amb.check_len(img)?;
        if !amb.is_zero(&amb.scale(n, img)) {
            return Err(Error::NotADerivation("an image is not killed by its generator's order".into()));
        }
    }
    let apply = |x: &[i64]| {
        let mut out = amb.zero();
        for (&c, img) in x.iter().zip(images) {
            if c != 0 {
                amb.add_scaled(&mut out, c, img);
            }
        }
        out
    };
    for i in 0..k {
        for j in 0..k {
            let lhs = apply(ring.table_entry(i, j));
            let rhs = ring.add(&ring.mul(&images[i], &ring.generator(j)), &ring.mul(&ring.generator(i), &images[j]));
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Whether the additive map with the given generator images satisfies the Leibniz rule.
pub fn is_derivation(ring: &FiniteRing, images: &[RingElement]) -> Result<bool> {
    match leibniz_defect(ring, images) {
        Ok(d) => Ok(d.is_none()),
        Err(Error::NotADerivation(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// All derivations: the kernel of
/// `δ ↦ (δ(gᵢgⱼ) − δ(gᵢ)gⱼ − gᵢδ(gⱼ))ᵢⱼ` on the maps that respect generator orders.
pub fn der(ring: &Arc<FiniteRing>) -> Result<DerivationSpace> {
    let k = ring.rank();
    if k * k > DEFAULT_SOLVER_CAP {
        return Err(cap_exceeded(format!("derivation system of {}", ring.label()), k * k, DEFAULT_SOLVER_CAP as u64));
    }
    // Leibniz on (x, s) for s in a ring-generating set with 1 propagates to
    // every product of generators, hence to all of B
    let mut s_set = vec![ring.one()];
    s_set.extend(ring.ring_generators()?);
    let domain = map_ambient(ring);
    let blocks = k * s_set.len() + k;
    let codomain = Ambient::new((0..blocks).flat_map(|_| ring.ambient().orders().iter().copied()).collect())?;
    let gens = ring.generators();
    let orders = ring.ambient().orders();
    let products: Vec<Vec<RingElement>> = gens.iter().map(|a| s_set.iter().map(|s| ring.mul(a, s)).collect()).collect();
    let mut images = Vec::with_capacity(k * k);
    // unknown (i, t): δ(gᵢ) = e_t
    for i in 0..k {
        for t in 0..k {
            let e = &gens[t];
            let mut img = Vec::with_capacity(blocks * k);
            for a in 0..k {
                for (s, as_prod) in s_set.iter().zip(&products[a]) {
                    // δ(a s) − δ(a) s − a δ(s)
                    let mut v = ring.scale(as_prod[i], e);
                    if a == i {
                        v = ring.sub(&v, &ring.mul(e, s));
                    }
                    if s[i] != 0 {
                        v = ring.sub(&v, &ring.scale(s[i], &ring.mul(&gens[a], e)));
                    }
                    img.extend(v);
                }
            }
            for a in 0..k {
                img.extend(if a == i { ring.scale(orders[a], e) } else { ring.zero() });
            }
            images.push(img);
        }
    }
    let kernel = Hom::new(domain, codomain, images)?.kernel();
    Ok(DerivationSpace::new(Arc::clone(ring), kernel))
}

/// Derivations of `R[G]` vanishing on `R`.
///
/// The unknowns are the values `δ(g)`; the constraints are the Leibniz rule
/// on pairs `(g, s)` with `s` in a generating set of `G` (which propagates to
/// all pairs), and `rδ(g) = δ(g)r` for the generators `r` of `R`.
pub fn der_r(gr: &GroupRing) -> Result<DerivationSpace> {
    let c = gr.carrier();
    let n = gr.group().order();
    let kc = c.rank();
    let unknowns = n * kc;
    if unknowns > DEFAULT_SOLVER_CAP {
        return Err(cap_exceeded(format!("R-derivation system of {}", gr.label()), unknowns, DEFAULT_SOLVER_CAP as u64));
    }
    let group = gr.group();
    let mut pairs = vec![(0, 0)];
    for s in group.generating_set() {
        pairs.extend((0..n).map(|g| (g, s)));
    }
    let ring_gens: Vec<RingElement> = if gr.ring().is_commutative() {
        Vec::new()
    } else {
        gr.ring().generators().iter().map(|r| gr.scalar(r)).collect()
    };
    let blocks = pairs.len() + n * ring_gens.len();
    let domain = Ambient::new((0..n).flat_map(|_| c.ambient().orders().iter().copied()).collect())?;
    let codomain = Ambient::new((0..blocks).flat_map(|_| c.ambient().orders().iter().copied()).collect())?;
    let elems: Vec<RingElement> = (0..n).map(|g| gr.group_element(g)).collect();
    let mut images = Vec::with_capacity(unknowns);
    // unknown (u, t): δ(u) = e_t
    for u in 0..n {
        for t in 0..kc {
            let e = c.generator(t);
            let mut img = Vec::with_capacity(blocks * kc);
            for &(g, h) in &pairs {
                let mut v = if group.mul(g, h) == u { e.clone() } else { c.zero() };
                if g == u {
                    v = c.sub(&v, &c.mul(&e, &elems[h]));
                }
                if h == u {
                    v = c.sub(&v, &c.mul(&elems[g], &e));
                }
                img.extend(v);
            }
            for g in 0..n {
                for r in &ring_gens {
                    img.extend(if g == u { c.bracket(r, &e) } else { c.zero() });
                }
            }
            images.push(img);
        }
    }
    let kernel = Hom::new(domain, codomain, images)?.kernel();
    let full: Vec<Vec<i64>> = kernel.generators().iter().map(|sol| extend_to_carrier(gr, sol)).collect();
    let module = Submodule::span(&map_ambient(c), &full)?;
    Ok(DerivationSpace::new(gr.carrier_arc(), module))
}

/// From the values `δ(g)` to the images of every carrier generator `r_j·g`.
pub(crate) fn extend_to_carrier(gr: &GroupRing, values: &[i64]) -> Vec<i64> {
    let c = gr.carrier();
    let kc = c.rank();
    let k = gr.block_size();
    let mut out = Vec::with_capacity(kc * kc);
    for g in 0..gr.group().order() {
        let dg = &values[g * kc..(g + 1) * kc];
        for j in 0..k {
            out.extend(c.mul(&gr.scalar(&gr.ring().generator(j)), dg));
        }
    }
    out
}

/// Maps whose images all lie in the center.
fn central_maps(ring: &FiniteRing) -> Result<Submodule> {
    let z = ring.center().generators();
    let k = ring.rank();
    let mut gens = Vec::new();
    for i in 0..k {
        for v in &z {
            let mut m = vec![0; k * k];
            m[i * k..(i + 1) * k].copy_from_slice(v);
            gens.push(m);
        }
    }
    Submodule::span(&map_ambient(ring), &gens)
}

/// The members of a derivation space with values in the center.
pub fn central_part(space: &DerivationSpace) -> Result<DerivationSpace> {
    let module = space.module().intersection(&central_maps(space.ring())?)?;
    Ok(DerivationSpace::new(space.ring_arc(), module))
}

/// Derivations with values in the center.
pub fn zder(ring: &Arc<FiniteRing>) -> Result<DerivationSpace> {
    central_part(&der(ring)?)
}

/// `R`-derivations with values in the center of `R[G]`.
pub fn zder_r(gr: &GroupRing) -> Result<DerivationSpace> {
    central_part(&der_r(gr)?)
}

use std::sync::Arc;

use super::{FiniteLieRing, LieElement};
use crate::derivation::{der_r, inner, Derivation, DerivationSpace};
use crate::error::Result;
use crate::group_ring::GroupRing;
use crate::linalg::{Hom, Presentation, Quotient, Submodule};
use crate::ring::FiniteRing;

/// A derivation space with its Lie structure, in cyclic coordinates.
#[derive(Clone, Debug)]
pub struct DerivationLie {
    pub lie: FiniteLieRing,
    pub space: DerivationSpace,
    presentation: Presentation,
}

impl DerivationLie {
    pub fn to_derivation(&self, x: &[i64]) -> Derivation {
        let v = self.presentation.embed(x);
        let k = self.space.ring().rank();
        Derivation::from_images(self.space.ring_arc(), v.chunks(k).map(<[i64]>::to_vec).collect())
    }

    /// Coordinates of a member of the space.
    pub fn coords(&self, d: &Derivation) -> Option<LieElement> {
        self.presentation.coords(&d.to_vector())
    }

    /// A Lie subring as a derivation space.
    pub fn subspace(&self, s: &Submodule) -> DerivationSpace {
        let ds: Vec<Derivation> = s.generators().iter().map(|x| self.to_derivation(x)).collect();
        DerivationSpace::span(self.space.ring_arc(), &ds).expect("members of the space")
    }
}

/// The Lie ring structure of a bracket-closed derivation space.
pub fn der_as_lie(space: &DerivationSpace) -> Result<DerivationLie> {
    let presentation = Presentation::new(space.module());
    let k = space.ring().rank();
    let ring = space.ring_arc();
    let gens: Vec<Derivation> = presentation
        .generators()
        .iter()
        .map(|v| Derivation::from_images(Arc::clone(&ring), v.chunks(k.max(1)).map(<[i64]>::to_vec).collect()))
        .collect();
    let mut flat = Vec::with_capacity(gens.len() * gens.len());
    for a in &gens {
        for b in &gens {
            let c = a.bracket(b)?;
            let coords = presentation.coords(&c.to_vector()).ok_or_else(|| {
                crate::error::Error::Precondition("derivation space is not closed under the bracket".into())
            })?;
            flat.push(coords);
        }
    }
    let lie = FiniteLieRing::from_flat(presentation.ambient().clone(), flat, format!("Der({})", ring.label()))?;
    Ok(DerivationLie { lie, space: space.clone(), presentation })
}

/// Inner `R`-derivations of `R[G]` built two ways, with the comparison.
#[derive(Clone, Debug)]
pub struct InnerDerLie {
    /// span of `∂_x` for `x` in `Z(R)[G]`, inside the `R`-derivations
    pub derivation_side: DerivationLie,
    /// `(Z(R)[G])^L / Z(Z(R)[G])`
    pub quotient_side: FiniteLieRing,
    /// `x + Z ↦ ∂_x`, from the quotient side to the derivation side
    pub iso: Hom,
    pub is_isomorphism: bool,
    pub inside_der_r: bool,
}

impl InnerDerLie {
    pub fn lie(&self) -> &FiniteLieRing {
        &self.derivation_side.lie
    }
}

pub fn inner_der_lie(gr: &GroupRing) -> Result<InnerDerLie> {
    let c: Arc<FiniteRing> = gr.carrier_arc();
    let zrg = gr.central_coefficients();

    let ds: Vec<Derivation> = zrg.generators().iter().map(|x| inner(&c, x)).collect();
    let space = DerivationSpace::span(Arc::clone(&c), &ds)?;
    let inside_der_r = space.is_subspace_of(&der_r(gr)?)?;
    let derivation_side = der_as_lie(&space)?;

    let pres = Presentation::new(&zrg);
    let center_coords: Vec<Vec<i64>> = gr
        .center_of_central_coefficients()
        .generators()
        .iter()
        .map(|z| pres.coords(z).expect("center lies in Z(R)[G]"))
        .collect();
    let center = Submodule::span(pres.ambient(), &center_coords)?;
    let q = Quotient::new(&center);
    let reps: Vec<Vec<i64>> = q.lifts().iter().map(|l| pres.embed(l)).collect();
    let mut flat = Vec::with_capacity(reps.len() * reps.len());
    for a in &reps {
        for b in &reps {
            let coords = pres.coords(&c.bracket(a, b)).expect("Z(R)[G] is closed under the bracket");
            flat.push(q.project(&coords));
        }
    }
    let quotient_side = FiniteLieRing::from_flat(q.target().clone(), flat, format!("IDer({})", gr.label()))?;

    let images: Vec<Vec<i64>> = reps
        .iter()
        .map(|x| derivation_side.coords(&inner(&c, x)).expect("inner derivation of Z(R)[G] lies in the span"))
        .collect();
    let iso = Hom::new(q.target().clone(), derivation_side.lie.ambient().clone(), images)?;
    let bijective = iso.kernel().is_zero() && iso.image().is_full();
    let gens = quotient_side.generators();
    let brackets_match = gens.iter().all(|a| {
        gens.iter().all(|b| {
            iso.apply(&quotient_side.bracket(a, b)) == derivation_side.lie.bracket(&iso.apply(a), &iso.apply(b))
        })
    });
    Ok(InnerDerLie {
        derivation_side,
        quotient_side,
        iso,
        is_isomorphism: bijective && brackets_match,
        inside_der_r,
    })
}

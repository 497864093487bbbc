//! Derivations of finite rings, stored by their values on the additive generators.

mod inner;
mod oracle;
mod solve;

pub use inner::{averaging_witness, check_coefficient_vanishing, inner, inner_space, is_inner, l_map};
pub use oracle::{oracle_der, oracle_der_r};
pub use solve::{central_part, der, der_r, is_derivation, leibniz_defect, zder, zder_r, DEFAULT_SOLVER_CAP};
pub(crate) use solve::extend_to_carrier as extend_values;

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Ambient, Submodule};
use crate::ring::{FiniteRing, RingElement};

/// `B^k`, one copy of the ring per additive generator; a map is the list of
/// generator images.
pub fn map_ambient(ring: &FiniteRing) -> Ambient {
    let orders = (0..ring.rank()).flat_map(|_| ring.ambient().orders().iter().copied()).collect();
    Ambient::new(orders).expect("copies of a valid ambient")
}

#[derive(Clone)]
pub struct Derivation {
    ring: Arc<FiniteRing>,
    images: Vec<RingElement>,
}

impl Derivation {
    /// Checks additivity (generator orders kill their images) and the Leibniz rule.
    pub fn new(ring: Arc<FiniteRing>, images: Vec<RingElement>) -> Result<Self> {
        if !is_derivation(&ring, &images)? {
            return Err(Error::NotADerivation("Leibniz rule fails on a generator pair".into()));
        }
        Ok(Self::from_images(ring, images))
    }

    pub(crate) fn from_images(ring: Arc<FiniteRing>, images: Vec<RingElement>) -> Self {
        let images = images.into_iter().map(|v| ring.ambient().reduced(v)).collect();
        Derivation { ring, images }
    }

    pub(crate) fn from_vector(ring: Arc<FiniteRing>, v: &[i64]) -> Self {
        let k = ring.rank();
        let images = v.chunks(k).map(<[i64]>::to_vec).collect();
        Self::from_images(ring, images)
    }

    pub fn zero(ring: Arc<FiniteRing>) -> Self {
        let images = vec![ring.zero(); ring.rank()];
        Derivation { ring, images }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> Arc<FiniteRing> {
        Arc::clone(&self.ring)
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    /// Concatenated images, a point of [`map_ambient`].
    pub fn to_vector(&self) -> Vec<i64> {
        self.images.concat()
    }

    pub fn apply(&self, x: &[i64]) -> RingElement {
        let amb = self.ring.ambient();
        let mut out = amb.zero();
        for (&c, img) in x.iter().zip(&self.images) {
            if c != 0 {
                amb.add_scaled(&mut out, c, img);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| self.ring.is_zero(v))
    }

    fn check_same(&self, other: &Derivation) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Derivation { ring: self.ring_arc(), images })
    }

    pub fn sub(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| self.ring.sub(a, b)).collect();
        Ok(Derivation { ring: self.ring_arc(), images })
    }

    pub fn scale(&self, k: i64) -> Derivation {
        let images = self.images.iter().map(|a| self.ring.scale(k, a)).collect();
        Derivation { ring: self.ring_arc(), images }
    }

    /// `δ₁∘δ₂ − δ₂∘δ₁`
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| self.ring.sub(&self.apply(b), &other.apply(a)))
            .collect();
        Ok(Derivation { ring: self.ring_arc(), images })
    }

    /// Whether the two maps agree on every element of `elems`.
    pub fn agrees_on(&self, other: &Derivation, elems: &[RingElement]) -> bool {
        elems.iter().all(|x| self.apply(x) == other.apply(x))
    }
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.images == other.images
    }
}

impl Eq for Derivation {}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Derivation").field("ring", &self.ring.label()).field("images", &self.images).finish()
    }
}

/// An additive group of derivations, held as a submodule of [`map_ambient`].
#[derive(Clone)]
pub struct DerivationSpace {
    ring: Arc<FiniteRing>,
    module: Submodule,
}

impl DerivationSpace {
    pub(crate) fn new(ring: Arc<FiniteRing>, module: Submodule) -> Self {
        DerivationSpace { ring, module }
    }

    /// Additive span of the given derivations.
    pub fn span(ring: Arc<FiniteRing>, ds: &[Derivation]) -> Result<Self> {
        let vs: Vec<Vec<i64>> = ds.iter().map(Derivation::to_vector).collect();
        let module = Submodule::span(&map_ambient(&ring), &vs)?;
        Ok(DerivationSpace { ring, module })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> Arc<FiniteRing> {
        Arc::clone(&self.ring)
    }

    pub fn module(&self) -> &Submodule {
        &self.module
    }

    /// Canonical additive generators.
    pub fn generators(&self) -> Vec<Derivation> {
        self.module.generators().iter().map(|v| Derivation::from_vector(self.ring_arc(), v)).collect()
    }

    pub fn size(&self) -> Option<u64> {
        self.module.size()
    }

    pub fn cardinality(&self) -> num_bigint::BigUint {
        self.module.cardinality()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn contains(&self, d: &Derivation) -> bool {
        d.ring == self.ring && self.module.contains(&d.to_vector())
    }

    pub fn is_subspace_of(&self, other: &DerivationSpace) -> Result<bool> {
        self.module.is_subset_of(&other.module)
    }

    pub fn elements(&self, cap: u64) -> Result<Vec<Derivation>> {
        let vs = self.module.elements(cap).ok_or_else(|| {
            crate::error::cap_exceeded("derivation space enumeration", self.cardinality(), cap)
        })?;
        Ok(vs.iter().map(|v| Derivation::from_vector(self.ring_arc(), v)).collect())
    }

    /// Uniform random member.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Derivation {
        let amb = self.module.ambient();
        let mut v = amb.zero();
        for g in self.module.generators() {
            let ord = amb.element_order(&g);
            amb.add_scaled(&mut v, rng.gen_range(0..ord), &g);
        }
        Derivation::from_vector(self.ring_arc(), &v)
    }

    pub fn intersection(&self, other: &DerivationSpace) -> Result<DerivationSpace> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(DerivationSpace { ring: self.ring_arc(), module: self.module.intersection(&other.module)? })
    }

    /// Whether every bracket of generators stays inside the space.
    pub fn is_closed_under_bracket(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|a| gens.iter().all(|b| a.bracket(b).map(|c| self.contains(&c)).unwrap_or(false)))
    }
}

impl PartialEq for DerivationSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.module == other.module
    }
}

impl std::fmt::Debug for DerivationSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DerivationSpace")
            .field("ring", &self.ring.label())
            .field("size", &self.cardinality().to_string())
            .finish()
    }
}

#[cfg(test)]
mod tests;

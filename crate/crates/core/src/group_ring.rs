//! Group rings `R[G]` as finite rings with a block basis: generator `j` of
//! `R` in the block of group element `g` has carrier index `g·rank(R) + j`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::linalg::{Ambient, Hom, Submodule};
use crate::ring::{FiniteRing, RingElement};

/// Largest carrier rank built by default.
pub const DEFAULT_RANK_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct GroupRing {
    ring: Arc<FiniteRing>,
    group: Arc<FiniteGroup>,
    carrier: Arc<FiniteRing>,
}

impl GroupRing {
    pub fn new(ring: &FiniteRing, group: &FiniteGroup) -> Result<Self> {
        Self::with_cap(ring, group, DEFAULT_RANK_CAP)
    }

    pub fn with_cap(ring: &FiniteRing, group: &FiniteGroup, rank_cap: usize) -> Result<Self> {
        let k = ring.rank();
        let n = group.order();
        let rank = k * n;
        if rank > rank_cap {
            return Err(crate::error::cap_exceeded(
                format!("carrier rank of {}[{}]", ring.label(), group.label()),
                rank,
                rank_cap as u64,
            ));
        }
        let orders: Vec<i64> = (0..n).flat_map(|_| ring.ambient().orders().iter().copied()).collect();
        let amb = Ambient::new(orders)?;
        let mut flat = vec![vec![0; rank]; rank * rank];
        for g in 0..n {
            for i in 0..k {
                for h in 0..n {
                    let gh = group.mul(g, h);
                    for j in 0..k {
                        let slot = &mut flat[(g * k + i) * rank + h * k + j];
                        slot[gh * k..(gh + 1) * k].copy_from_slice(ring.table_entry(i, j));
                    }
                }
            }
        }
        let mut one = vec![0; rank];
        one[..k].copy_from_slice(&ring.one());
        let name = format!("{}[{}]", ring.label(), group.label());
        let carrier = FiniteRing::from_flat(amb, flat, one, name)?;
        Ok(GroupRing { ring: Arc::new(ring.clone()), group: Arc::new(group.clone()), carrier: Arc::new(carrier) })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> &FiniteRing {
        &self.carrier
    }

    pub fn carrier_arc(&self) -> Arc<FiniteRing> {
        Arc::clone(&self.carrier)
    }

    pub fn label(&self) -> String {
        self.carrier.label()
    }

    /// Rank of the coefficient ring's additive decomposition.
    pub fn block_size(&self) -> usize {
        self.ring.rank()
    }

    /// `r·g`
    pub fn embed(&self, r: &[i64], g: usize) -> RingElement {
        let k = self.block_size();
        let mut x = self.carrier.zero();
        x[g * k..(g + 1) * k].copy_from_slice(r);
        x
    }

    /// The group element `g` as `1·g`.
    pub fn group_element(&self, g: usize) -> RingElement {
        self.embed(&self.ring.one(), g)
    }

    /// `r·1`
    pub fn scalar(&self, r: &[i64]) -> RingElement {
        self.embed(r, 0)
    }

    /// Coefficient of `g`.
    pub fn coefficient(&self, x: &[i64], g: usize) -> RingElement {
        let k = self.block_size();
        x[g * k..(g + 1) * k].to_vec()
    }

    pub fn support(&self, x: &[i64]) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| !self.ring.is_zero(&self.coefficient(x, g))).collect()
    }

    /// `Σ_g α_g`
    pub fn augmentation(&self, x: &[i64]) -> RingElement {
        (0..self.group.order()).fold(self.ring.zero(), |acc, g| self.ring.add(&acc, &self.coefficient(x, g)))
    }

    pub fn augmentation_hom(&self) -> Hom {
        let k = self.block_size();
        let images = (0..self.carrier.rank()).map(|i| self.ring.generator(i % k)).collect();
        Hom::new(self.carrier.ambient().clone(), self.ring.ambient().clone(), images).expect("blocks share orders")
    }

    fn check_subgroup(&self, h: &SubgroupSet) -> Result<()> {
        let elems = h.elements();
        if elems.last().is_some_and(|&x| x >= self.group.order()) {
            return Err(Error::NotASubgroup);
        }
        self.group.subgroup(&elems).map(|_| ())
    }

    /// `𝕴_R(H)`: the right ideal generated by `{1 − h : h ∈ H}`, spanned by
    /// `(1 − h)·g·r`. It is two-sided exactly when `H` is normal.
    pub fn augmentation_ideal(&self, h: &SubgroupSet) -> Result<Submodule> {
        self.check_subgroup(h)?;
        let k = self.block_size();
        let mut gens = Vec::new();
        for hh in h.elements().into_iter().filter(|&x| x != 0) {
            for g in 0..self.group.order() {
                let hg = self.group.mul(hh, g);
                for j in 0..k {
                    let r = self.ring.generator(j);
                    gens.push(self.carrier.sub(&self.embed(&r, g), &self.embed(&r, hg)));
                }
            }
        }
        Submodule::span(self.carrier.ambient(), &gens)
    }

    /// `R[G/H]` together with the projection `R[G] → R[G/H]`, after checking
    /// that the projection is a surjective ring map with kernel `𝕴_R(H)`.
    pub fn quotient_by_subgroup(&self, h: &SubgroupSet) -> Result<(GroupRing, Hom)> {
        self.check_subgroup(h)?;
        let (q, proj) = self.group.quotient(h)?;
        let target = GroupRing::new(&self.ring, &q)?;
        let k = self.block_size();
        let images = (0..self.carrier.rank())
            .map(|i| target.embed(&self.ring.generator(i % k), proj[i / k]))
            .collect();
        let map = Hom::new(self.carrier.ambient().clone(), target.carrier.ambient().clone(), images)?;
        let gens = self.carrier.generators();
        for a in &gens {
            for b in &gens {
                let lhs = map.apply(&self.carrier.mul(a, b));
                let rhs = target.carrier.mul(&map.apply(a), &map.apply(b));
                if lhs != rhs {
                    return Err(Error::Precondition("projection is not multiplicative".into()));
                }
            }
        }
        if map.apply(&self.carrier.one()) != target.carrier.one() {
            return Err(Error::Precondition("projection does not preserve unity".into()));
        }
        if !map.image().is_full() || map.kernel() != self.augmentation_ideal(h)? {
            return Err(Error::Precondition("projection kernel differs from the augmentation ideal".into()));
        }
        Ok((target, map))
    }

    pub fn center(&self) -> Submodule {
        self.carrier.center()
    }

    /// `S[X] = span{s·x : s ∈ S, x ∈ X}` for an additive subgroup `S ⊆ R`.
    pub fn span_over(&self, coeffs: &Submodule, elems: &[usize]) -> Submodule {
        let gens: Vec<RingElement> = elems
            .iter()
            .flat_map(|&g| coeffs.generators().into_iter().map(move |s| (s, g)))
            .map(|(s, g)| self.embed(&s, g))
            .collect();
        Submodule::span(self.carrier.ambient(), &gens).expect("embedded elements fit the carrier")
    }

    /// `Z(R)[G]`
    pub fn central_coefficients(&self) -> Submodule {
        self.span_over(&self.ring.center(), &(0..self.group.order()).collect::<Vec<_>>())
    }

    /// `Z(R)[Z(G)]`
    pub fn central_part(&self) -> Submodule {
        self.span_over(&self.ring.center(), &self.group.center().elements())
    }

    /// `Z(Z(R)[G])`: members of `Z(R)[G]` commuting with every group element.
    pub fn center_of_central_coefficients(&self) -> Submodule {
        let n = self.group.order();
        let gens: Vec<RingElement> = (0..n).map(|g| self.group_element(g)).collect();
        let commuting = self
            .carrier
            .stacked_hom(n, |i| {
                let x = self.carrier.generator(i);
                gens.iter().flat_map(|g| self.carrier.bracket(&x, g)).collect()
            })
            .kernel();
        self.central_coefficients().intersection(&commuting).expect("same carrier")
    }

    /// Span of `r·Ĉ` over `R`-generators `r` and class sums `Ĉ`.
    pub fn class_sum_span(&self) -> Submodule {
        let mut gens = Vec::new();
        for class in self.group.conjugacy_classes() {
            for r in self.ring.generators() {
                let mut x = self.carrier.zero();
                for &g in &class {
                    x = self.carrier.add(&x, &self.embed(&r, g));
                }
                gens.push(x);
            }
        }
        Submodule::span(self.carrier.ambient(), &gens).expect("class sums fit the carrier")
    }

    /// Units of augmentation one.
    pub fn normalized_units(&self, cap: u64) -> Result<Vec<RingElement>> {
        let one = self.ring.one();
        Ok(self.carrier.units(cap)?.into_iter().filter(|u| self.augmentation(u) == one).collect())
    }

    /// Every prime dividing `|G|` is invertible in `R`.
    pub fn order_invertible(&self) -> bool {
        self.ring.inverts(self.group.order() as u64)
    }

    /// Readable form such as `2*g0 + (1,0)*g3`.
    pub fn format_element(&self, x: &[i64]) -> String {
        let terms: Vec<String> = self
            .support(x)
            .into_iter()
            .map(|g| {
                let c = self.coefficient(x, g);
                if c.len() == 1 {
                    format!("{}*g{g}", c[0])
                } else {
                    format!("{c:?}*g{g}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

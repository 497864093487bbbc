use std::fmt;

use num_bigint::BigUint;

use super::ambient::Ambient;
use super::howell::{howell_form, HowellBasis};
use crate::error::{Error, Result};

/// An additive subgroup of a finite abelian [`Ambient`], stored in Howell
/// form so that set equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    amb: Ambient,
    /// Howell basis of the embedded copy inside `(ℤ/N)^rank`.
    basis: HowellBasis<i64>,
}

impl Submodule {
    /// Span of `gens` (coordinates in the ambient, reduced or not).
    pub fn span(amb: &Ambient, gens: &[Vec<i64>]) -> Result<Self> {
        for g in gens {
            amb.check_len(g)?;
        }
        let scaled = gens.iter().map(|g| amb.scale_up(&amb.reduced(g.clone()))).collect();
        Ok(Self::from_scaled(amb, scaled))
    }

    pub(crate) fn from_scaled(amb: &Ambient, scaled: Vec<Vec<i64>>) -> Self {
        Submodule { amb: amb.clone(), basis: howell_form(scaled, amb.rank(), &amb.modulus()) }
    }

    pub fn zero(amb: &Ambient) -> Self {
        Self::from_scaled(amb, Vec::new())
    }

    pub fn full(amb: &Ambient) -> Self {
        let gens: Vec<Vec<i64>> = (0..amb.rank()).map(|i| amb.basis_vector(i)).collect();
        Self::span(amb, &gens).expect("basis vectors have the right length")
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    /// Canonical generators in ambient coordinates.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.basis.rows.iter().map(|r| self.amb.scale_down(r)).collect()
    }

    pub fn num_generators(&self) -> usize {
        self.basis.rows.len()
    }

    pub fn cardinality(&self) -> BigUint {
        self.basis.span_size()
    }

    /// Cardinality if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        u64::try_from(self.cardinality()).ok()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.cardinality() == self.amb.cardinality()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.amb.rank() && self.basis.contains(&self.amb.scale_up(v))
    }

    /// Canonical representative of `v + self` together with the multipliers
    /// on [`generators`](Self::generators): `v = rep + Σ qᵢ genᵢ`.
    pub fn reduce(&self, v: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut w = self.amb.scale_up(v);
        let qs = self.basis.reduce(&mut w);
        (self.amb.scale_down(&w), qs)
    }

    /// Multipliers expressing a member as a combination of the generators.
    pub fn coefficients(&self, v: &[i64]) -> Option<Vec<i64>> {
        let (rest, qs) = self.reduce(v);
        self.amb.is_zero(&rest).then_some(qs)
    }

    fn same_ambient(&self, other: &Submodule) -> Result<()> {
        if self.amb != other.amb {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.same_ambient(other)?;
        let rows = self.basis.rows.iter().chain(&other.basis.rows).cloned().collect();
        Ok(Self::from_scaled(&self.amb, rows))
    }

    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        self.same_ambient(other)?;
        // rows (x, x) for x ∈ self and (y, 0) for y ∈ other; the part of the span
        // with vanishing first block is {(0, x) : x ∈ self ∩ other}
        let k = self.amb.rank();
        let mut rows = Vec::new();
        for x in &self.basis.rows {
            rows.push(x.iter().chain(x).copied().collect());
        }
        for y in &other.basis.rows {
            rows.push(y.iter().copied().chain(std::iter::repeat_n(0, k)).collect());
        }
        let h = howell_form(rows, 2 * k, &self.amb.modulus());
        let tail = h
            .rows
            .iter()
            .zip(&h.pivots)
            .filter(|(_, &c)| c >= k)
            .map(|(r, _)| r[k..].to_vec())
            .collect();
        Ok(Self::from_scaled(&self.amb, tail))
    }

    pub fn is_subset_of(&self, other: &Submodule) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis.rows.iter().all(|r| other.basis.contains(r)))
    }

    /// Every element, if there are at most `cap`.
    pub fn elements(&self, cap: u64) -> Option<Vec<Vec<i64>>> {
        let size = self.size()?;
        if size > cap {
            return None;
        }
        let gens = self.generators();
        let mut out = vec![self.amb.zero()];
        for g in &gens {
            let ord = self.amb.element_order(g);
            let mut next = Vec::with_capacity(out.len() * ord as usize);
            for v in &out {
                let mut w = v.clone();
                for _ in 0..ord {
                    next.push(w.clone());
                    w = self.amb.add(&w, g);
                }
            }
            next.sort();
            next.dedup();
            out = next;
        }
        Some(out)
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Submodule")
            .field("orders", &self.amb.orders())
            .field("generators", &self.generators())
            .field("cardinality", &self.cardinality().to_string())
            .finish()
    }
}

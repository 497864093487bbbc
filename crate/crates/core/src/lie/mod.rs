//! Finite Lie rings given by an additive decomposition and a bracket table.

mod engel;
mod inner;
pub mod oracle;

pub use engel::{commutator_power_identity_check, engel_bracket, engel_scan, EngelOutcome, EngelPair, EngelReport};
pub use inner::{der_as_lie, inner_der_lie, DerivationLie, InnerDerLie};

use crate::error::{Error, Result};
use crate::linalg::{Ambient, Hom, Quotient, Submodule};
use crate::ring::FiniteRing;

pub type LieElement = Vec<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLieRing {
    amb: Ambient,
    table: Vec<Vec<i64>>,
    name: String,
}

/// An additive subgroup closed under the bracket.
pub type LieSubring = Submodule;

impl FiniteLieRing {
    /// Validates orders, `[gᵢ, gᵢ] = 0`, antisymmetry and the Jacobi identity on generators.
    pub fn new(amb: Ambient, table: Vec<Vec<LieElement>>) -> Result<Self> {
        let k = amb.rank();
        if table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter(format!("bracket table must be {k}x{k}")));
        }
        Self::from_flat(amb, table.into_iter().flatten().collect(), String::new())
    }

    pub(crate) fn from_flat(amb: Ambient, flat: Vec<Vec<i64>>, name: String) -> Result<Self> {
        let k = amb.rank();
        let mut table = Vec::with_capacity(k * k);
        for (idx, v) in flat.into_iter().enumerate() {
            amb.check_len(&v)?;
            let v = amb.reduced(v);
            let (i, j) = (idx / k, idx % k);
            let n = num_integer::gcd(amb.orders()[i], amb.orders()[j]);
            if !amb.is_zero(&amb.scale(n, &v)) {
                return Err(Error::InvalidParameter(format!("bracket of generators {i},{j} is not killed by their orders")));
            }
            table.push(v);
        }
        let lie = FiniteLieRing { amb, table, name };
        lie.validate()?;
        Ok(lie)
    }

    fn validate(&self) -> Result<()> {
        let k = self.rank();
        for i in 0..k {
            if !self.amb.is_zero(&self.table[i * k + i]) {
                return Err(Error::InvalidParameter(format!("[g{i}, g{i}] is not zero")));
            }
            for j in 0..i {
                if self.table[i * k + j] != self.amb.neg(&self.table[j * k + i]) {
                    return Err(Error::InvalidParameter(format!("bracket not antisymmetric on ({i},{j})")));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let (x, y, z) = (self.generator(i), self.generator(j), self.generator(l));
                    let a = self.bracket(&x, &self.bracket(&y, &z));
                    let b = self.bracket(&y, &self.bracket(&z, &x));
                    let c = self.bracket(&z, &self.bracket(&x, &y));
                    if !self.amb.is_zero(&self.amb.add(&self.amb.add(&a, &b), &c)) {
                        return Err(Error::InvalidParameter(format!("Jacobi identity fails on ({i},{j},{l})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The associated Lie ring `B^L`.
    pub fn from_associative(b: &FiniteRing) -> Self {
        let k = b.rank();
        let flat = (0..k * k).map(|idx| b.bracket(&b.generator(idx / k), &b.generator(idx % k))).collect();
        Self::from_flat(b.ambient().clone(), flat, format!("{}^L", b.label())).expect("commutator bracket is a Lie bracket")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn label(&self) -> String {
        if self.name.is_empty() {
            format!("lie{:?}", self.amb.orders())
        } else {
            self.name.clone()
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn rank(&self) -> usize {
        self.amb.rank()
    }

    pub fn size(&self) -> Option<u64> {
        self.amb.size()
    }

    pub fn generator(&self, i: usize) -> LieElement {
        self.amb.basis_vector(i)
    }

    pub fn generators(&self) -> Vec<LieElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &[i64] {
        &self.table[i * self.rank() + j]
    }

    pub fn bracket(&self, x: &[i64], y: &[i64]) -> LieElement {
        let k = self.rank();
        let mut acc = self.amb.zero();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let e = &self.table[i * k + j];
                self.amb.add_scaled(&mut acc, (a * b) % self.amb.modulus(), e);
            }
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| self.amb.is_zero(v))
    }

    pub fn full(&self) -> LieSubring {
        Submodule::full(&self.amb)
    }

    /// `[A, B]` as an additive span.
    pub fn bracket_span(&self, a: &Submodule, b: &Submodule) -> Submodule {
        let bs = b.generators();
        let prods: Vec<LieElement> =
            a.generators().iter().flat_map(|x| bs.iter().map(move |y| (x, y))).map(|(x, y)| self.bracket(x, y)).collect();
        Submodule::span(&self.amb, &prods).expect("brackets live in the ambient")
    }

    pub fn is_subring(&self, s: &Submodule) -> bool {
        self.bracket_span(s, s).is_subset_of(s).unwrap_or(false)
    }

    pub fn is_ideal(&self, s: &Submodule) -> bool {
        self.bracket_span(s, &self.full()).is_subset_of(s).unwrap_or(false)
    }

    /// `γ₁ = L, γₖ₊₁ = [γₖ, L]`, listed up to the first term that repeats.
    pub fn lower_central_series(&self) -> Vec<LieSubring> {
        let l = self.full();
        let mut series = vec![l.clone()];
        loop {
            let next = self.bracket_span(series.last().unwrap(), &l);
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// `L⁽⁰⁾ = L, L⁽ⁿ⁺¹⁾ = [L⁽ⁿ⁾, L⁽ⁿ⁾]`, listed up to the first term that repeats.
    pub fn derived_series(&self) -> Vec<LieSubring> {
        let mut series = vec![self.full()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class: the number of nonzero terms of the lower central series.
    pub fn nilpotency_class(&self) -> Option<usize> {
        terminal_length(&self.lower_central_series())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// Derived length: the number of nonzero terms of the derived series.
    pub fn derived_length(&self) -> Option<usize> {
        terminal_length(&self.derived_series())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length().is_some()
    }

    /// Kernel of every `ad gᵢ`.
    pub fn center(&self) -> LieSubring {
        let k = self.rank();
        let images = (0..k).map(|i| (0..k).flat_map(|j| self.table_entry(i, j).to_vec()).collect()).collect();
        let codomain = Ambient::new((0..k).flat_map(|_| self.amb.orders().iter().copied()).collect())
            .expect("copies of a valid ambient");
        Hom::new(self.amb.clone(), codomain, images).expect("bracket is additive").kernel()
    }

    /// `L/I` for a Lie ideal `I`, with the projection.
    pub fn quotient(&self, ideal: &Submodule) -> Result<(FiniteLieRing, Quotient)> {
        if ideal.ambient() != &self.amb {
            return Err(Error::AmbientMismatch);
        }
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("submodule is not a Lie ideal".into()));
        }
        let q = Quotient::new(ideal);
        let lifts = q.lifts();
        let flat = lifts
            .iter()
            .flat_map(|a| lifts.iter().map(move |b| (a, b)))
            .map(|(a, b)| q.project(&self.bracket(a, b)))
            .collect();
        let lie = FiniteLieRing::from_flat(q.target().clone(), flat, format!("{}/I", self.label()))?;
        Ok((lie, q))
    }
}

fn terminal_length(series: &[Submodule]) -> Option<usize> {
    let last = series.last().expect("series is nonempty");
    last.is_zero().then(|| series.iter().filter(|s| !s.is_zero()).count())
}

impl std::fmt::Debug for FiniteLieRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLieRing").field("name", &self.name).field("orders", &self.amb.orders()).finish()
    }
}

//! Finite associative unital rings given by an additive decomposition and a
//! multiplication table on the cyclic generators.

mod construct;
mod spec;
mod structure;

pub use spec::{parse_ring, RingDefinition};
pub use structure::RadicalCertificate;

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Ambient, Hom, Submodule};

/// Default bound on element enumerations.
pub const DEFAULT_CAP: u64 = 4096;

/// Coefficient vector of a ring element with respect to the additive generators.
pub type RingElement = Vec<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    amb: Ambient,
    /// product of generators `i` and `j` at `i * rank + j`
    table: Vec<Vec<i64>>,
    sparse: Vec<Vec<(usize, i64)>>,
    one: RingElement,
    name: String,
}

impl FiniteRing {
    /// Hash of the presentation (orders, table, unity); equal rings share it.
    pub(crate) fn structure_hash(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.amb.orders().hash(&mut h);
        self.table.hash(&mut h);
        self.one.hash(&mut h);
        h.finish()
    }

    /// Validates the table (reduction, compatibility with the cyclic orders,
    /// two-sided unity, associativity on every generator triple).
    pub fn new(amb: Ambient, table: Vec<Vec<RingElement>>, one: RingElement) -> Result<Self> {
        let k = amb.rank();
        if table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(Error::NotARing(format!("multiplication table must be {k}x{k}")));
        }
        let flat: Vec<Vec<i64>> = table.into_iter().flatten().collect();
        Self::from_flat(amb, flat, one, String::new())
    }

    pub(crate) fn from_flat(amb: Ambient, flat: Vec<Vec<i64>>, one: RingElement, name: String) -> Result<Self> {
        let k = amb.rank();
        amb.check_len(&one)?;
        let mut table = Vec::with_capacity(k * k);
        for (idx, v) in flat.into_iter().enumerate() {
            amb.check_len(&v)?;
            let v = amb.reduced(v);
            let (i, j) = (idx / k, idx % k);
            let (ni, nj) = (amb.orders()[i], amb.orders()[j]);
            if !amb.is_zero(&amb.scale(ni, &v)) || !amb.is_zero(&amb.scale(nj, &v)) {
                return Err(Error::NotARing(format!("product of generators {i},{j} is not killed by their orders")));
            }
            table.push(v);
        }
        let sparse = table
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(l, &c)| (l, c)).collect())
            .collect();
        let one = amb.reduced(one);
        let ring = FiniteRing { amb, table, sparse, one, name };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let k = self.rank();
        for i in 0..k {
            let g = self.generator(i);
            if self.mul(&self.one, &g) != g || self.mul(&g, &self.one) != g {
                return Err(Error::NotARing(format!("unity fails on generator {i}")));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let ij = &self.table[i * k + j];
                for l in 0..k {
                    let left = self.mul(ij, &self.generator(l));
                    let right = self.mul(&self.generator(i), &self.table[j * k + l]);
                    if left != right {
                        return Err(Error::NotARing(format!("associativity fails on generators ({i},{j},{l})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn rank(&self) -> usize {
        self.amb.rank()
    }

    /// Number of elements, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.amb.size()
    }

    pub fn one(&self) -> RingElement {
        self.one.clone()
    }

    pub fn zero(&self) -> RingElement {
        self.amb.zero()
    }

    pub fn generator(&self, i: usize) -> RingElement {
        self.amb.basis_vector(i)
    }

    pub fn generators(&self) -> Vec<RingElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Product of generators `i` and `j`.
    pub fn table_entry(&self, i: usize, j: usize) -> &[i64] {
        &self.table[i * self.rank() + j]
    }

    pub fn table(&self) -> Vec<Vec<RingElement>> {
        let k = self.rank();
        (0..k).map(|i| (0..k).map(|j| self.table[i * k + j].clone()).collect()).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> RingElement {
        self.amb.add(a, b)
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> RingElement {
        self.amb.sub(a, b)
    }

    pub fn neg(&self, a: &[i64]) -> RingElement {
        self.amb.neg(a)
    }

    /// Integer multiple `k·a`.
    pub fn scale(&self, k: i64, a: &[i64]) -> RingElement {
        self.amb.scale(k, a)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> RingElement {
        let k = self.rank();
        let orders = self.amb.orders();
        let mut acc = vec![0i64; k];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x * y;
                for &(l, c) in &self.sparse[i * k + j] {
                    acc[l] = (acc[l] + (xy % orders[l]) * c) % orders[l];
                }
            }
        }
        acc
    }

    /// Lie commutator `ab − ba`.
    pub fn bracket(&self, a: &[i64], b: &[i64]) -> RingElement {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[i64], mut e: u64) -> RingElement {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        self.amb.is_zero(a)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..i).all(|j| self.table[i * k + j] == self.table[j * k + i]))
    }

    /// `x ↦ a·x`
    pub fn left_mul(&self, a: &[i64]) -> Hom {
        let images = (0..self.rank()).map(|j| self.mul(a, &self.generator(j))).collect();
        Hom::new(self.amb.clone(), self.amb.clone(), images).expect("multiplication is additive")
    }

    /// `x ↦ x·a`
    pub fn right_mul(&self, a: &[i64]) -> Hom {
        let images = (0..self.rank()).map(|j| self.mul(&self.generator(j), a)).collect();
        Hom::new(self.amb.clone(), self.amb.clone(), images).expect("multiplication is additive")
    }

    /// The hom `x ↦ (f₁(x), …, f_m(x))` into `B^m`, given the images of each generator under every `f`.
    pub(crate) fn stacked_hom(&self, blocks: usize, image_of: impl Fn(usize) -> Vec<i64>) -> Hom {
        let orders: Vec<i64> = (0..blocks).flat_map(|_| self.amb.orders().iter().copied()).collect();
        let codomain = Ambient::new(orders).expect("copies of a valid ambient");
        let images = (0..self.rank()).map(image_of).collect();
        Hom::new(self.amb.clone(), codomain, images).expect("ring maps are additive")
    }

    /// Every element, or a cap error.
    pub fn elements(&self, cap: u64) -> Result<Vec<RingElement>> {
        match self.amb.elements(cap) {
            Some(it) => Ok(it.collect()),
            None => Err(crate::error::cap_exceeded(
                format!("enumeration of {}", self.label()),
                self.amb.cardinality(),
                cap,
            )),
        }
    }

    pub fn label(&self) -> String {
        if self.name.is_empty() {
            format!("ring{:?}", self.amb.orders())
        } else {
            self.name.clone()
        }
    }

    /// Exponent of the additive group.
    pub fn exponent(&self) -> i64 {
        self.amb.modulus()
    }

    /// `n·x = 0 ⇒ x = 0`
    pub fn is_torsion_free_for(&self, n: u64) -> bool {
        num_integer::Integer::gcd(&(n as i64), &self.exponent()) == 1
    }

    pub fn subring_span(&self, gens: &[RingElement]) -> Result<Submodule> {
        Submodule::span(&self.amb, gens)
    }

    /// A small set of elements generating the ring (with 1), picked greedily
    /// from the additive generators.
    pub fn ring_generators(&self) -> Result<Vec<RingElement>> {
        let mut picked: Vec<RingElement> = Vec::new();
        let mut sub = Submodule::span(&self.amb, &[self.one()])?;
        for g in self.generators() {
            if sub.contains(&g) {
                continue;
            }
            picked.push(g);
            loop {
                let mut gens = sub.generators();
                let before = sub.cardinality();
                for m in sub.generators() {
                    gens.extend(picked.iter().map(|s| self.mul(&m, s)));
                }
                sub = Submodule::span(&self.amb, &gens)?;
                if sub.cardinality() == before {
                    break;
                }
            }
        }
        Ok(picked)
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("orders", &self.amb.orders())
            .field("one", &self.one)
            .finish()
    }
}

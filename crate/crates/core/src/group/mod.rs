//! Finite groups as Cayley tables. Elements are indices with the identity at 0.

mod construct;
mod spec;
mod subgroup;

pub use spec::{parse_group, GroupDefinition};
pub use subgroup::SubgroupSet;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::prime_divisors;

/// Groups up to this order are checked for associativity on every triple.
const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
const SPOT_CHECKS: usize = 200_000;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    /// Validates a Cayley table: Latin square, identity at index 0, associativity.
    pub fn from_cayley(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Self::from_flat(n, flat, String::new())
    }

    pub(crate) fn from_flat(n: usize, table: Vec<usize>, name: String) -> Result<Self> {
        if table.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        for i in 0..n {
            if table[i] != i || table[i * n] != i {
                return Err(Error::NotAGroup("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let x = table[i * n + j];
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotAGroup(format!("row {i} repeats {x}")));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let x = table[j * n + i];
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotAGroup(format!("column {i} repeats {x}")));
                }
            }
        }
        let inv = (0..n).map(|i| (0..n).find(|&j| table[i * n + j] == 0).expect("Latin row contains 0")).collect();
        let g = FiniteGroup { n, table, inv, name };
        let assoc = |a: usize, b: usize, c: usize| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::NotAGroup(format!("associativity fails on ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SPOT_CHECKS {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::NotAGroup(format!("associativity fails on ({a},{b},{c})")));
                }
            }
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn label(&self) -> String {
        if self.name.is_empty() {
            format!("group[{}]", self.n)
        } else {
            self.name.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// `a⁻¹b⁻¹ab`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `b⁻¹ab`
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    /// Primes dividing the order.
    pub fn pi(&self) -> Vec<u64> {
        prime_divisors(self.n as u64)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.pi().iter().all(|&q| q == p)
    }

    /// The derived subgroup is a `p`-group.
    pub fn is_p_abelian(&self, p: u64) -> bool {
        prime_divisors(self.derived_subgroup().order() as u64).iter().all(|&q| q == p)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("name", &self.name).field("order", &self.n).finish()
    }
}

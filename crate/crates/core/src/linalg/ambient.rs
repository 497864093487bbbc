use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abelian group `ℤ/n₁ × … × ℤ/n_k`.
///
/// Every computation on an ambient happens inside ℤ/N with `N = lcm(nᵢ)`:
/// coordinate `i` is embedded by multiplication with `N / nᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Ambient {
    orders: Vec<i64>,
    modulus: i64,
}

/// Largest exponent allowed so that products of residues fit in an `i64`.
const MAX_MODULUS: i64 = 1 << 31;

impl Ambient {
    pub fn new(orders: Vec<i64>) -> Result<Self> {
        let mut modulus: i64 = 1;
        for &n in &orders {
            if n < 1 {
                return Err(Error::InvalidParameter(format!("cyclic order {n} < 1")));
            }
            modulus = modulus.lcm(&n);
            if modulus > MAX_MODULUS {
                return Err(Error::InvalidParameter(format!("exponent exceeds {MAX_MODULUS}")));
            }
        }
        Ok(Ambient { orders, modulus })
    }

    /// `(ℤ/n)^rank`
    pub fn uniform(n: i64, rank: usize) -> Result<Self> {
        Self::new(vec![n; rank])
    }

    pub fn concat(parts: &[&Ambient]) -> Result<Self> {
        Self::new(parts.iter().flat_map(|a| a.orders.iter().copied()).collect())
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// The exponent `lcm(nᵢ)` of the group.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn cardinality(&self) -> BigUint {
        self.orders.iter().map(|&n| BigUint::from(n as u64)).product()
    }

    /// Cardinality if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.orders.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n as u64))
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = self.zero();
        v[i] = 1 % self.orders[i];
        v
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &n) in v.iter_mut().zip(&self.orders) {
            *x = x.rem_euclid(n);
        }
    }

    pub fn reduced(&self, mut v: Vec<i64>) -> Vec<i64> {
        self.reduce(&mut v);
        v
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), n)| (x - y).rem_euclid(*n)).collect()
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        a.iter().zip(&self.orders).map(|(x, n)| (-x).rem_euclid(*n)).collect()
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Vec<i64> {
        a.iter().zip(&self.orders).map(|(x, n)| ((k % n) * x).rem_euclid(*n)).collect()
    }

    /// `acc += k·a` in place.
    pub fn add_scaled(&self, acc: &mut [i64], k: i64, a: &[i64]) {
        for ((x, y), n) in acc.iter_mut().zip(a).zip(&self.orders) {
            *x = (*x + (k % n) * y).rem_euclid(*n);
        }
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(())
    }

    /// Additive order of `v`.
    pub fn element_order(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.orders).fold(1, |acc, (&x, &n)| acc.lcm(&(n / x.gcd(&n))))
    }

    /// Embedding into `(ℤ/N)^rank`.
    pub fn scale_up(&self, v: &[i64]) -> Vec<i64> {
        v.iter().zip(&self.orders).map(|(&x, &n)| (x.rem_euclid(n)) * (self.modulus / n)).collect()
    }

    /// Inverse of [`scale_up`](Self::scale_up) on vectors of the image.
    pub fn scale_down(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| {
                let f = self.modulus / n;
                debug_assert_eq!(x % f, 0, "vector outside the embedded ambient");
                x / f
            })
            .collect()
    }

    /// Mixed-radix enumeration of every element; `None` if the group has more than `cap` elements.
    pub fn elements(&self, cap: u64) -> Option<ElementIter<'_>> {
        let size = self.size()?;
        (size <= cap).then(|| ElementIter { amb: self, next: Some(self.zero()) })
    }

    /// Mixed-radix index of a reduced vector.
    pub fn index_of(&self, v: &[i64]) -> usize {
        let mut idx = 0usize;
        for (x, &n) in v.iter().zip(&self.orders).rev() {
            idx = idx * n as usize + *x as usize;
        }
        idx
    }

    pub fn from_index(&self, mut idx: usize) -> Vec<i64> {
        self.orders
            .iter()
            .map(|&n| {
                let x = (idx % n as usize) as i64;
                idx /= n as usize;
                x
            })
            .collect()
    }
}

impl TryFrom<Vec<i64>> for Ambient {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Ambient::new(v)
    }
}

impl From<Ambient> for Vec<i64> {
    fn from(a: Ambient) -> Self {
        a.orders
    }
}

pub struct ElementIter<'a> {
    amb: &'a Ambient,
    next: Option<Vec<i64>>,
}

impl Iterator for ElementIter<'_> {
    type Item = Vec<i64>;
    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut carried = true;
        for (x, &n) in succ.iter_mut().zip(self.amb.orders()) {
            *x += 1;
            if *x < n {
                carried = false;
                break;
            }
            *x = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_indexing() {
        let a = Ambient::new(vec![2, 3]).unwrap();
        let all: Vec<_> = a.elements(100).unwrap().collect();
        assert_eq!(all.len(), 6);
        for (i, v) in all.iter().enumerate() {
            assert_eq!(a.index_of(v), i);
            assert_eq!(&a.from_index(i), v);
        }
        assert!(a.elements(5).is_none());
        let trivial = Ambient::new(vec![]).unwrap();
        assert_eq!(trivial.elements(1).unwrap().count(), 1);
    }

    #[test]
    fn scaling_roundtrip() {
        let a = Ambient::new(vec![2, 4, 3]).unwrap();
        assert_eq!(a.modulus(), 12);
        let v = vec![1, 3, 2];
        assert_eq!(a.scale_up(&v), vec![6, 9, 8]);
        assert_eq!(a.scale_down(&a.scale_up(&v)), v);
        assert_eq!(a.element_order(&[1, 2, 0]), 2);
        assert!(Ambient::new(vec![0]).is_err());
    }
}

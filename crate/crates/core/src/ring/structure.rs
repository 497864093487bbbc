use super::{FiniteRing, RingElement};
use crate::error::{Error, Result};
use crate::linalg::{Hom, Submodule};
use crate::scalar::{is_prime, prime_divisors};

/// The prime radical together with the least `n` such that its `n`-th power vanishes.
#[derive(Clone, Debug)]
pub struct RadicalCertificate {
    pub radical: Submodule,
    pub nilpotency_index: usize,
}

impl FiniteRing {
    /// `{z : [z, gᵢ] = 0 for every generator}`
    pub fn center(&self) -> Submodule {
        let gens = self.generators();
        self.stacked_hom(gens.len(), |i| gens.iter().flat_map(|g| self.bracket(&gens[i], g)).collect())
            .kernel()
    }

    pub fn is_central(&self, z: &[i64]) -> bool {
        self.generators().iter().all(|g| self.is_zero(&self.bracket(z, g)))
    }

    /// Multiplicative inverse, if `x` is a unit.
    ///
    /// A one-sided inverse in a finite ring is two-sided, so one solve suffices;
    /// both products are still checked.
    pub fn inverse(&self, x: &[i64]) -> Option<RingElement> {
        let (y, _) = self.left_mul(x).solve(&self.one()).ok()??;
        (self.mul(&y, x) == self.one()).then_some(y)
    }

    pub fn is_unit(&self, x: &[i64]) -> bool {
        self.left_mul(x).kernel().is_zero()
    }

    pub fn units(&self, cap: u64) -> Result<Vec<RingElement>> {
        Ok(self.elements(cap)?.into_iter().filter(|x| self.is_unit(x)).collect())
    }

    pub fn idempotents(&self, cap: u64) -> Result<Vec<RingElement>> {
        Ok(self.elements(cap)?.into_iter().filter(|x| &self.mul(x, x) == x).collect())
    }

    pub fn is_nilpotent_element(&self, x: &[i64]) -> bool {
        // x^n = 0 for n = rank of the additive length bound; |B| is a safe ceiling
        let mut p = x.to_vec();
        let bound = self.nilpotency_bound();
        for _ in 0..bound {
            if self.is_zero(&p) {
                return true;
            }
            p = self.mul(&p, x);
        }
        self.is_zero(&p)
    }

    /// Upper bound on the nilpotency index of any nilpotent element: the
    /// composition length of the additive group plus one.
    fn nilpotency_bound(&self) -> usize {
        let len: u32 = self
            .ambient()
            .orders()
            .iter()
            .map(|&n| {
                let mut m = n as u64;
                let mut c = 0;
                for p in prime_divisors(m) {
                    while m.is_multiple_of(p) {
                        m /= p;
                        c += 1;
                    }
                }
                c
            })
            .sum();
        len as usize + 1
    }

    /// Semiprime iff no nonzero `x` has `xBx = 0`.
    pub fn is_semiprime(&self, cap: u64) -> Result<bool> {
        let gens = self.generators();
        for x in self.elements(cap)? {
            if self.is_zero(&x) {
                continue;
            }
            if gens.iter().all(|g| self.is_zero(&self.mul(&self.mul(&x, g), &x))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First nonzero `x` with `xBx = 0`, if any.
    pub fn semiprime_witness(&self, cap: u64) -> Result<Option<RingElement>> {
        let gens = self.generators();
        Ok(self.elements(cap)?.into_iter().find(|x| {
            !self.is_zero(x) && gens.iter().all(|g| self.is_zero(&self.mul(&self.mul(x, g), x)))
        }))
    }

    /// Prime iff for every nonzero `x` the map `y ↦ (x gᵢ y)ᵢ` is injective.
    pub fn is_prime(&self, cap: u64) -> Result<bool> {
        if self.size() == Some(1) {
            return Ok(false);
        }
        let gens = self.generators();
        for x in self.elements(cap)? {
            if self.is_zero(&x) {
                continue;
            }
            let xg: Vec<RingElement> = gens.iter().map(|g| self.mul(&x, g)).collect();
            let hom = self.stacked_hom(gens.len(), |j| xg.iter().flat_map(|a| self.mul(a, &gens[j])).collect());
            if !hom.kernel().is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Jacobson radical `{x : 1 − ax is a unit for all a}`, which is the prime
    /// radical of a finite ring.
    pub fn prime_radical(&self, cap: u64) -> Result<RadicalCertificate> {
        let elems = self.elements(cap)?;
        let amb = self.ambient();
        let unit: Vec<bool> = elems.iter().map(|x| self.is_unit(x)).collect();
        let one = self.one();
        let mut members = Vec::new();
        for x in &elems {
            let ok = elems.iter().all(|a| unit[amb.index_of(&self.sub(&one, &self.mul(a, x)))]);
            if ok {
                members.push(x.clone());
            }
        }
        let radical = Submodule::span(amb, &members)?;
        let nilpotency_index = self.nilpotency_index(&radical)?;
        Ok(RadicalCertificate { radical, nilpotency_index })
    }

    /// Least `n ≥ 1` with `Iⁿ = 0`.
    pub fn nilpotency_index(&self, ideal: &Submodule) -> Result<usize> {
        let gens = ideal.generators();
        let mut power = ideal.clone();
        let bound = self.nilpotency_bound();
        for n in 1..=bound {
            if power.is_zero() {
                return Ok(n);
            }
            let prods: Vec<RingElement> = power
                .generators()
                .iter()
                .flat_map(|a| gens.iter().map(move |b| (a, b)))
                .map(|(a, b)| self.mul(a, b))
                .collect();
            power = Submodule::span(self.ambient(), &prods)?;
        }
        if power.is_zero() {
            Ok(bound + 1)
        } else {
            Err(Error::Precondition("ideal is not nilpotent".into()))
        }
    }

    /// `{r : rK = Kr = 0}`
    pub fn annihilator(&self, k: &Submodule) -> Result<Submodule> {
        if k.ambient() != self.ambient() {
            return Err(Error::AmbientMismatch);
        }
        let ks = k.generators();
        if ks.is_empty() {
            return Ok(Submodule::full(self.ambient()));
        }
        let gens = self.generators();
        let hom = self.stacked_hom(2 * ks.len(), |j| {
            ks.iter().flat_map(|s| self.mul(&gens[j], s).into_iter().chain(self.mul(s, &gens[j]))).collect()
        });
        Ok(hom.kernel())
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[RingElement]) -> Result<Submodule> {
        let ring_gens = self.generators();
        let mut cur = Submodule::span(self.ambient(), gens)?;
        loop {
            let mut next = cur.generators();
            for s in cur.generators() {
                for g in &ring_gens {
                    next.push(self.mul(g, &s));
                    next.push(self.mul(&s, g));
                }
            }
            let next = Submodule::span(self.ambient(), &next)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, s: &Submodule) -> bool {
        let gens = self.generators();
        s.generators()
            .iter()
            .all(|x| gens.iter().all(|g| s.contains(&self.mul(g, x)) && s.contains(&self.mul(x, g))))
    }

    /// Ideal generated by all commutators.
    pub fn commutator_ideal(&self) -> Submodule {
        let gens = self.generators();
        let comms: Vec<RingElement> = gens
            .iter()
            .enumerate()
            .flat_map(|(i, a)| gens[..i].iter().map(move |b| (a, b)))
            .map(|(a, b)| self.bracket(a, b))
            .collect();
        self.ideal_closure(&comms).expect("commutators lie in the ambient")
    }

    /// Whether `p·1` is a unit.
    pub fn is_invertible_prime(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(self.is_unit(&self.integer(p as i64)))
    }

    /// Whether every prime divisor of `n` is invertible.
    pub fn inverts(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.is_invertible_prime(p).unwrap_or(false))
    }

    /// Primes dividing the exponent of the additive group.
    pub fn pi_additive(&self) -> Vec<u64> {
        prime_divisors(self.exponent() as u64)
    }

    /// The map `x ↦ a·x·b` as a homomorphism of the additive group.
    pub fn sandwich(&self, a: &[i64], b: &[i64]) -> Hom {
        let images = self.generators().iter().map(|g| self.mul(&self.mul(a, g), b)).collect();
        Hom::new(self.ambient().clone(), self.ambient().clone(), images).expect("multiplication is additive")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DEFAULT_CAP;

    fn z(n: i64) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    fn m2(n: i64) -> FiniteRing {
        FiniteRing::matrix_ring(&z(n), 2).unwrap()
    }

    fn sorted(mut v: Vec<RingElement>) -> Vec<RingElement> {
        v.sort();
        v
    }

    #[test]
    fn units_of_small_rings() {
        assert_eq!(sorted(z(6).units(DEFAULT_CAP).unwrap()), vec![vec![1], vec![5]]);
        assert_eq!(z(1).units(DEFAULT_CAP).unwrap(), vec![vec![0]]);
        assert_eq!(z(5).units(DEFAULT_CAP).unwrap().len(), 4);
        // |GL_2(F_2)| = (4 - 1)(4 - 2)
        assert_eq!(m2(2).units(DEFAULT_CAP).unwrap().len(), 6);
    }

    #[test]
    fn units_oracle_gcd() {
        for n in 1..=30 {
            let r = z(n);
            let expected: Vec<RingElement> = (0..n)
                .filter(|&x| num_integer::Integer::gcd(&x, &n) == 1 || n == 1)
                .map(|x| vec![x])
                .collect();
            assert_eq!(sorted(r.units(DEFAULT_CAP).unwrap()), expected, "n = {n}");
        }
    }

    #[test]
    fn units_closed_under_product() {
        let r = m2(2);
        let us = r.units(DEFAULT_CAP).unwrap();
        for a in &us {
            assert!(r.inverse(a).is_some());
            for b in &us {
                assert!(r.is_unit(&r.mul(a, b)));
            }
        }
    }

    #[test]
    fn idempotents_examples() {
        assert_eq!(sorted(z(6).idempotents(DEFAULT_CAP).unwrap()), vec![vec![0], vec![1], vec![3], vec![4]]);
        assert_eq!(sorted(z(4).idempotents(DEFAULT_CAP).unwrap()), vec![vec![0], vec![1]]);
        assert_eq!(z(7).idempotents(DEFAULT_CAP).unwrap().len(), 2);
    }

    #[test]
    fn centers() {
        let c = m2(2).center();
        assert_eq!(c.size(), Some(2));
        assert!(c.contains(&m2(2).one()));
        assert!(z(12).center().is_full());
        let p = FiniteRing::product(&z(2), &z(3)).unwrap();
        assert!(p.center().is_full());
    }

    #[test]
    fn center_matches_brute_force() {
        let r = m2(2);
        let all = r.elements(DEFAULT_CAP).unwrap();
        let brute: Vec<_> = all.iter().filter(|z| all.iter().all(|x| r.mul(z, x) == r.mul(x, z))).collect();
        assert_eq!(brute.len() as u64, r.center().size().unwrap());
    }

    #[test]
    fn primeness() {
        assert!(!z(4).is_semiprime(DEFAULT_CAP).unwrap());
        assert_eq!(z(4).semiprime_witness(DEFAULT_CAP).unwrap(), Some(vec![2]));
        assert!(m2(2).is_prime(DEFAULT_CAP).unwrap());
        assert!(m2(2).is_semiprime(DEFAULT_CAP).unwrap());
        assert!(z(6).is_semiprime(DEFAULT_CAP).unwrap());
        assert!(!z(6).is_prime(DEFAULT_CAP).unwrap());
        assert!(z(5).is_prime(DEFAULT_CAP).unwrap());
    }

    #[test]
    fn prime_radicals() {
        let cert = z(12).prime_radical(DEFAULT_CAP).unwrap();
        assert_eq!(sorted(cert.radical.elements(64).unwrap()), vec![vec![0], vec![6]]);
        assert_eq!(cert.nilpotency_index, 2);
        assert!(m2(2).prime_radical(DEFAULT_CAP).unwrap().radical.is_zero());
        assert!(FiniteRing::field(2, 2).unwrap().prime_radical(DEFAULT_CAP).unwrap().radical.is_zero());
        let r8 = z(8).prime_radical(DEFAULT_CAP).unwrap();
        assert_eq!(r8.radical.size(), Some(4));
        assert_eq!(r8.nilpotency_index, 3);
    }

    #[test]
    fn radical_quotient_is_semiprime() {
        for n in [4, 8, 9, 12, 18, 24] {
            let r = z(n);
            let cert = r.prime_radical(DEFAULT_CAP).unwrap();
            assert!(r.is_ideal(&cert.radical));
            let (q, _) = r.quotient_ring(&cert.radical).unwrap();
            assert!(q.is_semiprime(DEFAULT_CAP).unwrap(), "Zmod({n})");
        }
    }

    #[test]
    fn annihilators_and_commutator_ideal() {
        let r = z(12);
        assert!(r.annihilator(&Submodule::zero(r.ambient())).unwrap().is_full());
        let six = Submodule::span(r.ambient(), &[vec![6]]).unwrap();
        assert_eq!(r.annihilator(&six).unwrap().size(), Some(6));
        assert!(r.commutator_ideal().is_zero());
        assert!(m2(2).commutator_ideal().is_full());
    }

    #[test]
    fn invertible_primes() {
        assert!(z(5).is_invertible_prime(2).unwrap());
        assert!(!z(6).is_invertible_prime(2).unwrap());
        assert!(z(6).is_invertible_prime(4).is_err());
        assert_eq!(m2(6).pi_additive(), vec![2, 3]);
    }

    #[test]
    fn prime_implies_semiprime_on_small_rings() {
        let rings = vec![z(2), z(4), z(6), z(9), m2(2), FiniteRing::field(3, 2).unwrap()];
        for r in rings {
            if r.is_prime(DEFAULT_CAP).unwrap() {
                assert!(r.is_semiprime(DEFAULT_CAP).unwrap());
            }
        }
    }
}

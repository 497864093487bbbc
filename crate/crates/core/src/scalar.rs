//! Exact integer scalars.
//!
//! The normal-form routines are written once over [`ExactInt`] and used with
//! two concrete types: [`BigInt`](num_bigint::BigInt) wherever entries can
//! grow without bound (Smith form over ℤ), and `i64` wherever every value is
//! already reduced modulo a small modulus (Howell form over ℤ/N).

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable by the normal-form algorithms.
pub trait ExactInt:
    Clone + Debug + Display + Ord + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    fn of(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every ExactInt")
    }

    /// Least non-negative residue modulo `m > 0`.
    fn residue(&self, m: &Self) -> Self {
        self.mod_floor(m)
    }
}

impl<T> ExactInt for T where
    T: Clone + Debug + Display + Ord + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse<T: ExactInt>(a: &T, m: &T) -> Option<T> {
    if m.is_one() {
        return Some(T::zero());
    }
    let e = a.residue(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.residue(m))
    } else {
        None
    }
}

/// A unit `u` of ℤ/m with `u·a ≡ gcd(a, m) (mod m)`.
///
/// Used to normalise Howell pivots to divisors of the modulus.
pub fn unit_normalizer<T: ExactInt>(a: &T, m: &T) -> T {
    let a = a.residue(m);
    let d = a.gcd(m);
    if a.is_zero() || m.is_one() {
        return T::one();
    }
    let reduced_m = m.clone() / d.clone();
    let reduced_a = a / d;
    let mut u = mod_inverse(&reduced_a, &reduced_m).unwrap_or_else(T::one);
    if reduced_m.is_one() {
        u = T::one();
    }
    while !u.gcd(m).is_one() {
        u = u + reduced_m.clone();
    }
    u.residue(m)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

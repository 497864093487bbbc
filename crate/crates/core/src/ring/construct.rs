use super::{FiniteRing, RingElement};
use crate::error::{Error, Result};
use crate::linalg::{Ambient, Quotient, Submodule};
use crate::scalar::is_prime;

impl FiniteRing {
    /// ℤ/n. `n = 1` gives the zero ring.
    pub fn zmod(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("Zmod({n}) needs n >= 1")));
        }
        let amb = Ambient::new(vec![n])?;
        Self::from_flat(amb, vec![vec![1 % n]], vec![1 % n], format!("Zmod({n})"))
    }

    /// Full `k × k` matrix ring over `r`. Generator `(a, b, l)` is `E_ab · r_l`.
    pub fn matrix_ring(r: &FiniteRing, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
        }
        let rk = r.rank();
        let amb = Ambient::new((0..k * k).flat_map(|_| r.ambient().orders().iter().copied()).collect())?;
        let n = amb.rank();
        let index = |a: usize, b: usize, l: usize| (a * k + b) * rk + l;
        let mut flat = vec![vec![0; n]; n * n];
        for a in 0..k {
            for b in 0..k {
                for l in 0..rk {
                    for d in 0..k {
                        for m in 0..rk {
                            // (E_ab r_l)(E_bd r_m) = E_ad (r_l r_m)
                            let prod = r.table_entry(l, m);
                            let slot = &mut flat[index(a, b, l) * n + index(b, d, m)];
                            for (t, &c) in prod.iter().enumerate() {
                                slot[index(a, d, t)] = c;
                            }
                        }
                    }
                }
            }
        }
        let mut one = vec![0; n];
        for a in 0..k {
            for (t, &c) in r.one().iter().enumerate() {
                one[index(a, a, t)] = c;
            }
        }
        Self::from_flat(amb, flat, one, format!("Mat({k}, {})", r.label()))
    }

    /// Direct product `r × s`.
    pub fn product(r: &FiniteRing, s: &FiniteRing) -> Result<Self> {
        let amb = Ambient::concat(&[r.ambient(), s.ambient()])?;
        let (kr, ks) = (r.rank(), s.rank());
        let n = kr + ks;
        let mut flat = vec![vec![0; n]; n * n];
        for i in 0..kr {
            for j in 0..kr {
                flat[i * n + j][..kr].copy_from_slice(r.table_entry(i, j));
            }
        }
        for i in 0..ks {
            for j in 0..ks {
                flat[(kr + i) * n + kr + j][kr..].copy_from_slice(s.table_entry(i, j));
            }
        }
        let one = r.one().into_iter().chain(s.one()).collect();
        Self::from_flat(amb, flat, one, format!("Prod({}, {})", r.label(), s.label()))
    }

    /// GF(p^e) as 𝔽_p[x]/(f) for the lexicographically first monic irreducible `f` of degree `e`.
    pub fn field(p: i64, e: usize) -> Result<Self> {
        check_field_params(p, e)?;
        let f = first_irreducible(p, e);
        Self::field_with_modulus(p, &f)
    }

    /// 𝔽_p[x]/(f) for a supplied monic polynomial `f` (coefficients low degree first).
    pub fn field_with_modulus(p: i64, f: &[i64]) -> Result<Self> {
        let e = f.len().saturating_sub(1);
        check_field_params(p, e)?;
        let f: Vec<i64> = f.iter().map(|c| c.rem_euclid(p)).collect();
        if f[e] != 1 {
            return Err(Error::InvalidParameter("modulus polynomial must be monic".into()));
        }
        if !is_irreducible(p, &f) {
            return Err(Error::InvalidParameter(format!("polynomial {f:?} is reducible over F_{p}")));
        }
        let amb = Ambient::uniform(p, e)?;
        // powers x^0 .. x^(2e-2) reduced modulo f
        let mut powers: Vec<Vec<i64>> = Vec::with_capacity(2 * e);
        let mut cur = vec![0; e];
        cur[0] = 1 % p;
        for _ in 0..2 * e - 1 {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[e - 1];
            for i in (1..e).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..e {
                cur[i] = (cur[i] - top * f[i]).rem_euclid(p);
            }
        }
        let flat = (0..e * e).map(|idx| powers[idx / e + idx % e].clone()).collect();
        let name = if e == 1 { format!("GF({p},1)") } else { format!("GF({p},{e})") };
        Self::from_flat(amb, flat, powers[0].clone(), name)
    }

    /// The element `n·1`.
    pub fn integer(&self, n: i64) -> RingElement {
        self.scale(n, &self.one())
    }

    /// `B/I` for a two-sided ideal `I`, with the projection.
    pub fn quotient_ring(&self, ideal: &Submodule) -> Result<(FiniteRing, Quotient)> {
        if ideal.ambient() != self.ambient() {
            return Err(Error::AmbientMismatch);
        }
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("submodule is not a two-sided ideal".into()));
        }
        let q = Quotient::new(ideal);
        let lifts = q.lifts();
        let flat = lifts
            .iter()
            .flat_map(|a| lifts.iter().map(move |b| (a, b)))
            .map(|(a, b)| q.project(&self.mul(a, b)))
            .collect();
        let one = q.project(&self.one());
        let ring = Self::from_flat(q.target().clone(), flat, one, format!("{}/I", self.label()))?;
        Ok((ring, q))
    }
}

fn check_field_params(p: i64, e: usize) -> Result<()> {
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(Error::InvalidParameter("field degree must be at least 1".into()));
    }
    Ok(())
}

/// Remainder of `a` modulo the monic `f` over 𝔽_p.
fn poly_rem(p: i64, a: &[i64], f: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if lead != 0 {
            for (i, &c) in f.iter().enumerate() {
                r[shift + i] = (r[shift + i] - lead * c).rem_euclid(p);
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(p: i64, f: &[i64]) -> bool {
    let e = f.len() - 1;
    // trial division by every monic polynomial of degree 1..=e/2
    for d in 1..=e / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u64) as i64);
                c /= p as u64;
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: i64, e: usize) -> Vec<i64> {
    for code in 0..(p as u64).pow(e as u32) {
        let mut f = Vec::with_capacity(e + 1);
        let mut c = code;
        for _ in 0..e {
            f.push((c % p as u64) as i64);
            c /= p as u64;
        }
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

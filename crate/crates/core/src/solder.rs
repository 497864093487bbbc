//! Solders: maps `h : R → R` with `(a+b)h(a+b) = a h(a) + b h(b)` for all
//! `a, b` and `h(ab) = h(a) + h(b)` for nonzero `a, b`.

use std::sync::Arc;

use serde::Serialize;

use crate::derivation::Derivation;
use crate::error::{cap_exceeded, Error, Result};
use crate::ring::{FiniteRing, RingElement};

/// Largest ring on which solders are checked or enumerated.
pub const DEFAULT_SOLDER_CAP: u64 = 64;

/// A solder as a dense value table, indexed like [`crate::linalg::Ambient::index_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solder {
    ring: Arc<FiniteRing>,
    values: Vec<RingElement>,
}

/// Precomputed sums and products of a small ring, by element index.
struct Tables {
    elems: Vec<RingElement>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
}

impl Tables {
    fn new(ring: &FiniteRing, cap: u64) -> Result<Self> {
        let size = ring.size().unwrap_or(u64::MAX);
        if size > cap {
            return Err(cap_exceeded(format!("solders of {}", ring.label()), size, cap));
        }
        let elems = ring.elements(cap)?;
        let amb = ring.ambient();
        let n = elems.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                add.push(amb.index_of(&ring.add(a, b)));
                mul.push(amb.index_of(&ring.mul(a, b)));
            }
        }
        Ok(Tables { zero: amb.index_of(&ring.zero()), elems, add, mul })
    }

    fn n(&self) -> usize {
        self.elems.len()
    }
}

/// `x·h(x)` and `h`-sums by index, given partial values.
struct Checker<'a> {
    t: &'a Tables,
    ring: &'a FiniteRing,
}

impl Checker<'_> {
    fn times(&self, x: usize, hx: usize) -> usize {
        self.t.mul[x * self.t.n() + hx]
    }

    fn plus(&self, a: usize, b: usize) -> usize {
        self.t.add[a * self.t.n() + b]
    }

    /// Checks every constraint whose elements all have values, involving `x`.
    fn consistent(&self, h: &[Option<usize>], x: usize) -> bool {
        let n = self.t.n();
        let get = |i: usize| h[i];
        for a in 0..n {
            let Some(ha) = get(a) else { continue };
            for b in 0..n {
                let Some(hb) = get(b) else { continue };
                let s = self.plus(a, b);
                if a == x || b == x || s == x {
                    if let Some(hs) = get(s) {
                        if self.times(s, hs) != self.plus(self.times(a, ha), self.times(b, hb)) {
                            return false;
                        }
                    }
                }
                if a != self.t.zero && b != self.t.zero {
                    let p = self.t.mul[a * n + b];
                    if a == x || b == x || p == x {
                        if let Some(hp) = get(p) {
                            if hp != self.plus(ha, hb) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        let _ = self.ring;
        true
    }
}

/// Whether `values` (indexed by element) is a solder.
pub fn is_solder(ring: &FiniteRing, values: &[RingElement]) -> Result<bool> {
    let t = Tables::new(ring, DEFAULT_SOLDER_CAP)?;
    if values.len() != t.n() {
        return Err(Error::DimensionMismatch { expected: t.n(), found: values.len() });
    }
    let amb = ring.ambient();
    let h: Vec<Option<usize>> = values
        .iter()
        .map(|v| amb.check_len(v).map(|_| Some(amb.index_of(&amb.reduced(v.clone())))))
        .collect::<Result<_>>()?;
    let c = Checker { t: &t, ring };
    Ok((0..t.n()).all(|x| c.consistent(&h, x)))
}

/// Every solder, by backtracking over element values with constraint checks
/// after each assignment.
pub fn enumerate_solders(ring: &Arc<FiniteRing>, cap: u64) -> Result<Vec<Solder>> {
    let t = Tables::new(ring, cap)?;
    let n = t.n();
    let c = Checker { t: &t, ring };
    let mut h: Vec<Option<usize>> = vec![None; n];
    let mut out = Vec::new();
    // assign the unity first: h(1) = 0 is forced and prunes early
    let one = ring.ambient().index_of(&ring.one());
    let mut order = vec![one];
    order.extend((0..n).filter(|&i| i != one));
    fn rec(c: &Checker, order: &[usize], depth: usize, h: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        if depth == order.len() {
            out.push(h.iter().map(|v| v.expect("all assigned")).collect());
            return;
        }
        let x = order[depth];
        for v in 0..c.t.n() {
            h[x] = Some(v);
            if c.consistent(h, x) {
                rec(c, order, depth + 1, h, out);
            }
        }
        h[x] = None;
    }
    let mut raw = Vec::new();
    rec(&c, &order, 0, &mut h, &mut raw);
    raw.sort();
    for r in raw {
        let values = r.iter().map(|&i| t.elems[i].clone()).collect();
        out.push(Solder { ring: Arc::clone(ring), values });
    }
    Ok(out)
}

impl Solder {
    pub fn new(ring: Arc<FiniteRing>, values: Vec<RingElement>) -> Result<Self> {
        if !is_solder(&ring, &values)? {
            return Err(Error::NotASolder("a defining identity fails".into()));
        }
        let values = values.into_iter().map(|v| ring.ambient().reduced(v)).collect();
        Ok(Solder { ring, values })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    pub fn value(&self, x: &[i64]) -> &RingElement {
        &self.values[self.ring.ambient().index_of(x)]
    }

    /// Whether every value is central.
    pub fn is_central(&self) -> bool {
        self.values.iter().all(|v| self.ring.is_central(v))
    }

    /// `x[h(x), B] = 0` for every `x`.
    pub fn bracket_condition(&self) -> bool {
        let gens = self.ring.generators();
        let elems = self.ring.elements(DEFAULT_SOLDER_CAP).expect("solder rings are small");
        elems.iter().all(|x| {
            let hx = self.value(x);
            gens.iter().all(|g| self.ring.is_zero(&self.ring.mul(x, &self.ring.bracket(hx, g))))
        })
    }
}

/// `δ_h : x ↦ x·h(x)` when the bracket condition holds, `None` otherwise.
/// An error means the bracket condition held but `δ_h` failed to be a derivation.
pub fn delta_from_solder(h: &Solder) -> Result<Option<Derivation>> {
    if !h.bracket_condition() {
        return Ok(None);
    }
    let ring = Arc::clone(&h.ring);
    let images: Vec<RingElement> = ring.generators().iter().map(|g| ring.mul(g, h.value(g))).collect();
    let d = Derivation::new(Arc::clone(&ring), images)?;
    for x in ring.elements(DEFAULT_SOLDER_CAP)? {
        if d.apply(&x) != ring.mul(&x, h.value(&x)) {
            return Err(Error::NotADerivation("x·h(x) is not additive".into()));
        }
    }
    Ok(Some(d))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolderReport {
    pub checks: usize,
    pub violations: Vec<String>,
    pub delta_is_derivation: bool,
    pub central: bool,
}

impl SolderReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the consequences of the solder identities: `h(xy) = h(yx)`;
/// `δ_h ∈ Der B ⟺ x[h(x), B] = 0`; for prime `B`, `δ_h ∈ Der B ⟺ h` central;
/// `h(2) = 0` if `B` is 2-torsion-free; `h(e) = 0` for nonzero idempotents;
/// `h(x) = −h(y)` when `xy = 1`.
pub fn check_solder_properties(h: &Solder) -> Result<SolderReport> {
    let ring = h.ring();
    let elems = ring.elements(DEFAULT_SOLDER_CAP)?;
    let mut r = SolderReport::default();
    let check = |ok: bool, what: String, r: &mut SolderReport| {
        r.checks += 1;
        if !ok {
            r.violations.push(what);
        }
    };
    for x in &elems {
        for y in &elems {
            let ok = h.value(&ring.mul(x, y)) == h.value(&ring.mul(y, x));
            check(ok, format!("h(xy) != h(yx) for x={x:?}, y={y:?}"), &mut r);
            if ring.mul(x, y) == ring.one() {
                let ok = *h.value(x) == ring.neg(h.value(y));
                check(ok, format!("h(x) != -h(y) for xy=1, x={x:?}"), &mut r);
            }
        }
        if !ring.is_zero(x) && &ring.mul(x, x) == x {
            check(ring.is_zero(h.value(x)), format!("h(e) != 0 for idempotent {x:?}"), &mut r);
        }
    }
    if ring.is_torsion_free_for(2) {
        let two = ring.integer(2);
        check(ring.is_zero(h.value(&two)), "h(2) != 0".into(), &mut r);
    }
    let delta = match delta_from_solder(h) {
        Ok(d) => d,
        Err(e) => {
            check(false, format!("bracket condition holds but delta_h fails: {e}"), &mut r);
            None
        }
    };
    // the converse: if x·h(x) is a derivation, the bracket condition must hold
    if delta.is_none() {
        let images: Vec<RingElement> = ring.generators().iter().map(|g| ring.mul(g, h.value(g))).collect();
        let additive = elems.iter().all(|x| {
            let mut acc = ring.zero();
            for (&c, img) in x.iter().zip(&images) {
                acc = ring.add(&acc, &ring.scale(c, img));
            }
            acc == ring.mul(x, h.value(x))
        });
        let is_der = additive && crate::derivation::is_derivation(ring, &images)?;
        check(!is_der, "x·h(x) is a derivation but the bracket condition fails".into(), &mut r);
    }
    r.delta_is_derivation = delta.is_some();
    r.central = h.is_central();
    if ring.is_prime(DEFAULT_SOLDER_CAP)? {
        check(r.delta_is_derivation == r.central, "prime ring: delta_h derivation != h central".into(), &mut r);
    }
    Ok(r)
}

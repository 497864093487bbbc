//! Howell normal form over ℤ/N.
//!
//! A Howell basis is an echelon basis whose pivots divide `N`, whose entries
//! above each pivot are reduced modulo that pivot, and which has the extra
//! property that the rows with pivot column `≥ c` span every element of the
//! module whose first `c` coordinates vanish. Two row sets span the same
//! submodule iff their Howell bases coincide.

use crate::scalar::{unit_normalizer, ExactInt};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HowellBasis<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub modulus: T,
    pub cols: usize,
}

/// Howell basis of the ℤ/N-span of `rows` (each of length `cols`).
pub fn howell_form<T: ExactInt>(rows: Vec<Vec<T>>, cols: usize, modulus: &T) -> HowellBasis<T> {
    let n = modulus.clone();
    let mut rows: Vec<Vec<T>> = rows
        .into_iter()
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            r.into_iter().map(|x| x.residue(&n)).collect::<Vec<T>>()
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();

    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(top, p);
        for i in top + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let a = rows[top][c].clone();
            let b = rows[i][c].clone();
            if b.is_multiple_of(&a) {
                let q = b / a;
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[top], &q, c, &n);
            } else {
                let e = a.extended_gcd(&b);
                let (ag, bg) = (a / e.gcd.clone(), b / e.gcd.clone());
                let (head, tail) = rows.split_at_mut(i);
                let (pr, other) = (&mut head[top], &mut tail[0]);
                for j in c..cols {
                    let x = pr[j].clone();
                    let y = other[j].clone();
                    pr[j] = (e.x.clone() * x.clone() + e.y.clone() * y.clone()).residue(&n);
                    other[j] = (ag.clone() * y - bg.clone() * x).residue(&n);
                }
            }
        }
        let u = unit_normalizer(&rows[top][c], &n);
        if !u.is_one() {
            for x in rows[top][c..].iter_mut() {
                *x = (x.clone() * u.clone()).residue(&n);
            }
        }
        let lead = rows[top][c].clone();
        let ann = n.clone() / lead;
        if !ann.is_one() {
            let extra: Vec<T> = rows[top].iter().map(|x| (x.clone() * ann.clone()).residue(&n)).collect();
            if extra.iter().any(|x| !x.is_zero()) {
                rows.push(extra);
            }
        }
        pivots.push(c);
        top += 1;
    }
    rows.truncate(top);

    // reduce above pivots, left to right
    for k in 0..top {
        let c = pivots[k];
        let lead = rows[k][c].clone();
        for i in 0..k {
            let q = rows[i][c].div_floor(&lead);
            if !q.is_zero() {
                let (head, tail) = rows.split_at_mut(k);
                sub_multiple(&mut head[i], &tail[0], &q, c, &n);
            }
        }
    }
    HowellBasis { rows, pivots, modulus: n, cols }
}

fn sub_multiple<T: ExactInt>(dst: &mut [T], src: &[T], q: &T, from: usize, n: &T) {
    for j in from..dst.len() {
        if !src[j].is_zero() {
            dst[j] = (dst[j].clone() - q.clone() * src[j].clone()).residue(n);
        }
    }
}

impl<T: ExactInt> HowellBasis<T> {
    /// Reduces `v` in place to its canonical coset representative and
    /// returns the multipliers used for each basis row (`v_old = v_new + Σ qᵢ rowᵢ`).
    pub fn reduce(&self, v: &mut [T]) -> Vec<T> {
        let n = &self.modulus;
        for x in v.iter_mut() {
            *x = x.residue(n);
        }
        let mut qs = Vec::with_capacity(self.rows.len());
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let q = v[c].div_floor(&row[c]);
            if !q.is_zero() {
                sub_multiple(v, row, &q, c, n);
            }
            qs.push(q);
        }
        qs
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Size of the span: `∏ N / pivotᵢ`.
    pub fn span_size(&self) -> num_bigint::BigUint {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &c)| {
                let idx = (self.modulus.clone() / r[c].clone()).to_u64().expect("index fits u64");
                num_bigint::BigUint::from(idx)
            })
            .product()
    }
}

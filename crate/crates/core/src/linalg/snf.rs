//! Smith normal form over ℤ with transformation matrices.



use super::matrix::Matrix;
use crate::scalar::ExactInt;

/// `u · a · v = d` with `u`, `v` unimodular and `d` in Smith form.
///
/// `v_inv` is carried along so that callers changing coordinates on the
/// column side do not have to invert `v`.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: ExactInt> Smith<T> {
    /// Nonzero invariant factors `d₁ | d₂ | …`.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Work<T> {
    d: Matrix<T>,
    u: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: ExactInt> Work<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &T) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &T) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k.clone());
    }
}

/// Computes the Smith normal form of `a`.
pub fn smith_normal_form<T: ExactInt>(a: &Matrix<T>) -> Smith<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work { d: a.clone(), u: Matrix::identity(m), v: Matrix::identity(n), v_inv: Matrix::identity(n) };

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_entry(&w.d, t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if w.d[(i, t)].is_zero() {
                    continue;
                }
                let q = w.d[(i, t)].div_floor(&w.d[(t, t)]);
                w.add_row(i, t, &-q);
                if !w.d[(i, t)].is_zero() {
                    w.swap_rows(i, t);
                    clean = false;
                }
            }
            for j in t + 1..n {
                if w.d[(t, j)].is_zero() {
                    continue;
                }
                let q = w.d[(t, j)].div_floor(&w.d[(t, t)]);
                w.add_col(j, t, &-q);
                if !w.d[(t, j)].is_zero() {
                    w.swap_cols(j, t);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot isolated; enforce divisibility of the remaining block
            let pivot = w.d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &T::one()),
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.d.negate_row(t);
            w.u.negate_row(t);
        }
    }
    Smith { u: w.u, d: w.d, v: w.v, v_inv: w.v_inv }
}

fn smallest_entry<T: ExactInt>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

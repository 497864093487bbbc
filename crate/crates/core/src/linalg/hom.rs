use num_integer::Integer;

use super::ambient::Ambient;
use super::howell::howell_form;
use super::submodule::Submodule;
use crate::error::{Error, Result};

/// Codomain coordinates processed per elimination pass.
const CHUNK: usize = 192;

/// A homomorphism between finite abelian groups, given by the images of the
/// domain's cyclic generators.
///
/// Kernels and preimages are computed from the Howell form of the graph
/// `{(f(x), x)}`: the rows whose pivot lies in the domain block span
/// `{(0, x) : f(x) = 0}`. Wide codomains are consumed in chunks, each pass
/// restricting the running kernel.
#[derive(Clone, Debug)]
pub struct Hom {
    domain: Ambient,
    codomain: Ambient,
    images: Vec<Vec<i64>>,
}

impl Hom {
    pub fn new(domain: Ambient, codomain: Ambient, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::DimensionMismatch { expected: domain.rank(), found: images.len() });
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (img, &n) in images.into_iter().zip(domain.orders()) {
            codomain.check_len(&img)?;
            let img = codomain.reduced(img);
            if !codomain.is_zero(&codomain.scale(n, &img)) {
                return Err(Error::IllDefinedMap);
            }
            reduced.push(img);
        }
        Ok(Hom { domain, codomain, images: reduced })
    }

    pub fn domain(&self) -> &Ambient {
        &self.domain
    }

    pub fn codomain(&self) -> &Ambient {
        &self.codomain
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = self.codomain.zero();
        for (&xi, img) in x.iter().zip(&self.images) {
            if xi != 0 {
                self.codomain.add_scaled(&mut out, xi, img);
            }
        }
        out
    }

    pub fn image(&self) -> Submodule {
        Submodule::span(&self.codomain, &self.images).expect("images have codomain length")
    }

    pub fn kernel(&self) -> Submodule {
        self.run(None).expect("homogeneous system is consistent").1
    }

    /// Some `x` with `f(x) = b` (the canonical coset representative) together
    /// with the kernel, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &[i64]) -> Result<Option<(Vec<i64>, Submodule)>> {
        self.codomain.check_len(b)?;
        Ok(self.run(Some(&self.codomain.reduced(b.to_vec()))).map(|(x, k)| {
            let (rep, _) = k.reduce(&x);
            (rep, k)
        }))
    }

    fn run(&self, target: Option<&[i64]>) -> Option<(Vec<i64>, Submodule)> {
        let d = self.domain.rank();
        let m = self.domain.modulus().lcm(&self.codomain.modulus());
        let dom_scale: Vec<i64> = self.domain.orders().iter().map(|&n| m / n).collect();
        let cod_scale: Vec<i64> = self.codomain.orders().iter().map(|&n| m / n).collect();

        // running kernel, unscaled domain coordinates
        let mut kernel: Vec<Vec<i64>> = (0..d).map(|i| self.domain.basis_vector(i)).collect();
        let mut x0 = self.domain.zero();
        let width = self.codomain.rank();
        let mut start = 0;
        while start < width || (start == 0 && width == 0) {
            let end = (start + CHUNK).min(width);
            let ch = end - start;
            let rows: Vec<Vec<i64>> = kernel
                .iter()
                .map(|k| {
                    let fk = self.apply_range(k, start, end);
                    let mut row: Vec<i64> = fk.iter().zip(&cod_scale[start..end]).map(|(v, s)| v * s).collect();
                    row.extend(k.iter().zip(&dom_scale).map(|(v, s)| v * s));
                    row
                })
                .collect();
            let h = howell_form(rows, ch + d, &m);

            if let Some(b) = target {
                let fx0 = self.apply_range(&x0, start, end);
                let mut v: Vec<i64> = (start..end)
                    .map(|j| (b[j] - fx0[j - start]).rem_euclid(self.codomain.orders()[j]) * cod_scale[j])
                    .collect();
                v.extend(std::iter::repeat_n(0, d));
                for (row, &c) in h.rows.iter().zip(&h.pivots) {
                    if c >= ch {
                        break;
                    }
                    let q = Integer::div_floor(&v[c], &row[c]);
                    if q != 0 {
                        for (x, r) in v.iter_mut().zip(row) {
                            *x = (*x - q * r).rem_euclid(m);
                        }
                    }
                }
                if v[..ch].iter().any(|&x| x != 0) {
                    return None;
                }
                // v = (0, -k) with f(k) = b - f(x0) on this chunk
                for i in 0..d {
                    let k = (-v[ch + i]).rem_euclid(m) / dom_scale[i];
                    x0[i] = (x0[i] + k).rem_euclid(self.domain.orders()[i]);
                }
            }

            kernel = h
                .rows
                .iter()
                .zip(&h.pivots)
                .filter(|(_, &c)| c >= ch)
                .map(|(r, _)| r[ch..].iter().zip(&dom_scale).map(|(v, s)| v / s).collect())
                .collect();
            if width == 0 {
                break;
            }
            start = end;
        }
        let k = Submodule::span(&self.domain, &kernel).expect("kernel rows have domain length");
        Some((x0, k))
    }

    fn apply_range(&self, x: &[i64], start: usize, end: usize) -> Vec<i64> {
        let orders = &self.codomain.orders()[start..end];
        let mut out = vec![0i64; end - start];
        for (&xi, img) in x.iter().zip(&self.images) {
            if xi == 0 {
                continue;
            }
            for ((o, &v), &n) in out.iter_mut().zip(&img[start..end]).zip(orders) {
                if v != 0 {
                    *o = (*o + xi * v) % n;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_small_examples() {
        let z4 = Ambient::uniform(4, 2).unwrap();
        // columns of [[1,1],[0,2]]
        let f = Hom::new(z4.clone(), z4.clone(), vec![vec![1, 0], vec![1, 2]]).unwrap();
        let k = f.kernel();
        assert_eq!(k.elements(16).unwrap(), vec![vec![0, 0], vec![2, 2]]);

        let z4_1 = Ambient::new(vec![4]).unwrap();
        let twice = Hom::new(z4_1.clone(), z4_1.clone(), vec![vec![2]]).unwrap();
        assert!(twice.solve(&[1]).unwrap().is_none());
        let (x, ker) = twice.solve(&[2]).unwrap().unwrap();
        assert_eq!(twice.apply(&x), vec![2]);
        assert_eq!(ker.size(), Some(2));
    }

    #[test]
    fn ill_defined_rejected() {
        // Z/2 -> Z/4 sending 1 to 1 is not a homomorphism
        let r = Hom::new(Ambient::new(vec![2]).unwrap(), Ambient::new(vec![4]).unwrap(), vec![vec![1]]);
        assert_eq!(r.unwrap_err(), Error::IllDefinedMap);
        assert!(Hom::new(Ambient::new(vec![2]).unwrap(), Ambient::new(vec![4]).unwrap(), vec![vec![2]]).is_ok());
    }

    #[test]
    fn empty_codomain() {
        let z3 = Ambient::new(vec![3, 3]).unwrap();
        let f = Hom::new(z3.clone(), Ambient::new(vec![]).unwrap(), vec![vec![], vec![]]).unwrap();
        assert!(f.kernel().is_full());
    }
}

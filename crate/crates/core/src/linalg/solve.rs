//! Linear systems modulo an ambient, solved through Smith form over ℤ.
//!
//! The system `A·x ≡ b` (rows read modulo the codomain orders `mⱼ`) is lifted
//! to the integer system `[A | diag(m)]·(x, y) = b`; the kernel lattice of the
//! lifted matrix projects onto the solution module of the homogeneous system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::ambient::Ambient;
use super::matrix::Matrix;
use super::snf::smith_normal_form;
use super::submodule::Submodule;
use crate::error::{Error, Result};
use crate::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSolution {
    /// Canonical representative of the solution coset.
    pub particular: Vec<i64>,
    pub kernel: Submodule,
}

/// Solves `A·x ≡ b` for `x` in `domain` with equations read in `codomain`.
pub fn solve_mod(a: &IntMatrix, b: &[BigInt], domain: &Ambient, codomain: &Ambient) -> Result<Option<ModSolution>> {
    if a.cols() != domain.rank() {
        return Err(Error::DimensionMismatch { expected: domain.rank(), found: a.cols() });
    }
    if a.rows() != codomain.rank() || b.len() != codomain.rank() {
        return Err(Error::DimensionMismatch { expected: codomain.rank(), found: a.rows().max(b.len()) });
    }
    let (k, m) = (a.cols(), a.rows());
    for (i, &n) in domain.orders().iter().enumerate() {
        for (j, &mj) in codomain.orders().iter().enumerate() {
            if !(a[(j, i)].clone() * BigInt::from(n)).is_multiple_of(&BigInt::from(mj)) {
                return Err(Error::IllDefinedMap);
            }
        }
    }

    let mut lifted = Matrix::<BigInt>::zeros(m, k + m);
    for j in 0..m {
        for i in 0..k {
            lifted[(j, i)] = a[(j, i)].clone();
        }
        lifted[(j, k + j)] = BigInt::from(codomain.orders()[j]);
    }
    let s = smith_normal_form(&lifted);
    let rank = s.rank();

    let kernel_gens: Vec<Vec<i64>> = (rank..k + m).map(|c| reduce_column(&s.v.column(c)[..k], domain)).collect();
    let kernel = Submodule::span(domain, &kernel_gens)?;

    let c = s.u.mul_vec(b);
    let diag = s.d.diagonal();
    let mut w = vec![BigInt::zero(); k + m];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            if !ci.is_multiple_of(&diag[i]) {
                return Ok(None);
            }
            w[i] = ci / &diag[i];
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    let z = s.v.mul_vec(&w);
    let x = reduce_column(&z[..k], domain);
    let (particular, _) = kernel.reduce(&x);
    Ok(Some(ModSolution { particular, kernel }))
}

/// [`solve_mod`] with the same ambient on both sides.
pub fn solve_mod_square(a: &IntMatrix, b: &[BigInt], amb: &Ambient) -> Result<Option<ModSolution>> {
    solve_mod(a, b, amb, amb)
}

fn reduce_column(v: &[BigInt], amb: &Ambient) -> Vec<i64> {
    v.iter()
        .zip(amb.orders())
        .map(|(x, &n)| x.mod_floor(&BigInt::from(n)).to_i64().expect("residue fits i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unit_equation_mod_five() {
        let amb = Ambient::new(vec![5]).unwrap();
        let sol = solve_mod_square(&Matrix::from_i64(1, &[vec![1]]), &big(&[0]), &amb).unwrap().unwrap();
        assert_eq!(sol.particular, vec![0]);
        assert!(sol.kernel.is_zero());
    }

    #[test]
    fn kernel_of_upper_triangular_mod_four() {
        let amb = Ambient::uniform(4, 2).unwrap();
        let a = Matrix::from_i64(2, &[vec![1, 1], vec![0, 2]]);
        let sol = solve_mod_square(&a, &big(&[0, 0]), &amb).unwrap().unwrap();
        assert_eq!(sol.kernel, Submodule::span(&amb, &[vec![2, 2]]).unwrap());
        assert_eq!(sol.kernel.size(), Some(2));
    }

    #[test]
    fn parity_obstruction() {
        let amb = Ambient::new(vec![4]).unwrap();
        assert_eq!(solve_mod_square(&Matrix::from_i64(1, &[vec![2]]), &big(&[1]), &amb).unwrap(), None);
    }

    #[test]
    fn dimension_checks() {
        let amb = Ambient::new(vec![4]).unwrap();
        let a = Matrix::from_i64(2, &[vec![1, 1]]);
        assert!(matches!(solve_mod_square(&a, &big(&[0]), &amb), Err(Error::DimensionMismatch { .. })));
    }
}

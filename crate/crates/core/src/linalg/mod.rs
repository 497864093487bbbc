//! Exact linear algebra over ℤ and over finite abelian groups.

mod ambient;
mod hom;
mod howell;
mod matrix;
mod quotient;
mod snf;
mod solve;
mod submodule;

pub use ambient::{Ambient, ElementIter};
pub use hom::Hom;
pub use howell::{howell_form as howell_basis, HowellBasis};
pub use matrix::{is_unimodular, Matrix};
pub use quotient::{Presentation, Quotient};
pub use snf::{smith_normal_form, Smith};
pub use solve::{solve_mod, solve_mod_square, ModSolution};
pub use submodule::Submodule;

use crate::error::Result;
use crate::IntMatrix;
use num_traits::ToPrimitive;

/// Canonical submodule spanned by the rows of `m`.
pub fn howell_form(m: &IntMatrix, amb: &Ambient) -> Result<Submodule> {
    if m.cols() != amb.rank() {
        return Err(crate::Error::DimensionMismatch { expected: amb.rank(), found: m.cols() });
    }
    let rows: Vec<Vec<i64>> = m
        .to_rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .zip(amb.orders())
                .map(|(x, &n)| num_integer::Integer::mod_floor(x, &n.into()).to_i64().unwrap())
                .collect()
        })
        .collect();
    Submodule::span(amb, &rows)
}

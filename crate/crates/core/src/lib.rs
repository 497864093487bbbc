//! Derivations of finite rings and finite group rings.
//!
//! Every structure here is finite and every computation exact: additive
//! groups are products of cyclic groups, subgroups are stored in Howell form,
//! and derivation spaces are solution modules of integer linear systems.

pub mod derivation;
pub mod error;
pub mod group;
pub mod group_ring;
pub mod harness;
pub mod lie;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod solder;

pub use error::{Error, Result};
pub use linalg::{Ambient, Submodule};

/// Integer matrices with unbounded entries.
pub type IntMatrix = linalg::Matrix<num_bigint::BigInt>;
/// Residue matrices; entries always reduced modulo a small exponent.
pub type ResidueMatrix = linalg::Matrix<i64>;

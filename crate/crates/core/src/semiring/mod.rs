//! Exact arithmetic in the max-plus semiring and its extension by −∞.
//!
//! Finite values ([`Scalar`], [`TropVector`], [`TropMatrix`]) and extended
//! values ([`ExtScalar`], [`ExtMatrix`]) are separate types; −∞ only appears
//! where the extended semiring is needed (identities, units, permutations).

mod matrix;
mod scalar;
mod vector;

pub use matrix::{mat_mul, ExtMatrix, Matrix, MaxPlus, TropMatrix};
pub use scalar::{trop_add, trop_mul, ExtScalar, Scalar};
pub use vector::{residuation, TropVector};

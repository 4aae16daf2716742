//! Exact max-plus matrix algebra for finite metric spaces.
//!
//! A distance function `d` on `[n]` gives the matrix `D = (−d(i,j))`. The
//! crate decides when such matrices are idempotent and strongly regular,
//! describes their column spaces as polytropes, and computes the maximal
//! subgroup around a metric matrix from its isometry group.
//!
//! All arithmetic is over exact rationals.

pub mod error;
pub mod fixtures;
pub mod io;
pub mod metric;
pub mod permutation;
pub mod polytope;
pub mod regularity;
pub mod render;
pub mod semiring;
pub mod spectral;
pub mod symmetry;

pub(crate) mod assignment;

pub use error::{Error, Result};
pub use metric::{classify, ClassificationReport, DistanceClass, DistanceTable};
pub use permutation::Permutation;
pub use semiring::{ExtMatrix, ExtScalar, Scalar, TropMatrix, TropVector};

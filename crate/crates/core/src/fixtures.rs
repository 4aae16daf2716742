//! The worked examples used throughout tests, docs and the CLI demos.

use crate::metric::DistanceTable;
use crate::semiring::{Scalar, TropMatrix};

/// Strongly regular idempotent whose polytrope is the triangle
/// (0,0), (3,0), (3,3); it has zeros off the diagonal.
pub fn ea() -> TropMatrix {
    TropMatrix::from_int_rows(&[&[0, 0, 0], &[-3, 0, 0], &[-3, -3, 0]]).expect("3x3")
}

/// Idempotent of an asymmetric three-point semimetric.
pub fn eb() -> TropMatrix {
    TropMatrix::from_int_rows(&[&[0, -1, -1], &[-3, 0, -2], &[-2, -1, 0]]).expect("3x3")
}

/// Idempotent of a three-point metric (symmetric).
pub fn ec() -> TropMatrix {
    let h = |n| Scalar::from_ratio(n, 2);
    TropMatrix::from_rows(vec![
        vec![h(0), h(-3), h(-3)],
        vec![h(-3), h(0), h(-2)],
        vec![h(-3), h(-2), h(0)],
    ])
    .expect("3x3")
}

/// Four-point metric with no Euclidean embedding, points ordered a, b, c, d:
/// a, b, c pairwise at distance 2, each at distance 1 from d.
pub fn cube_metric() -> DistanceTable {
    DistanceTable::from_int_rows(&[&[0, 2, 2, 1], &[2, 0, 2, 1], &[2, 2, 0, 1], &[1, 1, 1, 0]])
        .expect("4x4")
}

/// Three points pairwise at distance 1.
pub fn discrete_metric() -> DistanceTable {
    DistanceTable::from_int_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).expect("3x3")
}

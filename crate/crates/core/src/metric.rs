//! Finite distance functions and their max-plus matrices `D = (−d(i,j))`.
//!
//! [`classify`] evaluates every algebraic and geometric characterisation of
//! semimetric and metric matrices independently and fails loudly if they
//! ever disagree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{extremal_columns, interior_point, membership};
use crate::regularity::is_strongly_regular;
use crate::semiring::{residuation, Scalar, TropMatrix, TropVector};
use crate::spectral::{is_idempotent, kleene_star};

/// A function `d : [n] × [n] → ℚ` with `d(i,i) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Scalar>,
}

impl DistanceTable {
    pub fn new(n: usize, d: Vec<Scalar>) -> Result<Self> {
        if n == 0 || d.len() != n * n {
            return Err(Error::shape(format!(
                "{} distances supplied for {n} points",
                d.len()
            )));
        }
        if let Some(i) = (0..n).find(|&i| !d[i * n + i].is_zero()) {
            return Err(Error::precondition(format!(
                "d({0},{0}) = {1} is not zero",
                i + 1,
                d[i * n + i]
            )));
        }
        Ok(DistanceTable { n, d })
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::shape("distance table must be square"));
        }
        DistanceTable::new(n, rows.iter().flatten().cloned().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect();
        DistanceTable::from_rows(&rows)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.d[i * self.n + j]
    }

    /// Copy with `d(i,j)` replaced (0-based). Fails on the diagonal.
    pub fn with_entry(&self, i: usize, j: usize, value: Scalar) -> Result<Self> {
        let mut d = self.d.clone();
        d[i * self.n + j] = value;
        DistanceTable::new(self.n, d)
    }

    /// The table as a matrix of distances (not negated).
    pub fn as_matrix(&self) -> TropMatrix {
        TropMatrix::new(self.n, self.n, self.d.clone()).expect("n >= 1")
    }
}

/// Strength of a distance function, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceClass {
    /// The triangle inequality fails.
    NotTriangle,
    /// Triangle inequality holds but positivity or separation fails.
    PreSemimetric,
    Semimetric,
    Metric,
}

/// Why a table is not in a stronger class (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `d(i,j) > d(i,k) + d(k,j)`.
    Triangle {
        i: usize,
        k: usize,
        j: usize,
    },
    Negative {
        i: usize,
        j: usize,
    },
    /// Distinct points at distance zero.
    Zero {
        i: usize,
        j: usize,
    },
    Asymmetric {
        i: usize,
        j: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub class: DistanceClass,
    pub witness: Option<Violation>,
}

/// Strongest class the table belongs to, with a witness for the next one.
///
/// The triangle witness is the worst violation (largest excess), ties going
/// to the lexicographically first `(i, j, k)`.
pub fn validate(d: &DistanceTable) -> Validation {
    let n = d.n;
    let mut worst: Option<(Scalar, Violation)> = None;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let excess = d.get(i, j) - &(d.get(i, k) + d.get(k, j));
                if excess.is_positive() && worst.as_ref().is_none_or(|(w, _)| excess > *w) {
                    worst = Some((excess, Violation::Triangle { i, k, j }));
                }
            }
        }
    }
    if let Some((_, v)) = worst {
        return Validation {
            class: DistanceClass::NotTriangle,
            witness: Some(v),
        };
    }
    let pairs = || {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
    };
    for (i, j) in pairs() {
        let v = d.get(i, j);
        let witness = if v.is_negative() {
            Some(Violation::Negative { i, j })
        } else if v.is_zero() {
            Some(Violation::Zero { i, j })
        } else {
            None
        };
        if witness.is_some() {
            return Validation {
                class: DistanceClass::PreSemimetric,
                witness,
            };
        }
    }
    if let Some((i, j)) = pairs().find(|&(i, j)| d.get(i, j) != d.get(j, i)) {
        return Validation {
            class: DistanceClass::Semimetric,
            witness: Some(Violation::Asymmetric { i, j }),
        };
    }
    Validation {
        class: DistanceClass::Metric,
        witness: None,
    }
}

/// `D = (−d(i,j))`.
pub fn to_matrix(d: &DistanceTable) -> TropMatrix {
    d.as_matrix().negate()
}

/// `d(i,j) = −D_ij`; requires a zero diagonal.
pub fn from_matrix(m: &TropMatrix) -> Result<DistanceTable> {
    let n = m.square_dim()?;
    DistanceTable::new(n, m.negate().entries().to_vec())
}

/// Every characterisation of semimetric and metric matrices, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub idempotent: bool,
    pub zero_diagonal: bool,
    /// `A* = A` (the star exists and equals the matrix).
    pub kleene_fixed: bool,
    pub strongly_regular: bool,
    pub off_diagonal_negative: bool,
    pub symmetric: bool,
    /// Strongly regular idempotent with 0 interior to its column space.
    pub origin_in_interior: bool,
    /// Strongly regular idempotent with 0 interior to its row space.
    pub origin_in_row_interior: bool,
    pub columns_sum_to_zero: bool,
    pub rows_sum_to_zero: bool,
    /// `−A` satisfies the semimetric axioms.
    pub is_semimetric_matrix: bool,
    /// `−A` satisfies the metric axioms.
    pub is_metric_matrix: bool,
}

fn joins_to_zero(vectors: &[TropVector]) -> Result<bool> {
    let mut acc = vectors[0].clone();
    for v in &vectors[1..] {
        acc = acc.oplus(v)?;
    }
    Ok(acc == TropVector::zeros(acc.len()))
}

fn origin_interior(e: &TropMatrix) -> Result<bool> {
    let zero = TropVector::zeros(e.rows());
    if !membership(&e.col_vectors(), &zero)?.member {
        return Ok(false);
    }
    interior_point(e, &zero)
}

pub fn classify(a: &TropMatrix) -> Result<ClassificationReport> {
    let n = a.square_dim()?;
    let idempotent = is_idempotent(a)?;
    let zero_diagonal = a.has_zero_diagonal();
    let kleene_fixed = kleene_star(a)?.star.as_ref() == Some(a);
    let strongly_regular = is_strongly_regular(a)?;
    let off_diagonal_negative = (0..n).all(|i| (0..n).all(|j| i == j || a.get(i, j).is_negative()));
    let symmetric = a.is_symmetric();
    let sr_idempotent = strongly_regular && idempotent;
    let origin_in_interior = sr_idempotent && origin_interior(a)?;
    let origin_in_row_interior = sr_idempotent && origin_interior(&a.transpose())?;
    let columns_sum_to_zero = joins_to_zero(&a.col_vectors())?;
    let rows_sum_to_zero = joins_to_zero(&a.row_vectors())?;

    let axioms = if zero_diagonal {
        Some(validate(&from_matrix(a)?))
    } else {
        None
    };
    let triangle = axioms
        .as_ref()
        .is_some_and(|v| v.class >= DistanceClass::PreSemimetric);
    let is_semimetric_matrix = axioms
        .as_ref()
        .is_some_and(|v| v.class >= DistanceClass::Semimetric);
    let is_metric_matrix = axioms
        .as_ref()
        .is_some_and(|v| v.class == DistanceClass::Metric);

    let report = ClassificationReport {
        n,
        idempotent,
        zero_diagonal,
        kleene_fixed,
        strongly_regular,
        off_diagonal_negative,
        symmetric,
        origin_in_interior,
        origin_in_row_interior,
        columns_sum_to_zero,
        rows_sum_to_zero,
        is_semimetric_matrix,
        is_metric_matrix,
    };

    let fail = |what: &str| {
        Err(Error::consistency(format!(
            "{what} disagrees for {a}: {report:?}"
        )))
    };
    // zero diagonal + triangle inequality ⟺ idempotent with zero diagonal ⟺ A* = A
    if triangle != (idempotent && zero_diagonal) || triangle != kleene_fixed {
        return fail("triangle / idempotent / star-fixed equivalence");
    }
    let semimetric_routes = [
        (
            "strongly regular idempotent with negative off-diagonal",
            sr_idempotent && off_diagonal_negative,
        ),
        (
            "A = A* with negative off-diagonal",
            kleene_fixed && off_diagonal_negative,
        ),
        (
            "origin interior to column space",
            sr_idempotent && origin_in_interior,
        ),
        (
            "columns join to interior origin",
            sr_idempotent && columns_sum_to_zero && origin_in_interior,
        ),
        (
            "origin interior to row space",
            sr_idempotent && origin_in_row_interior,
        ),
        (
            "rows join to interior origin",
            sr_idempotent && rows_sum_to_zero && origin_in_row_interior,
        ),
    ];
    for (name, value) in semimetric_routes {
        if value != is_semimetric_matrix {
            return fail(name);
        }
    }
    let metric_routes = [
        (
            "semimetric and symmetric",
            is_semimetric_matrix && symmetric,
        ),
        (
            "strongly regular symmetric idempotent",
            sr_idempotent && symmetric,
        ),
        (
            "A = A* = Aᵀ with negative off-diagonal",
            kleene_fixed && symmetric && off_diagonal_negative,
        ),
    ];
    for (name, value) in metric_routes {
        if value != is_metric_matrix {
            return fail(name);
        }
    }
    if idempotent && symmetric {
        let zeros_only_on_diagonal =
            (0..n).all(|i| (0..n).all(|j| (i == j) == a.get(i, j).is_zero()));
        if strongly_regular != zeros_only_on_diagonal
            || strongly_regular != (zero_diagonal && off_diagonal_negative)
        {
            return fail("symmetric idempotent regularity trichotomy");
        }
    }
    Ok(report)
}

/// `δ(x, y) = −⟨x | y⟩ = max_i (x_i − y_i)`.
pub fn residuation_distance(x: &TropVector, y: &TropVector) -> Result<Scalar> {
    Ok(-residuation(x, y)?)
}

/// Tropical Hilbert projective metric, mean convention: `(δ(x,y) + δ(y,x)) / 2`.
pub fn hilbert_distance(x: &TropVector, y: &TropVector) -> Result<Scalar> {
    let sum = residuation_distance(x, y)? + residuation_distance(y, x)?;
    Ok(sum.div_int(2))
}

/// No two distinct points are comparable in the componentwise order.
pub fn is_antichain(points: &[TropVector]) -> Result<bool> {
    for (k, x) in points.iter().enumerate() {
        for y in &points[k + 1..] {
            x.check_len(y)?;
            if x != y && (x.leq(y)? || y.leq(x)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Realises a semimetric space as the columns of `D = (−d(i,j))` under
/// residuation distance (and, for metrics, the Hilbert metric).
pub fn embed(d: &DistanceTable) -> Result<Vec<TropVector>> {
    let validation = validate(d);
    if validation.class < DistanceClass::Semimetric {
        return Err(Error::precondition(format!(
            "distance table is not a semimetric ({:?})",
            validation.witness
        )));
    }
    let m = to_matrix(d);
    let points = m.col_vectors();
    let n = d.len();
    for i in 0..n {
        for j in 0..n {
            if residuation_distance(&points[i], &points[j])? != *d.get(i, j) {
                return Err(Error::consistency(format!(
                    "δ(c{}, c{}) does not reproduce d",
                    i + 1,
                    j + 1
                )));
            }
            if validation.class == DistanceClass::Metric
                && hilbert_distance(&points[i], &points[j])? != *d.get(i, j)
            {
                return Err(Error::consistency(format!(
                    "Hilbert distance between c{} and c{} does not reproduce d",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if !is_antichain(&points)? {
        return Err(Error::consistency("embedded points are comparable"));
    }
    if extremal_columns(&m)?.len() != n {
        return Err(Error::consistency("embedded points are not all extremal"));
    }
    Ok(points)
}

/// Checks `E_ij ≤ min(⟨r_j|r_i⟩, ⟨c_i|c_j⟩)` everywhere. The row bound is
/// attained when `E_jj = 0` and the column bound when `E_ii = 0`; with a
/// zero diagonal both are equalities.
pub fn residuation_bound_check(e: &TropMatrix) -> Result<bool> {
    let n = e.square_dim()?;
    if !is_idempotent(e)? {
        return Err(Error::precondition("matrix is not idempotent"));
    }
    let rows = e.row_vectors();
    let cols = e.col_vectors();
    for i in 0..n {
        for j in 0..n {
            let by_rows = residuation(&rows[j], &rows[i])?;
            let by_cols = residuation(&cols[i], &cols[j])?;
            let entry = e.get(i, j);
            if entry > &by_rows || entry > &by_cols {
                return Err(Error::consistency(format!(
                    "E[{},{}] = {entry} exceeds a residuation bound",
                    i + 1,
                    j + 1
                )));
            }
            let rows_tight = !e.get(j, j).is_zero() || entry == &by_rows;
            let cols_tight = !e.get(i, i).is_zero() || entry == &by_cols;
            if !rows_tight || !cols_tight {
                return Err(Error::consistency(format!(
                    "E[{},{}] = {entry} misses equality ({by_rows}, {by_cols})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(true)
}

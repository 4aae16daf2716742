//! Column and row spaces as tropical polytopes.
//!
//! Membership uses the residuation projection: for generators `g_j` and a
//! point `x`, the coefficients `λ_j = ⟨g_j | x⟩` are the largest allowed, and
//! `⊕_j λ_j ⊗ g_j ≤ x` with equality exactly when `x` is in the span.
//! Row-space questions are answered on the transpose.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::regularity::is_strongly_regular;
use crate::semiring::{residuation, Scalar, TropMatrix, TropVector};
use crate::spectral::is_idempotent;

/// Result of a span-membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanMembership {
    pub member: bool,
    /// Maximal coefficients `λ_j = ⟨g_j | x⟩`, one per generator.
    pub coefficients: Vec<Scalar>,
    /// `⊕_j λ_j ⊗ g_j`; always `≤ x`.
    pub projection: TropVector,
}

pub fn membership(generators: &[TropVector], x: &TropVector) -> Result<SpanMembership> {
    let first = generators
        .first()
        .ok_or_else(|| Error::shape("empty generator list"))?;
    for g in generators {
        g.check_len(x)?;
    }
    let coefficients = generators
        .iter()
        .map(|g| residuation(g, x))
        .collect::<Result<Vec<_>>>()?;
    let mut projection = first.scale(&coefficients[0]);
    for (g, l) in generators.iter().zip(&coefficients).skip(1) {
        projection = projection.oplus(&g.scale(l))?;
    }
    Ok(SpanMembership {
        member: projection == *x,
        coefficients,
        projection,
    })
}

/// Membership of `x` in `C(a)`. For idempotent `a` this is cross-checked
/// against the fixed-point form `a ⊗ x = x`.
pub fn in_column_space(a: &TropMatrix, x: &TropVector) -> Result<bool> {
    let m = membership(&a.col_vectors(), x)?.member;
    if a.is_square() && is_idempotent(a)? {
        let fixed = a.mul_vec(x)? == *x;
        if fixed != m {
            return Err(Error::consistency(format!(
                "span membership ({m}) and fixed-point test ({fixed}) disagree for {x} in C({a})"
            )));
        }
    }
    Ok(m)
}

/// Membership of `x` in `R(a)`.
pub fn in_row_space(a: &TropMatrix, x: &TropVector) -> Result<bool> {
    in_column_space(&a.transpose(), x)
}

/// `C(a) = C(b)`, decided by mutual column membership.
pub fn same_column_space(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::shape("column spaces live in different dimensions"));
    }
    let a_cols = a.col_vectors();
    let b_cols = b.col_vectors();
    for c in &b_cols {
        if !membership(&a_cols, c)?.member {
            return Ok(false);
        }
    }
    for c in &a_cols {
        if !membership(&b_cols, c)?.member {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn require_idempotent(e: &TropMatrix) -> Result<usize> {
    let n = e.square_dim()?;
    if !is_idempotent(e)? {
        return Err(Error::precondition("matrix is not idempotent"));
    }
    Ok(n)
}

pub(crate) fn require_strongly_regular_idempotent(e: &TropMatrix) -> Result<usize> {
    let n = require_idempotent(e)?;
    if !is_strongly_regular(e)? {
        return Err(Error::precondition("idempotent is not strongly regular"));
    }
    Ok(n)
}

/// `E ⊗ x` for a strongly regular idempotent `E`: the identity on `C(E)`,
/// and onto the boundary of `C(E)` for points outside it.
pub fn project_onto(e: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    require_strongly_regular_idempotent(e)?;
    let image = e.mul_vec(x)?;
    if !in_column_space(e, &image)? {
        return Err(Error::consistency(format!("E ⊗ {x} = {image} left C(E)")));
    }
    if image != *x && interior_point(e, &image)? {
        return Err(Error::consistency(format!(
            "exterior point {x} projected to interior point {image}"
        )));
    }
    Ok(image)
}

/// Whether `x ∈ C(E)` is an interior point, for strongly regular idempotent `E`.
///
/// Interior points are those with a unique representation as a combination
/// of the columns: every term `λ_j ⊗ c_j` of the maximal representation
/// must be the sole attainer of some coordinate.
pub fn interior_point(e: &TropMatrix, x: &TropVector) -> Result<bool> {
    let n = require_strongly_regular_idempotent(e)?;
    let span = membership(&e.col_vectors(), x)?;
    if !span.member {
        return Err(Error::precondition(format!(
            "{x} is not in the column space"
        )));
    }
    let lambda = &span.coefficients;
    let attains = |j: usize, i: usize| &(&lambda[j] + e.get(i, j)) == x.get(i);
    Ok((0..n).all(|j| (0..n).any(|i| attains(j, i) && (0..n).all(|k| k == j || !attains(k, i)))))
}

/// Indices (0-based) of the columns that are extremal points of `C(E)`,
/// one per scaling class (the smallest index is kept).
pub fn extremal_columns(e: &TropMatrix) -> Result<Vec<usize>> {
    let n = require_idempotent(e)?;
    let cols = e.col_vectors();
    // candidates: zero-diagonal columns, deduplicated up to scaling
    let mut candidates: Vec<usize> = Vec::new();
    for j in (0..n).filter(|&j| e.get(j, j).is_zero()) {
        let normal = cols[j].normalized();
        if !candidates.iter().any(|&k| cols[k].normalized() == normal) {
            candidates.push(j);
        }
    }
    let mut out = Vec::new();
    for &j in &candidates {
        let others: Vec<TropVector> = candidates
            .iter()
            .filter(|&&k| k != j)
            .map(|&k| cols[k].clone())
            .collect();
        if others.is_empty() || !membership(&others, &cols[j])?.member {
            out.push(j);
        }
    }
    Ok(out)
}

/// The duality map `x ↦ A ⊗ (−x)` from `R(A)` to `C(A)`.
pub fn duality_map(a: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    if x.len() != a.cols() {
        return Err(Error::shape(format!(
            "point of length {} for a matrix with {} columns",
            x.len(),
            a.cols()
        )));
    }
    if !in_row_space(a, x)? {
        return Err(Error::precondition(format!("{x} is not in the row space")));
    }
    a.mul_vec(&x.negate())
}

/// Whether `C(E) = −C(E)` for a strongly regular idempotent `E`.
///
/// Decided by symmetry of `E` and, independently, by checking that every
/// negated extremal column lies in `C(E)`.
pub fn negation_closed(e: &TropMatrix) -> Result<bool> {
    require_strongly_regular_idempotent(e)?;
    let symmetric = e.is_symmetric();
    let mut by_members = true;
    for j in extremal_columns(e)? {
        if !in_column_space(e, &e.col(j).negate())? {
            by_members = false;
            break;
        }
    }
    if symmetric != by_members {
        return Err(Error::consistency(format!(
            "symmetry ({symmetric}) and negated-extremal membership ({by_members}) disagree for {e}"
        )));
    }
    Ok(symmetric)
}

/// One constraint `x_i − x_j ≥ bound` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceBound {
    pub i: usize,
    pub j: usize,
    pub bound: Scalar,
}

/// Halfspace description `{x : x_i − x_j ≥ E_ij}` of `C(E)`.
///
/// The diagonal constraints `0 ≥ 0` are vacuous and not stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytropeHRep {
    pub n: usize,
    pub bounds: Vec<DifferenceBound>,
}

impl PolytropeHRep {
    pub fn contains(&self, x: &TropVector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::shape("point dimension does not match the polytrope"));
        }
        Ok(self
            .bounds
            .iter()
            .all(|b| (x.get(b.i) - x.get(b.j)) >= b.bound))
    }
}

pub fn halfspace_rep(e: &TropMatrix) -> Result<PolytropeHRep> {
    let n = require_idempotent(e)?;
    if !e.has_zero_diagonal() {
        return Err(Error::precondition("halfspace form needs a zero diagonal"));
    }
    let bounds = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| DifferenceBound {
            i,
            j,
            bound: e.get(i, j).clone(),
        })
        .collect();
    Ok(PolytropeHRep { n, bounds })
}

/// A point of the projective plane in the chart `(x_1 − x_3, x_2 − x_3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub u: Scalar,
    pub v: Scalar,
}

impl Point2 {
    pub fn new(u: Scalar, v: Scalar) -> Self {
        Point2 { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Point2 {
            u: u.into(),
            v: v.into(),
        }
    }

    /// Projectivization of a vector of length 3.
    pub fn from_vector(x: &TropVector) -> Result<Self> {
        if x.len() != 3 {
            return Err(Error::shape("planar points come from vectors of length 3"));
        }
        let p = x.projectivize()?;
        Ok(Point2 {
            u: p[0].clone(),
            v: p[1].clone(),
        })
    }

    /// Lift to the affine representative with last coordinate 0.
    pub fn lift(&self) -> TropVector {
        TropVector::new(vec![self.u.clone(), self.v.clone(), Scalar::zero()]).expect("len 3")
    }
}

/// Boundary line `a·u + b·v = c` with `(a, b)` one of `(1,0)`, `(0,1)`, `(1,−1)`.
#[derive(Clone)]
struct Line {
    a: i64,
    b: i64,
    c: Scalar,
}

fn intersect(p: &Line, q: &Line) -> Option<Point2> {
    let det = p.a * q.b - p.b * q.a;
    if det == 0 {
        return None;
    }
    let u = (p.c.times_int(q.b) - q.c.times_int(p.b)).div_int(det);
    let v = (q.c.times_int(p.a) - p.c.times_int(q.a)).div_int(det);
    Some(Point2 { u, v })
}

/// z-component of `(a − o) × (b − o)`.
fn cross(o: &Point2, a: &Point2, b: &Point2) -> Scalar {
    let (ax, ay) = (&a.u - &o.u, &a.v - &o.v);
    let (bx, by) = (&b.u - &o.u, &b.v - &o.v);
    ax.times(&by) - ay.times(&bx)
}

/// Vertices of the projectivized polytrope `C(E)` for a 3×3 strongly regular
/// idempotent, counterclockwise, starting from the lexicographically least.
pub fn polytrope_vertices_2d(e: &TropMatrix) -> Result<Vec<Point2>> {
    let n = require_strongly_regular_idempotent(e)?;
    if n != 3 {
        return Err(Error::precondition(
            "planar vertex enumeration needs a 3x3 matrix",
        ));
    }
    let h = halfspace_rep(e)?;
    // p = (u, v, 0): x_i − x_j ≥ E_ij becomes a·u + b·v ≥ E_ij
    let coeff = |k: usize| -> (i64, i64) {
        match k {
            0 => (1, 0),
            1 => (0, 1),
            _ => (0, 0),
        }
    };
    let lines: Vec<Line> = h
        .bounds
        .iter()
        .map(|b| {
            let (ai, bi) = coeff(b.i);
            let (aj, bj) = coeff(b.j);
            Line {
                a: ai - aj,
                b: bi - bj,
                c: b.bound.clone(),
            }
        })
        .collect();
    let mut points: Vec<Point2> = Vec::new();
    for (k, p) in lines.iter().enumerate() {
        for q in &lines[k + 1..] {
            if let Some(pt) = intersect(p, q) {
                if h.contains(&pt.lift())? && !points.contains(&pt) {
                    points.push(pt);
                }
            }
        }
    }
    if points.len() < 3 {
        return Err(Error::consistency(format!(
            "strongly regular idempotent produced a degenerate polygon: {points:?}"
        )));
    }
    Ok(counterclockwise(points))
}

fn counterclockwise(points: Vec<Point2>) -> Vec<Point2> {
    let k = points.len() as i64;
    let sum_u = points.iter().fold(Scalar::zero(), |s, p| s + p.u.clone());
    let sum_v = points.iter().fold(Scalar::zero(), |s, p| s + p.v.clone());
    let centre = Point2 {
        u: sum_u.div_int(k),
        v: sum_v.div_int(k),
    };
    let half = |p: &Point2| -> u8 {
        let dy = &p.v - &centre.v;
        let dx = &p.u - &centre.u;
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    let mut sorted = points;
    sorted.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let c = cross(&centre, a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    let start = sorted
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .expect("non-empty");
    sorted.rotate_left(start);
    sorted
}

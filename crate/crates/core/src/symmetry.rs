//! Isometry groups, units of the extended matrix monoid, and membership in
//! the maximal subgroup (H-class) around a full-rank idempotent.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::metric::{classify, from_matrix, validate, DistanceClass, DistanceTable};
use crate::permutation::Permutation;
use crate::polytope::{in_column_space, in_row_space, same_column_space};
use crate::regularity::permanent;
use crate::semiring::{mat_mul, ExtMatrix, Scalar, TropMatrix};
use crate::spectral::{is_idempotent, kleene_star};

/// The permutations preserving a distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryGroup {
    /// Sorted by one-line images, so the identity comes first.
    pub elements: Vec<Permutation>,
    pub order: usize,
}

impl IsometryGroup {
    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

impl fmt::Display for IsometryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "order {}: {}", self.order, parts.join(", "))
    }
}

/// A unit written as `S ⊗ P`: `S = diag(λ_1, …, λ_n)`, `P` a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDecomposition {
    pub diagonal: Vec<Scalar>,
    pub perm: Permutation,
}

impl UnitDecomposition {
    pub fn reconstruct(&self) -> ExtMatrix {
        let s = ExtMatrix::diagonal(&self.diagonal).expect("n >= 1");
        mat_mul(&s, &self.perm.matrix()).expect("same size")
    }

    pub fn is_scalar(&self) -> bool {
        self.diagonal.windows(2).all(|w| w[0] == w[1])
    }
}

/// Units of the extended monoid: exactly one finite entry per row and column.
pub fn is_unit(g: &ExtMatrix) -> Result<bool> {
    let n = g.square_dim()?;
    let finite = |i: usize, j: usize| !g.get(i, j).is_bottom();
    let rows_ok = (0..n).all(|i| (0..n).filter(|&j| finite(i, j)).count() == 1);
    let cols_ok = (0..n).all(|j| (0..n).filter(|&i| finite(i, j)).count() == 1);
    Ok(rows_ok && cols_ok)
}

pub fn unit_decompose(g: &ExtMatrix) -> Result<UnitDecomposition> {
    if !is_unit(g)? {
        return Err(Error::precondition(format!("{g} is not a unit")));
    }
    let n = g.rows();
    let mut diagonal = Vec::with_capacity(n);
    let mut images = vec![0usize; n];
    for i in 0..n {
        let (j, value) = (0..n)
            .find_map(|j| g.get(i, j).finite().map(|v| (j, v.clone())))
            .expect("unit row has a finite entry");
        diagonal.push(value);
        // P[σ(j), j] = 0 and row i uses column j, so σ(j) = i
        images[j] = i;
    }
    let decomposition = UnitDecomposition {
        diagonal,
        perm: Permutation::new(images)?,
    };
    if decomposition.reconstruct() != *g {
        return Err(Error::consistency(format!("S ⊗ P does not reproduce {g}")));
    }
    Ok(decomposition)
}

fn preserves(d: &DistanceTable, p: &Permutation) -> bool {
    let n = d.len();
    (0..n).all(|i| (0..n).all(|j| d.get(p.apply(i), p.apply(j)) == d.get(i, j)))
}

/// Out- and in-distance multisets of each point; isometries preserve them.
fn signatures(d: &DistanceTable) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let n = d.len();
    (0..n)
        .map(|i| {
            let mut out: Vec<Scalar> = (0..n).map(|j| d.get(i, j).clone()).collect();
            let mut inc: Vec<Scalar> = (0..n).map(|j| d.get(j, i).clone()).collect();
            out.sort();
            inc.sort();
            (out, inc)
        })
        .collect()
}

/// All isometries of a semimetric space, by backtracking over images with
/// distance-signature pruning.
pub fn isometry_group(d: &DistanceTable) -> Result<IsometryGroup> {
    if validate(d).class < DistanceClass::Semimetric {
        return Err(Error::precondition("distance table is not a semimetric"));
    }
    let n = d.len();
    let sig = signatures(d);
    let mut found = Vec::new();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(d, &sig, &mut images, &mut used, &mut found);
    found.sort();

    let set: BTreeSet<&Permutation> = found.iter().collect();
    if !set.contains(&Permutation::identity(n)) {
        return Err(Error::consistency("isometry search missed the identity"));
    }
    for p in &found {
        if !set.contains(&p.inverse()) || found.iter().any(|q| !set.contains(&p.compose(q))) {
            return Err(Error::consistency(
                "isometries are not closed under composition",
            ));
        }
    }
    Ok(IsometryGroup {
        order: found.len(),
        elements: found,
    })
}

fn search(
    d: &DistanceTable,
    sig: &[(Vec<Scalar>, Vec<Scalar>)],
    images: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Permutation>,
) {
    let i = images.len();
    let n = d.len();
    if i == n {
        found.push(Permutation::new(images.clone()).expect("bijection by construction"));
        return;
    }
    for t in 0..n {
        if used[t] || sig[t] != sig[i] {
            continue;
        }
        let consistent = (0..i)
            .all(|k| d.get(t, images[k]) == d.get(i, k) && d.get(images[k], t) == d.get(k, i));
        if !consistent {
            continue;
        }
        used[t] = true;
        images.push(t);
        search(d, sig, images, used, found);
        images.pop();
        used[t] = false;
    }
}

/// `G ⊗ D = D ⊗ G`.
pub fn commutes_with(g: &ExtMatrix, d: &TropMatrix) -> Result<bool> {
    if g.rows() != d.rows() || g.cols() != d.cols() || !d.is_square() {
        return Err(Error::shape(
            "commutation test needs square matrices of equal size",
        ));
    }
    let d = d.to_ext();
    Ok(mat_mul(g, &d)? == mat_mul(&d, g)?)
}

/// `λ ⊗ P_σ ⊗ D`, the element of the H-class of the metric matrix `D`
/// indexed by the isometry σ and the real λ.
pub fn hclass_element(d: &TropMatrix, sigma: &Permutation, lambda: &Scalar) -> Result<TropMatrix> {
    if !classify(d)?.is_metric_matrix {
        return Err(Error::precondition("matrix does not come from a metric"));
    }
    if sigma.len() != d.rows() {
        return Err(Error::shape("permutation degree differs from matrix size"));
    }
    if !preserves(&from_matrix(d)?, sigma) {
        return Err(Error::precondition(format!("{sigma} is not an isometry")));
    }
    let g = mat_mul(&ExtMatrix::scalar(d.rows(), lambda)?, &sigma.matrix())?;
    mat_mul(&g, &d.to_ext())?
        .to_finite()
        .ok_or_else(|| Error::consistency("H-class element has an infinite entry"))
}

/// The strongly regular idempotent with the same column space as `m`:
/// columns reordered by the unique optimal assignment and scaled to put
/// zeros on the diagonal.
pub fn idempotent_of(m: &TropMatrix) -> Result<TropMatrix> {
    let n = m.square_dim()?;
    let p = permanent(m)?;
    if !p.attaining_unique {
        return Err(Error::precondition(
            "matrix does not have full tropical rank",
        ));
    }
    let sigma = p.witness;
    let e = TropMatrix::from_fn(n, n, |r, i| {
        let j = sigma.apply(i);
        m.get(r, j) - m.get(i, j)
    })?;
    let star_fixed = kleene_star(&e)?.star.as_ref() == Some(&e);
    if !star_fixed || !is_idempotent(&e)? {
        return Err(Error::precondition(
            "column space is not that of a strongly regular idempotent (not regular of rank n)",
        ));
    }
    Ok(e)
}

/// Whether `n` lies in the H-class of the rank-n regular matrix `m`:
/// `C(N) = C(M)` and `R(N) = −C(M)`.
pub fn hclass_contains(m: &TropMatrix, n_mat: &TropMatrix) -> Result<bool> {
    let n = m.square_dim()?;
    if n_mat.rows() != n || n_mat.cols() != n {
        return Err(Error::shape("H-class test needs matrices of equal size"));
    }
    let e = idempotent_of(m)?;
    if !same_column_space(n_mat, m)? {
        return Ok(false);
    }
    // R(N) ⊆ −C(M): negated rows of N lie in C(E)
    for r in n_mat.row_vectors() {
        if !in_column_space(&e, &r.negate())? {
            return Ok(false);
        }
    }
    // −C(M) = R(E) ⊆ R(N): the rows of E generate R(E), and −c_j lies in R(E)
    for r in e.row_vectors() {
        if !in_row_space(n_mat, &r)? {
            return Ok(false);
        }
    }
    for c in e.col_vectors() {
        if !in_row_space(n_mat, &c.negate())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `λ ⊗ I_n` as an extended matrix.
pub fn scalar_unit(n: usize, lambda: &Scalar) -> ExtMatrix {
    ExtMatrix::scalar(n, lambda).expect("n >= 1")
}

/// The unit `diag(values) ⊗ P_σ`.
pub fn unit(values: &[Scalar], sigma: &Permutation) -> Result<ExtMatrix> {
    if values.len() != sigma.len() {
        return Err(Error::shape("diagonal and permutation sizes differ"));
    }
    mat_mul(&ExtMatrix::diagonal(values)?, &sigma.matrix())
}

//! Tropical permanent, strong regularity and the rank of idempotents.

use crate::assignment::max_weight_assignment;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polytope::{extremal_columns, membership, require_idempotent, same_column_space};
use crate::semiring::{Scalar, TropMatrix};
use crate::spectral::is_idempotent;

/// `perm(A) = ⊕_σ A_{1,σ(1)} ⊗ … ⊗ A_{n,σ(n)}` with a uniqueness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermanentResult {
    pub value: Scalar,
    /// True iff `witness` is the only permutation attaining `value`.
    pub attaining_unique: bool,
    /// σ with `σ(i)` the column used by row i.
    pub witness: Permutation,
}

pub fn permanent(a: &TropMatrix) -> Result<PermanentResult> {
    a.square_dim()?;
    let assignment = max_weight_assignment(a);
    let witness = Permutation::new(assignment.column_of.clone())?;
    Ok(PermanentResult {
        value: assignment.value.clone(),
        attaining_unique: !assignment.has_alternative(),
        witness,
    })
}

/// Full tropical rank: the permanent is attained by a unique permutation.
pub fn is_strongly_regular(a: &TropMatrix) -> Result<bool> {
    Ok(permanent(a)?.attaining_unique)
}

/// Rank test for an idempotent with zero diagonal: full rank unless some
/// off-diagonal pair has `E_ij = −E_ji`. Cross-checked against the permanent.
pub fn zero_diag_regularity(e: &TropMatrix) -> Result<bool> {
    let n = e.square_dim()?;
    if !is_idempotent(e)? {
        return Err(Error::precondition("matrix is not idempotent"));
    }
    if !e.has_zero_diagonal() {
        return Err(Error::precondition("diagonal entries are not all zero"));
    }
    let degenerate_pair = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .any(|(i, j)| *e.get(i, j) == -e.get(j, i));
    let by_pairs = !degenerate_pair;
    let by_permanent = is_strongly_regular(e)?;
    if by_pairs != by_permanent {
        return Err(Error::consistency(format!(
            "pair criterion ({by_pairs}) and permanent ({by_permanent}) disagree for {e}"
        )));
    }
    Ok(by_pairs)
}

/// Rank of an idempotent: number of extremal points of `C(E)` up to scaling.
pub fn idempotent_rank(e: &TropMatrix) -> Result<usize> {
    let n = require_idempotent(e)?;
    let rank = extremal_columns(e)?.len();
    let zeros = (0..n).filter(|&i| e.get(i, i).is_zero()).count();
    if rank > zeros {
        return Err(Error::consistency(format!(
            "rank {rank} exceeds the {zeros} diagonal zeros of {e}"
        )));
    }
    if (rank == n) != is_strongly_regular(e)? {
        return Err(Error::consistency(format!(
            "rank {rank} of {e} disagrees with the strong regularity test"
        )));
    }
    Ok(rank)
}

/// Another idempotent with the same column space: the first redundant
/// column `j` (lowest index that is not a kept extremal) scaled by `λ < 0`.
pub fn idempotent_family(e: &TropMatrix, lambda: &Scalar) -> Result<TropMatrix> {
    let n = require_idempotent(e)?;
    if !e.has_zero_diagonal() {
        return Err(Error::precondition("diagonal entries are not all zero"));
    }
    if !lambda.is_negative() {
        return Err(Error::precondition(format!(
            "scaling {lambda} is not negative"
        )));
    }
    let extremals = extremal_columns(e)?;
    let j = (0..n).find(|j| !extremals.contains(j)).ok_or_else(|| {
        Error::precondition("idempotent is strongly regular; no column is redundant")
    })?;
    let others: Vec<_> = (0..n).filter(|&i| i != j).map(|i| e.col(i)).collect();
    if !membership(&others, &e.col(j))?.member {
        return Err(Error::consistency(format!(
            "column {} of {e} is not redundant",
            j + 1
        )));
    }
    let scaled = TropMatrix::from_fn(n, n, |r, c| {
        if c == j {
            e.get(r, c) + lambda
        } else {
            e.get(r, c).clone()
        }
    })?;
    if !is_idempotent(&scaled)? || !same_column_space(&scaled, e)? {
        return Err(Error::consistency(format!(
            "scaling column {} broke idempotency",
            j + 1
        )));
    }
    Ok(scaled)
}

//! Exact maximum-weight assignment (Hungarian method with potentials) and a
//! test for a second optimal assignment.

use crate::semiring::{Scalar, TropMatrix};

/// An optimal assignment together with the dual certificate.
#[derive(Debug, Clone)]
pub(crate) struct Assignment {
    /// `column_of[i]`: column matched to row i.
    pub column_of: Vec<usize>,
    pub value: Scalar,
    /// `tight[i][j]`: edge (i, j) has zero reduced cost under the optimal duals.
    /// Every optimal assignment uses tight edges only.
    pub tight: Vec<Vec<bool>>,
}

/// Maximises `Σ_i a[i][σ(i)]` over permutations σ.
pub(crate) fn max_weight_assignment(a: &TropMatrix) -> Assignment {
    let n = a.rows();
    debug_assert!(a.is_square());
    // minimise cost = −a; 1-based with a dummy column 0
    let cost = |i: usize, j: usize| -a.get(i - 1, j - 1);
    let mut u = vec![Scalar::zero(); n + 1];
    let mut v = vec![Scalar::zero(); n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Scalar>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta: Option<Scalar> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = &(&cost(i0, j) - &u[i0]) - &v[j];
                if minv[j].as_ref().is_none_or(|m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("set above");
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains while rows are unmatched");
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] = &u[row_of[j]] + &delta;
                    v[j] = &v[j] - &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m = &*m - &delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut column_of = vec![0usize; n];
    for j in 1..=n {
        column_of[row_of[j] - 1] = j - 1;
    }
    let value = (0..n)
        .map(|i| a.get(i, column_of[i]).clone())
        .fold(Scalar::zero(), |s, x| s + x);
    let tight = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| (&(&cost(i, j) - &u[i]) - &v[j]).is_zero())
                .collect()
        })
        .collect();
    Assignment {
        column_of,
        value,
        tight,
    }
}

impl Assignment {
    /// True iff another permutation attains the same value.
    ///
    /// With the matching fixed, row i may switch to the column of row k when
    /// edge (i, column_of[k]) is tight. A second optimum exists exactly when
    /// this "may take over from" digraph has a cycle.
    pub fn has_alternative(&self) -> bool {
        let n = self.column_of.len();
        let succ: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&k| k != i && self.tight[i][self.column_of[k]])
                    .collect()
            })
            .collect();
        // Kahn's algorithm: a cycle exists iff not every node can be removed.
        let mut indeg = vec![0usize; n];
        for s in &succ {
            for &k in s {
                indeg[k] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut removed = 0;
        while let Some(i) = stack.pop() {
            removed += 1;
            for &k in &succ[i] {
                indeg[k] -= 1;
                if indeg[k] == 0 {
                    stack.push(k);
                }
            }
        }
        removed < n
    }
}

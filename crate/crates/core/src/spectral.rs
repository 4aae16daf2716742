//! Maximum cycle mean, Kleene star and idempotency tests.

use crate::error::{Error, Result};
use crate::semiring::{Scalar, TropMatrix};

/// Outcome of [`kleene_star`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarResult {
    pub converges: bool,
    /// Present iff `converges`.
    pub star: Option<TropMatrix>,
    pub eigenvalue: Scalar,
}

/// Maximum cycle mean of the complete digraph weighted by `a`, via Karp's
/// recurrence over exact rationals.
pub fn eigenvalue(a: &TropMatrix) -> Result<Scalar> {
    let n = a.square_dim()?;
    // walks[k][v]: heaviest walk with exactly k edges ending at v, starting anywhere.
    let mut walks: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
    walks.push(vec![Scalar::zero(); n]);
    for k in 1..=n {
        let prev = &walks[k - 1];
        let next = (0..n)
            .map(|v| {
                (0..n)
                    .map(|u| &prev[u] + a.get(u, v))
                    .max()
                    .expect("n >= 1")
            })
            .collect();
        walks.push(next);
    }
    let best = (0..n)
        .map(|v| {
            (0..n)
                .map(|k| (&walks[n][v] - &walks[k][v]).div_int((n - k) as i64))
                .min()
                .expect("n >= 1")
        })
        .max()
        .expect("n >= 1");
    Ok(best)
}

/// `I ⊕ A ⊕ A² ⊕ …` when the eigenvalue is non-positive.
///
/// The closure is computed Floyd–Warshall style (heaviest walks of length
/// ≥ 1), then the identity is joined onto the diagonal.
pub fn kleene_star(a: &TropMatrix) -> Result<StarResult> {
    let n = a.square_dim()?;
    let lambda = eigenvalue(a)?;
    if lambda.is_positive() {
        return Ok(StarResult {
            converges: false,
            star: None,
            eigenvalue: lambda,
        });
    }
    let mut w: Vec<Scalar> = a.entries().to_vec();
    for k in 0..n {
        for i in 0..n {
            let wik = w[i * n + k].clone();
            for j in 0..n {
                let via = &wik + &w[k * n + j];
                if via > w[i * n + j] {
                    w[i * n + j] = via;
                }
            }
        }
    }
    for i in 0..n {
        let d = &mut w[i * n + i];
        if d.is_negative() {
            *d = Scalar::zero();
        }
    }
    let star = TropMatrix::new(n, n, w)?;
    Ok(StarResult {
        converges: true,
        star: Some(star),
        eigenvalue: lambda,
    })
}

/// Exact test of `A ⊗ A = A`.
pub fn is_idempotent(a: &TropMatrix) -> Result<bool> {
    a.square_dim()?;
    Ok(a.tmul(a)? == *a)
}

/// True iff `a` is idempotent with zero diagonal, i.e. `a` is its own star.
///
/// Both characterisations are evaluated; a mismatch is reported as a
/// consistency error.
pub fn star_fixed_point_check(a: &TropMatrix) -> Result<bool> {
    let direct = is_idempotent(a)? && a.has_zero_diagonal();
    let star = kleene_star(a)?;
    let via_star = star.star.as_ref() == Some(a);
    if direct != via_star {
        return Err(Error::consistency(format!(
            "idempotent-with-zero-diagonal ({direct}) disagrees with A* = A ({via_star}) for {a}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue(&fixtures::eb()).unwrap(), Scalar::zero());
        assert_eq!(eigenvalue(&m(&[&[7]])).unwrap(), Scalar::from_int(7));
        assert_eq!(
            eigenvalue(&m(&[&[-5, 0], &[-2, -5]])).unwrap(),
            Scalar::from_int(-1)
        );
        assert_eq!(
            eigenvalue(&m(&[&[-9, 1, -9], &[-9, -9, 1], &[-1, -9, -9]])).unwrap(),
            Scalar::from_ratio(1, 3)
        );
    }

    #[test]
    fn star_examples() {
        let s = kleene_star(&m(&[&[-5, 0], &[-2, -5]])).unwrap();
        assert!(s.converges);
        assert_eq!(s.star.unwrap(), m(&[&[0, 0], &[-2, 0]]));

        let eb = fixtures::eb();
        assert_eq!(kleene_star(&eb).unwrap().star.unwrap(), eb);

        let s = kleene_star(&m(&[&[1]])).unwrap();
        assert!(!s.converges);
        assert!(s.star.is_none());
        assert_eq!(s.eigenvalue, Scalar::from_int(1));
    }

    #[test]
    fn idempotency_examples() {
        assert!(is_idempotent(&fixtures::ea()).unwrap());
        assert!(!is_idempotent(&m(&[&[0, 0], &[0, -1]])).unwrap());
        assert!(!is_idempotent(&m(&[&[1]])).unwrap());
        assert!(is_idempotent(&m(&[&[0, 1]])).is_err());
    }

    #[test]
    fn fixed_point_examples() {
        assert!(star_fixed_point_check(&fixtures::eb()).unwrap());
        let a = m(&[&[0, 0], &[-1, -1]]);
        assert!(is_idempotent(&a).unwrap());
        assert!(!star_fixed_point_check(&a).unwrap());
        assert!(star_fixed_point_check(&m(&[&[0]])).unwrap());
    }

    #[test]
    fn non_square_rejected() {
        let a = m(&[&[0, 1]]);
        assert!(matches!(eigenvalue(&a), Err(Error::NotSquare { .. })));
        assert!(kleene_star(&a).is_err());
        assert!(star_fixed_point_check(&a).is_err());
    }
}

//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropmetric::semiring::mat_mul;
use tropmetric::{DistanceTable, ExtMatrix, Permutation, Scalar, TropMatrix, TropVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries `k / den` with `k` uniform in `lo..=hi`.
pub fn matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, den: i64) -> TropMatrix {
    TropMatrix::from_fn(n, n, |_, _| Scalar::from_ratio(rng.gen_range(lo..=hi), den)).unwrap()
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, den: i64) -> TropVector {
    TropVector::new(
        (0..n)
            .map(|_| Scalar::from_ratio(rng.gen_range(lo..=hi), den))
            .collect(),
    )
    .unwrap()
}

/// Shortest-path closure of positive random weights: a semimetric, and a
/// metric when `symmetric`.
#[allow(clippy::needless_range_loop)]
pub fn semimetric(
    rng: &mut ChaCha8Rng,
    n: usize,
    symmetric: bool,
    max_weight: i64,
    den: i64,
) -> DistanceTable {
    let mut d = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && (!symmetric || i < j) {
                let w = Scalar::from_ratio(rng.gen_range(1..=max_weight), den);
                d[i][j] = w.clone();
                if symmetric {
                    d[j][i] = w;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    DistanceTable::from_rows(&d).unwrap()
}

pub fn ext_pow(a: &ExtMatrix, k: usize) -> ExtMatrix {
    let mut p = ExtMatrix::identity(a.rows()).unwrap();
    for _ in 0..k {
        p = mat_mul(&p, a).unwrap();
    }
    p
}

/// `I ⊕ A ⊕ … ⊕ A^n`.
pub fn series_star(a: &TropMatrix) -> TropMatrix {
    let a = a.to_ext();
    let n = a.rows();
    let mut acc = ExtMatrix::identity(n).unwrap();
    let mut p = ExtMatrix::identity(n).unwrap();
    for _ in 0..n {
        p = mat_mul(&p, &a).unwrap();
        acc = acc.oplus(&p).unwrap();
    }
    acc.to_finite().unwrap()
}

/// `max_k max_i (A^k)_ii / k` over `k = 1..=n`.
pub fn brute_eigenvalue(a: &TropMatrix) -> Scalar {
    let e = a.to_ext();
    let n = a.rows();
    (1..=n)
        .flat_map(|k| {
            let p = ext_pow(&e, k);
            (0..n).map(move |i| p.get(i, i).finite().unwrap().div_int(k as i64))
        })
        .max()
        .unwrap()
}

/// Permanent value and the number of permutations attaining it.
pub fn brute_permanent(a: &TropMatrix) -> (Scalar, usize) {
    let n = a.rows();
    let values: Vec<Scalar> = (0..n)
        .permutations(n)
        .map(|p| {
            p.iter()
                .enumerate()
                .fold(Scalar::zero(), |s, (i, &j)| s + a.get(i, j).clone())
        })
        .collect();
    let best = values.iter().max().unwrap().clone();
    let count = values.iter().filter(|v| **v == best).count();
    (best, count)
}

pub fn brute_isometries(d: &DistanceTable) -> Vec<Permutation> {
    let n = d.len();
    Permutation::all(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| d.get(p.apply(i), p.apply(j)) == d.get(i, j))))
        .collect()
}

pub fn brute_idempotent(a: &TropMatrix) -> bool {
    let e = a.to_ext();
    mat_mul(&e, &e).unwrap() == e
}

/// Triangle inequality and zero diagonal of `−A`, straight from the axioms.
pub fn brute_triangle(a: &TropMatrix) -> bool {
    let n = a.rows();
    (0..n).all(|i| a.get(i, i).is_zero())
        && (0..n)
            .all(|i| (0..n).all(|j| (0..n).all(|k| a.get(i, j) >= &(a.get(i, k) + a.get(k, j)))))
}

/// Zero-diagonal matrices: star closures (idempotent), perturbations of
/// them (usually not), raw random ones and metric matrices.
pub fn zero_diagonal_mix(rng: &mut ChaCha8Rng, count: usize) -> Vec<TropMatrix> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=5);
        let a = TropMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Scalar::zero()
            } else {
                Scalar::from_ratio(rng.gen_range(-8..=1), 2)
            }
        })
        .unwrap();
        let closed = match tropmetric::spectral::kleene_star(&a).unwrap().star {
            Some(s) => s,
            None => continue,
        };
        match out.len() % 4 {
            0 => out.push(closed),
            1 => {
                let (i, j) = loop {
                    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if i != j {
                        break (i, j);
                    }
                };
                let delta = Scalar::from_ratio(rng.gen_range(-3..=3), 2);
                let bumped = TropMatrix::from_fn(n, n, |r, c| {
                    if (r, c) == (i, j) {
                        closed.get(r, c) + &delta
                    } else {
                        closed.get(r, c).clone()
                    }
                })
                .unwrap();
                out.push(bumped);
            }
            2 => out.push(a),
            _ => out.push(tropmetric::metric::to_matrix(&semimetric(
                rng, n, true, 6, 2,
            ))),
        }
    }
    out
}

pub fn point_pairs(
    e: &TropMatrix,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Vec<(TropVector, TropVector)> {
    (0..count)
        .map(|_| {
            let n = e.rows();
            let x = e.mul_vec(&vector(rng, n, -10, 10, 2)).unwrap();
            let y = e.mul_vec(&vector(rng, n, -10, 10, 2)).unwrap();
            (x, y)
        })
        .collect()
}

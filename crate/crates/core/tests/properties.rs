mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use tropmetric::io::{parse_matrix, serialize_matrix};
use tropmetric::metric::{
    classify, embed, hilbert_distance, residuation_bound_check, residuation_distance, to_matrix,
};
use tropmetric::polytope::{
    duality_map, extremal_columns, halfspace_rep, in_column_space, interior_point, membership,
    polytrope_vertices_2d, project_onto, same_column_space, Point2,
};
use tropmetric::regularity::{
    idempotent_family, idempotent_rank, is_strongly_regular, permanent, zero_diag_regularity,
};
use tropmetric::semiring::mat_mul;
use tropmetric::spectral::{eigenvalue, is_idempotent, kleene_star, star_fixed_point_check};
use tropmetric::symmetry::{
    commutes_with, hclass_contains, hclass_element, isometry_group, unit, unit_decompose,
};
use tropmetric::{Permutation, Scalar, TropMatrix};

fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

/// A metric matrix: zero diagonal, strongly regular, symmetric idempotent.
fn metric_matrix(seed: u64, n: usize) -> TropMatrix {
    to_matrix(&semimetric(&mut rng(seed), n, true, 6, 2))
}

fn sr_idempotent(seed: u64, n: usize) -> TropMatrix {
    let mut r = rng(seed);
    let symmetric = r.gen_bool(0.5);
    to_matrix(&semimetric(&mut r, n, symmetric, 8, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_closed_idempotent(s in seed(), n in 1usize..6) {
        let a = matrix(&mut rng(s), n, -10, 2, 2);
        let result = kleene_star(&a).unwrap();
        prop_assert_eq!(result.converges, !result.eigenvalue.is_positive());
        if let Some(star) = result.star {
            prop_assert!(is_idempotent(&star).unwrap());
            prop_assert!(star.has_zero_diagonal());
            prop_assert_eq!(kleene_star(&star).unwrap().star, Some(star.clone()));
            prop_assert_eq!(star, series_star(&a));
        }
    }

    #[test]
    fn eigenvalue_matches_cycle_means(s in seed(), n in 1usize..6) {
        let a = matrix(&mut rng(s), n, -10, 10, 3);
        prop_assert_eq!(eigenvalue(&a).unwrap(), brute_eigenvalue(&a));
    }

    #[test]
    fn idempotents_have_eigenvalue_zero(s in seed(), n in 1usize..6) {
        let e = sr_idempotent(s, n);
        prop_assert!(eigenvalue(&e).unwrap().is_zero());
    }

    #[test]
    fn triangle_idempotent_star_equivalence(s in seed(), count in 1usize..6) {
        for a in zero_diagonal_mix(&mut rng(s), count) {
            let triangle = brute_triangle(&a);
            prop_assert_eq!(triangle, is_idempotent(&a).unwrap());
            prop_assert_eq!(triangle, star_fixed_point_check(&a).unwrap());
        }
    }

    #[test]
    fn permanent_matches_enumeration(s in seed(), n in 1usize..7, wide in any::<bool>()) {
        let a = if wide { matrix(&mut rng(s), n, -30, 30, 1) } else { matrix(&mut rng(s), n, -1, 1, 1) };
        let p = permanent(&a).unwrap();
        let (value, attainers) = brute_permanent(&a);
        prop_assert_eq!(p.value, value);
        prop_assert_eq!(p.attaining_unique, attainers == 1);
    }

    #[test]
    fn zero_diagonal_regularity_agrees(s in seed(), count in 1usize..6) {
        for a in zero_diagonal_mix(&mut rng(s), count) {
            if is_idempotent(&a).unwrap() {
                prop_assert_eq!(zero_diag_regularity(&a).unwrap(), is_strongly_regular(&a).unwrap());
                let zeros = (0..a.rows()).filter(|&i| a.get(i, i).is_zero()).count();
                prop_assert!(idempotent_rank(&a).unwrap() <= zeros);
            }
        }
    }

    #[test]
    fn idempotent_family_keeps_column_space(s in seed(), k1 in 1i64..8, k2 in 1i64..8) {
        // rank-deficient idempotents: close a semimetric with one pair glued at distance 0
        let mut r = rng(s);
        let n = r.gen_range(2..=4);
        let symmetric = r.gen_bool(0.5);
        let base = to_matrix(&semimetric(&mut r, n, symmetric, 6, 1));
        let glued = TropMatrix::from_fn(n, n, |i, j| {
            if (i, j) == (0, 1) || (i, j) == (1, 0) { Scalar::zero() } else { base.get(i, j).clone() }
        })
        .unwrap();
        let e = kleene_star(&glued).unwrap().star.unwrap();
        prop_assert!(!is_strongly_regular(&e).unwrap());
        let f1 = idempotent_family(&e, &Scalar::from_int(-k1)).unwrap();
        prop_assert!(is_idempotent(&f1).unwrap());
        prop_assert!(same_column_space(&f1, &e).unwrap());
        let f2 = idempotent_family(&e, &Scalar::from_int(-k2)).unwrap();
        prop_assert_eq!(k1 == k2, f1 == f2);
    }

    #[test]
    fn fixed_point_law(s in seed(), n in 1usize..6) {
        let mut r = rng(s);
        let e = sr_idempotent(s, n);
        for _ in 0..10 {
            let x = vector(&mut r, n, -8, 8, 2);
            let member = membership(&e.col_vectors(), &x).unwrap().member;
            prop_assert_eq!(member, e.mul_vec(&x).unwrap() == x);
            prop_assert_eq!(member, halfspace_rep(&e).unwrap().contains(&x).unwrap());
        }
    }

    #[test]
    fn projections_land_on_the_boundary(s in seed(), n in 2usize..6) {
        let mut r = rng(s);
        let e = sr_idempotent(s, n);
        for _ in 0..10 {
            let x = vector(&mut r, n, -12, 12, 2);
            let p = project_onto(&e, &x).unwrap();
            prop_assert!(in_column_space(&e, &p).unwrap());
            if p != x {
                prop_assert!(!interior_point(&e, &p).unwrap());
            }
        }
    }

    #[test]
    fn min_plus_convexity_and_duality(s in seed(), n in 1usize..6) {
        let mut r = rng(s);
        let e = sr_idempotent(s, n);
        for (x, y) in point_pairs(&e, &mut r, 8) {
            prop_assert!(in_column_space(&e, &x.min(&y).unwrap()).unwrap());
        }
        for row in e.row_vectors() {
            prop_assert_eq!(duality_map(&e, &row).unwrap(), row.negate());
            prop_assert!(in_column_space(&e, &row.negate()).unwrap());
        }
        prop_assert!(residuation_bound_check(&e).unwrap());
    }

    #[test]
    fn planar_vertices(s in seed()) {
        let e = sr_idempotent(s, 3);
        let h = halfspace_rep(&e).unwrap();
        let pts = polytrope_vertices_2d(&e).unwrap();
        prop_assert!((3..=6).contains(&pts.len()));
        for p in &pts {
            let x = p.lift();
            prop_assert!(h.contains(&x).unwrap());
            let tight = h.bounds.iter().filter(|b| x.get(b.i) - x.get(b.j) == b.bound).count();
            prop_assert!(tight >= 2);
        }
        for j in extremal_columns(&e).unwrap() {
            prop_assert!(pts.contains(&Point2::from_vector(&e.col(j)).unwrap()));
        }
    }

    #[test]
    fn residuation_triangle(s in seed(), n in 1usize..7) {
        let mut r = rng(s);
        let x = vector(&mut r, n, -9, 9, 4);
        let y = vector(&mut r, n, -9, 9, 4);
        let z = vector(&mut r, n, -9, 9, 4);
        let lhs = residuation_distance(&x, &z).unwrap();
        prop_assert!(lhs <= residuation_distance(&x, &y).unwrap() + residuation_distance(&y, &z).unwrap());
    }

    #[test]
    fn embedding_realises_the_table(s in seed(), n in 1usize..6, symmetric in any::<bool>()) {
        let d = semimetric(&mut rng(s), n, symmetric, 9, 2);
        let pts = embed(&d).unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&residuation_distance(&pts[i], &pts[j]).unwrap(), d.get(i, j));
                if symmetric {
                    prop_assert_eq!(&hilbert_distance(&pts[i], &pts[j]).unwrap(), d.get(i, j));
                }
                if i != j {
                    prop_assert!(residuation_distance(&pts[i], &pts[j]).unwrap().is_positive());
                }
            }
        }
    }

    #[test]
    fn distinct_semimetrics_have_distinct_polytopes(s in seed(), n in 2usize..6) {
        let mut r = rng(s);
        let d1 = semimetric(&mut r, n, false, 5, 1);
        let d2 = semimetric(&mut r, n, false, 5, 1);
        let (m1, m2) = (to_matrix(&d1), to_matrix(&d2));
        prop_assert_eq!(d1 == d2, same_column_space(&m1, &m2).unwrap());
    }

    #[test]
    fn classification_is_consistent(s in seed(), n in 1usize..6) {
        let mut r = rng(s);
        let symmetric = r.gen_bool(0.5);
        let d = semimetric(&mut r, n, symmetric, 6, 2);
        let report = classify(&to_matrix(&d)).unwrap();
        prop_assert!(report.is_semimetric_matrix);
        prop_assert_eq!(report.is_metric_matrix, report.symmetric);
        // star of a perturbation with nonpositive eigenvalue
        let bumped = to_matrix(&d).oplus(&matrix(&mut r, n, -20, -1, 2)).unwrap();
        if let Some(star) = kleene_star(&bumped).unwrap().star {
            classify(&star).unwrap();
        }
    }

    #[test]
    fn isometries_are_commuting_permutations(s in seed(), n in 1usize..6) {
        let d = semimetric(&mut rng(s), n, true, 2, 1);
        let dm = to_matrix(&d);
        let group = isometry_group(&d).unwrap();
        for p in Permutation::all(n) {
            prop_assert_eq!(group.contains(&p), commutes_with(&p.matrix(), &dm).unwrap());
        }
    }

    #[test]
    fn commuting_units_are_scalar(s in seed(), n in 2usize..6, lam in -5i64..5, bump in 1i64..4) {
        let d = semimetric(&mut rng(s), n, true, 2, 1);
        let dm = to_matrix(&d);
        for p in &isometry_group(&d).unwrap().elements {
            let g = unit(&vec![Scalar::from_int(lam); n], p).unwrap();
            prop_assert!(commutes_with(&g, &dm).unwrap());
            prop_assert!(unit_decompose(&g).unwrap().is_scalar());
            let mut diag = vec![Scalar::from_int(lam); n];
            diag[0] = &diag[0] + &Scalar::from_int(bump);
            prop_assert!(!commutes_with(&unit(&diag, p).unwrap(), &dm).unwrap());
        }
    }

    #[test]
    fn hclass_is_a_group(s in seed(), n in 1usize..5, l in -4i64..4, m in -4i64..4) {
        let d = semimetric(&mut rng(s), n, true, 2, 1);
        let dm = to_matrix(&d);
        let group = isometry_group(&d).unwrap();
        let (l, m) = (Scalar::from_ratio(l, 2), Scalar::from_ratio(m, 2));
        for sg in &group.elements {
            let a = hclass_element(&dm, sg, &l).unwrap();
            prop_assert!(hclass_contains(&dm, &a).unwrap());
            for t in &group.elements {
                let b = hclass_element(&dm, t, &m).unwrap();
                let prod = mat_mul(&a.to_ext(), &b.to_ext()).unwrap().to_finite().unwrap();
                prop_assert_eq!(prod, hclass_element(&dm, &sg.compose(t), &(&l + &m)).unwrap());
                prop_assert_eq!(a == b, sg == t && l == m);
            }
        }
        prop_assert_eq!(hclass_element(&dm, &Permutation::identity(n), &Scalar::zero()).unwrap(), dm);
    }

    #[test]
    fn text_round_trip(s in seed(), rows in 1usize..6, cols in 1usize..6) {
        let mut r = rng(s);
        let m = TropMatrix::from_fn(rows, cols, |_, _| Scalar::from_ratio(r.gen_range(-99..=99), r.gen_range(1..=12))).unwrap();
        prop_assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn isometry_search_matches_brute_force(s in seed(), n in 1usize..8, symmetric in any::<bool>()) {
        let d = semimetric(&mut rng(s), n, symmetric, 2, 1);
        prop_assert_eq!(isometry_group(&d).unwrap().elements, brute_isometries(&d));
    }
}

#[test]
fn metric_matrices_are_strongly_regular_idempotents() {
    for s in 0..20 {
        let e = metric_matrix(s, 1 + (s as usize) % 5);
        assert!(is_idempotent(&e).unwrap());
        assert!(is_strongly_regular(&e).unwrap());
        assert!(e.is_symmetric());
    }
}

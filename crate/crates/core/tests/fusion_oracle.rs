mod common;

use common::electre::naive_fusion;
use common::{golden, random_graph, rng};
use infnode::centrality::{ks_entropy, sd_local};
use infnode::fusion::{fuse, rank, sk_e, DecisionMatrix, FusionOptions, FusionResult, Weights};
use infnode::matrix::DenseMatrix;
use proptest::prelude::*;
use rand::Rng;

const KEEP: FusionOptions = FusionOptions {
    keep_matrices: true,
};

fn fused(rows: &[Vec<f64>], w: &[f64]) -> FusionResult {
    let x = DecisionMatrix::from_rows(rows).unwrap();
    fuse(&x, &Weights::new(w.to_vec()).unwrap(), KEEP).unwrap()
}

fn assert_close(m: &DenseMatrix, want: &[Vec<f64>], tol: f64, what: &str) {
    for (i, row) in want.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let got = m.get(i, j);
            assert!(
                (got - v).abs() <= tol,
                "{what}[{i}][{j}] = {got}, expected {v}"
            );
        }
    }
}

/// Random weights on the simplex with the last entry absorbing rounding.
fn random_weights(r: &mut impl Rng, k: usize) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..k).map(|_| r.random_range(0.0..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let mut w: Vec<f64> = raw.iter().map(|v| v / total).collect();
        let head: f64 = w[..k - 1].iter().sum();
        w[k - 1] = 1.0 - head;
        if w[k - 1] >= 0.0 && Weights::new(w.clone()).is_ok() {
            return w;
        }
    }
}

/// Values drawn from a few levels so that ties are common.
fn random_matrix(r: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<f64>> {
    let levels = r.random_range(2..6);
    (0..n)
        .map(|_| {
            (0..k)
                .map(|_| r.random_range(0..levels) as f64 * 0.37 - 0.5)
                .collect()
        })
        .collect()
}

#[test]
fn production_matches_naive_reference() {
    let mut r = rng(10);
    for _ in 0..500 {
        let n = r.random_range(1..=8);
        let k = r.random_range(2..=3);
        let x = random_matrix(&mut r, n, k);
        let w = random_weights(&mut r, k);
        let got = fused(&x, &w);
        let want = naive_fusion(&x, &w);
        let m = got.matrices.as_ref().unwrap();
        assert_close(&got.normalized, &want.x_star, 1e-12, "X*");
        assert_close(&got.weighted, &want.r, 1e-12, "R");
        assert_close(&m.harmony, &want.c, 1e-12, "C");
        assert_close(&m.disharmony, &want.d, 1e-12, "D");
        assert_close(&m.dominance, &want.u, 1e-12, "U");
        for (a, b) in got.net_dominance.iter().zip(&want.zeta) {
            assert!((a - b).abs() <= 1e-12);
        }
        assert_eq!(got.ranking, want.ranking);
    }
}

#[test]
fn streaming_and_matrix_paths_agree_bitwise() {
    let mut r = rng(11);
    for _ in 0..50 {
        let n = r.random_range(1..60);
        let x = random_matrix(&mut r, n, 2);
        let xm = DecisionMatrix::from_rows(&x).unwrap();
        let w = Weights::local_global(r.random_range(0.0..=1.0)).unwrap();
        let a = fuse(&xm, &w, KEEP).unwrap();
        let b = fuse(&xm, &w, FusionOptions::default()).unwrap();
        assert!(b.matrices.is_none());
        assert_eq!(a.net_dominance, b.net_dominance);
        assert_eq!(a.ranking, b.ranking);
    }
}

proptest! {
    #[test]
    fn bounds_and_zero_sum(
        x in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 2), 1..12),
        w in 0.0f64..=1.0,
    ) {
        let got = fuse(
            &DecisionMatrix::from_rows(&x).unwrap(),
            &Weights::local_global(w).unwrap(),
            KEEP,
        ).unwrap();
        let m = got.matrices.unwrap();
        let n = x.len();
        for i in 0..n {
            for j in 0..n {
                let (c, d, u) = (m.harmony.get(i, j), m.disharmony.get(i, j), m.dominance.get(i, j));
                prop_assert!((0.0..=1.0).contains(&c));
                prop_assert!((0.0..=1.0).contains(&d));
                prop_assert!((-1.0..=1.0).contains(&u));
                if i == j {
                    prop_assert_eq!((c, d, u), (0.0, 0.0, 0.0));
                }
            }
        }
        let total: f64 = got.net_dominance.iter().sum();
        prop_assert!(total.abs() <= 1e-9);
    }

    #[test]
    fn harmony_is_complementary_without_ties(
        x in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 2..10),
        seed in any::<u64>(),
    ) {
        let w = random_weights(&mut rng(seed), 3);
        let got = fused(&x, &w);
        let r = &got.weighted;
        let c = &got.matrices.as_ref().unwrap().harmony;
        for i in 0..x.len() {
            for j in 0..x.len() {
                let tied = (0..3).any(|l| r.get(i, l) == r.get(j, l));
                if i != j && !tied {
                    prop_assert!((c.get(i, j) + c.get(j, i) - 1.0).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn ranking_is_invariant_under_positive_affine_maps(
        x in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 2), 1..12),
        scale in prop::collection::vec(0.01f64..100.0, 2),
        shift in prop::collection::vec(-100.0f64..100.0, 2),
        w in 0.0f64..=1.0,
    ) {
        // Grid the inputs so the affine map cannot reorder values that differ by rounding.
        let x: Vec<Vec<f64>> = x.iter().map(|r| r.iter().map(|v| (v * 4.0).round() / 4.0).collect()).collect();
        let y: Vec<Vec<f64>> = x
            .iter()
            .map(|r| r.iter().enumerate().map(|(l, v)| v * scale[l] + shift[l]).collect())
            .collect();
        let a = fused(&x, &[1.0 - w, w]);
        let b = fused(&y, &[1.0 - w, w]);
        for i in 0..x.len() {
            for l in 0..2 {
                prop_assert!((a.normalized.get(i, l) - b.normalized.get(i, l)).abs() <= 1e-9);
            }
        }
        prop_assert_eq!(a.ranking, b.ranking);
    }
}

#[test]
fn weakly_dominating_row_has_full_dominance() {
    let mut r = rng(12);
    for _ in 0..300 {
        let n = r.random_range(2..=8);
        let k = r.random_range(2..=3);
        let x = random_matrix(&mut r, n, k);
        let w = random_weights(&mut r, k);
        let got = fused(&x, &w);
        let rr = &got.weighted;
        let u = &got.matrices.as_ref().unwrap().dominance;
        for i in 0..n {
            for j in 0..n {
                if i != j && (0..k).all(|l| rr.get(i, l) >= rr.get(j, l)) {
                    assert_eq!(u.get(i, j), 1.0);
                }
            }
        }
    }
}

#[test]
fn worked_example_intermediate_matrices() {
    let x: Vec<Vec<f64>> = golden::X.iter().map(|r| r.to_vec()).collect();
    let got = fused(&x, &golden::WEIGHTS);
    let rows = |m: &[[f64; 2]; 12]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let square = |m: &[[f64; 12]; 12]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    assert_close(&got.normalized, &rows(&golden::X_STAR), 5e-4, "X*");
    assert_close(&got.weighted, &rows(&golden::R), 5e-4, "R");
    let m = got.matrices.as_ref().unwrap();
    assert_close(&m.harmony, &square(&golden::C), 0.02, "C");
    assert_close(&m.disharmony, &square(&golden::D), 0.02, "D");
    assert_close(&m.dominance, &square(&golden::U), 0.02, "U");
    // Nodes other than 5 and 9 reproduce the reference scores.
    for (i, (&z, &want)) in got.net_dominance.iter().zip(&golden::ZETA).enumerate() {
        if i != 4 && i != 8 {
            assert!((z - want).abs() <= 0.1, "zeta[{}] = {z}", i + 1);
        }
    }
}

#[test]
fn degenerate_weights_reduce_to_single_metric_order() {
    let mut r = rng(13);
    for _ in 0..50 {
        let n = r.random_range(2..=30);
        let g = random_graph(&mut r, n, 0.2);
        let sd = sd_local(&g).values;
        let ks = ks_entropy(&g).values;
        assert_eq!(
            sk_e(&g, 0.0, FusionOptions::default()).unwrap().ranking,
            rank(&sd)
        );
        assert_eq!(
            sk_e(&g, 1.0, FusionOptions::default()).unwrap().ranking,
            rank(&ks)
        );
    }
}

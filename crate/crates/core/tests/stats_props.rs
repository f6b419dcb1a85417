use lexorder_core::stats::{fit_reciprocal, rank_descending, spearman};
use proptest::prelude::*;

proptest! {
    #[test]
    fn spearman_invariant_under_monotone_maps(
        pts in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40)
    ) {
        let x: Vec<f64> = pts.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pts.iter().map(|p| p.1).collect();
        let Ok(r) = spearman(&x, &y) else { return Ok(()) };
        let tx: Vec<f64> = x.iter().map(|v| v.powi(3) + 2.0).collect();
        let ty: Vec<f64> = y.iter().map(|v| (v / 50.0).exp()).collect();
        prop_assert!((spearman(&tx, &ty).unwrap() - r).abs() < 1e-12);
        prop_assert!((-1.0..=1.0).contains(&r));
    }

    #[test]
    fn spearman_matches_closed_form_without_ties(perm in Just((1..=9).collect::<Vec<u32>>()).prop_shuffle()) {
        let n = perm.len() as f64;
        let x: Vec<f64> = (1..=9).map(f64::from).collect();
        let y: Vec<f64> = perm.iter().map(|&v| f64::from(v)).collect();
        let d2: f64 = x.iter().zip(&y).map(|(a, b)| (a - b).powi(2)).sum();
        let closed = 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
        prop_assert!((spearman(&x, &y).unwrap() - closed).abs() < 1e-12);
    }

    #[test]
    fn rank_order_consistent(vals in prop::collection::vec(0.0f64..1.0, 2..10)) {
        let (ranks, _) = rank_descending(&vals);
        let mut sorted = ranks.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=vals.len() as u32).collect::<Vec<_>>());
        for i in 0..vals.len() {
            for j in 0..vals.len() {
                if vals[i] > vals[j] {
                    prop_assert!(ranks[i] < ranks[j]);
                }
            }
        }
    }

    #[test]
    fn fit_residuals_orthogonal(
        pts in prop::collection::vec((0.05f64..2.0, -1.0f64..3.0), 3..30)
    ) {
        let Ok(fit) = fit_reciprocal(&pts, false) else { return Ok(()) };
        let dot: f64 = fit.residuals.iter().zip(&pts).map(|(e, p)| e / p.0).sum();
        let scale: f64 = pts.iter().map(|p| (p.1 / p.0).abs()).sum::<f64>() + 1.0;
        prop_assert!(dot.abs() / scale < 1e-9);
        prop_assert!(fit.residuals.iter().sum::<f64>().abs() < 1e-9 * pts.len() as f64 * 10.0);
    }
}

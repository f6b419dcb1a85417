//! Prints the median relative error of the match-length estimator on the
//! synthetic sources for growing N.
//!
//! cargo run --release -p lexorder-core --example convergence [seeds]

use lexorder_core::entropy::{entropy_rate, match_lengths};
use lexorder_core::testkit::{generate_indices, SyntheticSource};

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 0 {
        (xs[m - 1] + xs[m]) / 2.0
    } else {
        xs[m]
    }
}

fn main() {
    let seeds: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let sources = [
        ("iid k=4", SyntheticSource::uniform(4).unwrap()),
        (
            "markov [[.9,.1],[.1,.9]]",
            SyntheticSource::markov1(vec![vec![0.9, 0.1], vec![0.1, 0.9]]).unwrap(),
        ),
    ];
    for (name, src) in &sources {
        let truth = src.entropy_rate();
        println!("{name}: H = {truth:.6}");
        for n in [1_000usize, 10_000, 100_000, 1_000_000] {
            let errs: Vec<f64> = (0..seeds)
                .map(|seed| {
                    let seq = generate_indices(src, n, seed).unwrap();
                    let h = entropy_rate(&match_lengths(&seq).unwrap()).unwrap().h_bpc;
                    (h - truth).abs() / truth
                })
                .collect();
            println!("  N = {n:>8}: median |rel err| = {:.4}", median(errs));
        }
    }
}

//! Measures word-order and word-structure information for paired positional
//! and affixal toy corpora.
//!
//! cargo run --release -p lexorder-core --example toy_tradeoff [seeds] [sentences]

use lexorder_core::measures::{measure_book, MeasureConfig};
use lexorder_core::testkit::{render_toy_corpus, Marking, ToyLanguageSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let seeds: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let sentences: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let cfg = MeasureConfig {
        replicates: 1,
        ..Default::default()
    };
    println!("seed  mode        N      d_order  d_structure");
    for seed in 0..seeds {
        let spec = ToyLanguageSpec::generate(seed, 60, 20, Marking::Positional);
        for mode in [Marking::Positional, Marking::Affixal] {
            let book = render_toy_corpus(&spec.with_mode(mode), sentences, seed).unwrap();
            let m = &measure_book(&book, &cfg).unwrap()[0];
            println!(
                "{seed:>4}  {:<10} {:>7} {:>8.4} {:>12.4}",
                format!("{mode:?}"),
                m.n,
                m.d_order,
                m.d_structure
            );
        }
    }
}

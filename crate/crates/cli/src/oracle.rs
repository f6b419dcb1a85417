//! The `oracle-check` command: fast match lengths against brute force.

use lexorder_core::entropy::{match_lengths, match_lengths_naive};
use lexorder_core::transforms::XorShift64Star;

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub count: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub min_alphabet: u32,
    pub max_alphabet: u32,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            count: 1000,
            min_len: 1,
            max_len: 2000,
            min_alphabet: 2,
            max_alphabet: 30,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleReport {
    Pass { cases: usize },
    /// Nothing was checked.
    Vacuous,
    Fail {
        case: usize,
        input: Vec<u32>,
        fast: Vec<u32>,
        naive: Vec<u32>,
    },
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        !matches!(self, OracleReport::Fail { .. })
    }
}

fn naive(seq: &[u32]) -> Vec<u32> {
    match_lengths_naive(seq).expect("nonempty").values().to_vec()
}

pub fn check(cfg: &OracleConfig) -> OracleReport {
    check_with(cfg, |s| match_lengths(s).expect("nonempty").values().to_vec())
}

/// Runs the comparison against an arbitrary fast implementation. A failing
/// input is shrunk before it is reported.
pub fn check_with<F>(cfg: &OracleConfig, fast: F) -> OracleReport
where
    F: Fn(&[u32]) -> Vec<u32>,
{
    if cfg.count == 0 {
        return OracleReport::Vacuous;
    }
    let mut rng = XorShift64Star::new(cfg.seed);
    let len_span = (cfg.max_len.max(cfg.min_len) - cfg.min_len.max(1) + 1) as u64;
    let alpha_span = u64::from(cfg.max_alphabet.max(cfg.min_alphabet) - cfg.min_alphabet.max(1) + 1);
    for case in 0..cfg.count {
        let n = cfg.min_len.max(1) + rng.below(len_span) as usize;
        let k = cfg.min_alphabet.max(1) + rng.below(alpha_span) as u32;
        let seq: Vec<u32> = (0..n).map(|_| rng.below(u64::from(k)) as u32).collect();
        if fast(&seq) != naive(&seq) {
            let input = shrink(seq, &fast);
            return OracleReport::Fail {
                case,
                fast: fast(&input),
                naive: naive(&input),
                input,
            };
        }
    }
    OracleReport::Pass { cases: cfg.count }
}

fn shrink<F: Fn(&[u32]) -> Vec<u32>>(seq: Vec<u32>, fast: &F) -> Vec<u32> {
    let fails = |s: &[u32]| !s.is_empty() && fast(s) != naive(s);
    let mut cur = (1..=seq.len())
        .map(|n| seq[..n].to_vec())
        .find(|p| fails(p))
        .unwrap_or(seq);
    let mut i = 0;
    while i < cur.len() {
        let mut candidate = cur.clone();
        candidate.remove(i);
        if fails(&candidate) {
            cur = candidate;
        } else {
            i += 1;
        }
    }
    cur
}

//! Exact permutation test for Spearman's rank correlation.
//!
//! All `n!` orderings of the second ranking are enumerated (Heap's
//! algorithm) and compared with the observed `sum d^2`, which is an integer
//! for tie-free ranks, so the comparison is exact and the p-value is the
//! rational `count / n!`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::spearman::average_ranks;
use crate::error::{Error, Result};

pub const MAX_EXACT_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alternative {
    /// Positive association: permutations with `r_s >=` observed.
    #[default]
    Greater,
    Less,
    TwoSided,
}

impl FromStr for Alternative {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greater" => Ok(Self::Greater),
            "less" => Ok(Self::Less),
            "two_sided" | "two-sided" => Ok(Self::TwoSided),
            other => Err(Error::InvalidArgument(format!("unknown alternative {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermutationTest {
    pub r_s: f64,
    pub sum_d2: u64,
    /// Permutations at least as extreme as the observed ranking.
    pub count: u64,
    /// `n!`
    pub total: u64,
}

impl PermutationTest {
    pub fn p_value(&self) -> f64 {
        self.count as f64 / self.total as f64
    }

    /// `count/total` as written in output files.
    pub fn rational(&self) -> String {
        format!("{}/{}", self.count, self.total)
    }
}

fn integer_ranks(xs: &[f64]) -> Result<Vec<i64>> {
    average_ranks(xs)
        .into_iter()
        .map(|r| {
            if r.fract() == 0.0 {
                Ok(r as i64)
            } else {
                Err(Error::TiedRanks)
            }
        })
        .collect()
}

pub fn exact_perm_test(x: &[f64], y: &[f64], alternative: Alternative) -> Result<PermutationTest> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::TooFewObservations { need: 2, got: n });
    }
    if n > MAX_EXACT_N {
        return Err(Error::PermutationTooLarge { n, max: MAX_EXACT_N });
    }
    let rx = integer_ranks(x)?;
    let mut ry = integer_ranks(y)?;
    let sum_d2 = |ry: &[i64]| -> i64 { rx.iter().zip(ry).map(|(a, b)| (a - b) * (a - b)).sum() };
    let observed = sum_d2(&ry);
    // r_s = 1 - 6 D / (n^3 - n); scaled: s = (n^3 - n) - 6 D has the sign and
    // ordering of r_s.
    let denom = (n * n * n - n) as i64;
    let scaled = |d: i64| denom - 6 * d;
    let obs_scaled = scaled(observed);

    let extreme = |d: i64| match alternative {
        Alternative::Greater => d <= observed,
        Alternative::Less => d >= observed,
        Alternative::TwoSided => scaled(d).abs() >= obs_scaled.abs(),
    };

    let mut count = 0u64;
    let mut total = 0u64;
    let mut c = vec![0usize; n];
    let mut visit = |ry: &[i64]| {
        total += 1;
        if extreme(sum_d2(ry)) {
            count += 1;
        }
    };
    visit(&ry);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                ry.swap(0, i);
            } else {
                ry.swap(c[i], i);
            }
            visit(&ry);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    Ok(PermutationTest {
        r_s: obs_scaled as f64 / denom as f64,
        sum_d2: observed as u64,
        count,
        total,
    })
}

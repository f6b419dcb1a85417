//! Brute-force match lengths, kept as the reference the fast path is checked
//! against.

use super::MatchLengths;
use crate::error::{Error, Result};

/// For every position `p` (0-based), scans all earlier start positions `j`
/// and measures how far `seq[j..]` agrees with `seq[p..]` while staying inside
/// `seq[..p]`. The match length is one more than the best such agreement.
/// Quadratic; meant for short inputs.
pub fn match_lengths_naive<T: PartialEq>(seq: &[T]) -> Result<MatchLengths> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let n = seq.len();
    let mut values = Vec::with_capacity(n);
    for p in 0..n {
        let mut best = 0;
        for j in 0..p {
            let limit = (p - j).min(n - p);
            let mut k = 0;
            while k < limit && seq[j + k] == seq[p + k] {
                k += 1;
            }
            best = best.max(k);
        }
        values.push(best as u32 + 1);
    }
    Ok(MatchLengths::from_values(values))
}

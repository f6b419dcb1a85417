//! Match-length entropy-rate estimation.
//!
//! The match length `l_i` at (1-based) position `i` is the length of the
//! shortest substring starting at `i` that does not occur anywhere in
//! `c_1..c_{i-1}`. When the entire remaining suffix does occur, `l_i` is the
//! suffix length plus one. The estimate in bits per character is
//!
//! ```text
//! H = [ (1/N) * sum_{i=1..N} l_i / log2(i + 1) ]^-1
//! ```
//!
//! There is no lookback window. Symbols are Unicode scalar values.

mod automaton;
mod naive;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::SymbolSequence;
use crate::error::{Error, Result};

pub use automaton::match_lengths;
pub use naive::match_lengths_naive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchLengths {
    values: Vec<u32>,
}

impl MatchLengths {
    pub fn from_values(values: Vec<u32>) -> Self {
        Self { values }
    }

    /// `l_1..l_N`, stored 0-based.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `index,l_i` rows with 1-based indices.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,l_i\n");
        for (i, l) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{},{}", i + 1, l);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyEstimate {
    /// Bits per character.
    pub h_bpc: f64,
    pub n: usize,
    /// `sum l_i / log2(i + 1)`.
    pub sum_term: f64,
    pub provenance: Option<String>,
}

pub fn entropy_rate(ml: &MatchLengths) -> Result<EntropyEstimate> {
    if ml.is_empty() {
        return Err(Error::EmptySequence);
    }
    let sum_term: f64 = ml
        .values()
        .iter()
        .enumerate()
        .map(|(idx, &l)| f64::from(l) / ((idx + 2) as f64).log2())
        .sum();
    let n = ml.len();
    Ok(EntropyEstimate {
        h_bpc: n as f64 / sum_term,
        n,
        sum_term,
        provenance: None,
    })
}

/// Match lengths and entropy of a flattened book in one step.
pub fn estimate(seq: &SymbolSequence) -> Result<EntropyEstimate> {
    entropy_rate(&match_lengths(seq.chars())?)
}

//! Derivation of per-task seeds from the run's master seed.
//!
//! ```text
//! h = mix64(master_seed XOR GOLDEN)
//! for w in [fnv1a64(utf8(translation_id)), book_id, replicate_index, purpose_tag]:
//!     h = mix64((h + GOLDEN) XOR w)          // wrapping add
//! ```
//!
//! `GOLDEN = 0x9E3779B97F4A7C15`; purpose tags are 1 (verse shuffle),
//! 2 (order shuffle) and 3 (mask draw). Each round is a bijection in `w`, so
//! two specs differing in only one field never collide.

use serde::{Deserialize, Serialize};

use super::rng::{mix64, GOLDEN_GAMMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Purpose {
    VerseShuffle,
    OrderShuffle,
    MaskDraw,
}

impl Purpose {
    pub fn tag(self) -> u64 {
        match self {
            Purpose::VerseShuffle => 1,
            Purpose::OrderShuffle => 2,
            Purpose::MaskDraw => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeedSpec<'a> {
    pub master_seed: u64,
    pub translation_id: &'a str,
    pub book_id: u32,
    pub replicate: u32,
    pub purpose: Purpose,
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xCBF2_9CE4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01B3)
    })
}

pub fn derive_seed(spec: &SeedSpec<'_>) -> u64 {
    let words = [
        fnv1a64(spec.translation_id.as_bytes()),
        u64::from(spec.book_id),
        u64::from(spec.replicate),
        spec.purpose.tag(),
    ];
    words.iter().fold(mix64(spec.master_seed ^ GOLDEN_GAMMA), |h, &w| {
        mix64(h.wrapping_add(GOLDEN_GAMMA) ^ w)
    })
}

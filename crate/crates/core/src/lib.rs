//! Word order and word structure information in verse-aligned parallel texts.
//!
//! The crate estimates the entropy rate of a text with the Lempel-Ziv style
//! match-length estimator and compares three renderings of each book:
//!
//! * the original text, with verses in random order,
//! * the same text with the order of words destroyed,
//! * the same text with every multi-character word type replaced by a random
//!   string of equal length.
//!
//! The entropy increases caused by the two destructive transforms are the
//! word-order information `d_order` and the word-structure information
//! `d_structure`. The [`stats`] module holds the rank statistics and
//! reciprocal fits used to compare these quantities across books and
//! languages, and [`testkit`] contains synthetic sources with known entropy.

pub mod books;
pub mod corpus;
pub mod entropy;
pub mod error;
pub mod format;
pub mod measures;
pub mod stats;
pub mod testkit;
pub mod transforms;

pub use corpus::{Book, SymbolSequence, Translation, Verse, VerseRef};
pub use entropy::{EntropyEstimate, MatchLengths};
pub use error::{Error, Result};
pub use measures::{AggregateMeasurement, BookMeasurement, MeasureConfig};

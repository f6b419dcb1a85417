//! Batch pipeline behind the `lexorder` binary.
//!
//! * [`analyze`] parses corpora and measures every (translation, book,
//!   replicate) work unit on a worker pool, writing `results.csv` and
//!   `manifest.json`.
//! * [`report`] turns a results file into fits, correlation matrices and
//!   rank tables.
//! * [`oracle`] cross-checks the fast match-length index against brute force.
//! * [`synth`] writes synthetic corpora in the TSV format.

pub mod analyze;
pub mod config;
pub mod oracle;
pub mod report;
pub mod results;
pub mod synth;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FATAL: u8 = 1;
    pub const PARTIAL: u8 = 2;
}

//! Synthetic inputs with known answers: sources with analytic entropy rates
//! and a pair of toy languages that express the same messages through word
//! order or through suffixes.

mod source;
mod toy;

pub use source::{generate, generate_indices, symbol_char, SyntheticSource};
pub use toy::{messages, render_toy_corpus, Clause, Marking, ToyLanguageSpec};

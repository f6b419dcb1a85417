//! The `synth` command: synthetic corpora in the TSV format.

use std::fmt::Write as _;

use anyhow::Result;
use lexorder_core::books;
use lexorder_core::corpus::Book;
use lexorder_core::testkit::{generate, render_toy_corpus, Marking, SyntheticSource, ToyLanguageSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SynthKind {
    /// i.i.d. uniform symbols
    Iid,
    /// Symmetric first-order Markov chain
    Markov,
    /// Toy language marking roles by word order
    Positional,
    /// Toy language marking roles by suffixes
    Affixal,
}

#[derive(Debug, Clone)]
pub struct SynthOptions {
    pub kind: SynthKind,
    pub seed: u64,
    /// Symbols for iid/markov.
    pub length: usize,
    pub alphabet: usize,
    /// Probability of staying in the same state (markov).
    pub stay: f64,
    /// Sentences for the toy languages.
    pub sentences: usize,
    pub nouns: usize,
    pub verbs: usize,
}

impl Default for SynthOptions {
    fn default() -> Self {
        Self {
            kind: SynthKind::Iid,
            seed: 0,
            length: 100_000,
            alphabet: 4,
            stay: 0.9,
            sentences: 2000,
            nouns: 60,
            verbs: 20,
        }
    }
}

pub fn book_to_tsv(book: &Book, header: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (k, v) in header {
        let _ = writeln!(out, "# {k}: {v}");
    }
    for v in &book.verses {
        let r = v.reference;
        let _ = writeln!(out, "{}\t{}\t{}\t{}", r.book, r.chapter, r.verse, v.text());
    }
    out
}

pub fn render(opts: &SynthOptions) -> Result<String> {
    match opts.kind {
        SynthKind::Iid | SynthKind::Markov => {
            let source = if opts.kind == SynthKind::Iid {
                SyntheticSource::uniform(opts.alphabet)?
            } else {
                let k = opts.alphabet;
                if k < 2 {
                    anyhow::bail!("markov source needs an alphabet of at least 2");
                }
                let off = (1.0 - opts.stay) / (k - 1) as f64;
                let rows = (0..k)
                    .map(|i| (0..k).map(|j| if i == j { opts.stay } else { off }).collect())
                    .collect();
                SyntheticSource::markov1(rows)?
            };
            let seq = generate(&source, opts.length, opts.seed)?;
            let book = Book::from_texts(books::MATTHEW, "synth", "syn", &[seq.as_string()]);
            Ok(book_to_tsv(
                &book,
                &[
                    ("source", format!("{:?}", opts.kind).to_lowercase()),
                    ("entropy_rate_bpc", format!("{:.12}", source.entropy_rate())),
                    ("seed", opts.seed.to_string()),
                    ("iso_639-3", "syn".into()),
                ],
            ))
        }
        SynthKind::Positional | SynthKind::Affixal => {
            let mode = if opts.kind == SynthKind::Positional {
                Marking::Positional
            } else {
                Marking::Affixal
            };
            let spec = ToyLanguageSpec::generate(opts.seed, opts.nouns, opts.verbs, mode);
            let book = render_toy_corpus(&spec, opts.sentences, opts.seed)?;
            Ok(book_to_tsv(
                &book,
                &[
                    ("source", format!("toy-{:?}", mode).to_lowercase()),
                    ("seed", opts.seed.to_string()),
                    ("iso_639-3", book.language.clone()),
                ],
            ))
        }
    }
}

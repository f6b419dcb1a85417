//! The `analyze` command.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use lexorder_core::corpus::{parse_corpus, select_books, truncate_books, Book, ParseOptions};
use lexorder_core::measures::{measure_replicate, BookMeasurement, MeasureConfig};
use log::{info, warn};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::RunConfig;
use crate::exit;
use crate::results::write_results;

#[derive(Debug, Clone, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
    pub translation_id: String,
    pub language: String,
    pub books: Vec<u32>,
    pub missing_books: Vec<u32>,
    pub skipped_empty_verses: usize,
    pub truncation_target: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct UnitError {
    pub translation_id: String,
    pub book_id: u32,
    pub replicate: u32,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub software: String,
    pub config: RunConfig,
    pub inputs: Vec<InputRecord>,
    pub rows: usize,
    pub negative_rows: usize,
    pub errors: Vec<UnitError>,
    pub notices: Vec<String>,
}

#[derive(Debug)]
pub struct AnalyzeOutcome {
    pub rows: Vec<BookMeasurement>,
    pub manifest: Manifest,
}

impl AnalyzeOutcome {
    pub fn exit_code(&self) -> u8 {
        if self.manifest.errors.is_empty() && self.manifest.rows > 0 {
            exit::OK
        } else {
            exit::PARTIAL
        }
    }
}

fn translation_id(path: &Path) -> Result<String> {
    let name = path
        .file_name()
        .and_then(|s| s.to_str())
        .with_context(|| format!("input path {} has no usable file name", path.display()))?;
    let stem = name
        .strip_suffix(".txt")
        .or_else(|| name.strip_suffix(".tsv"))
        .unwrap_or(name);
    Ok(stem.to_string())
}

/// Parses the inputs and measures every work unit. Errors returned here are
/// fatal; per-book failures are collected in the manifest instead.
pub fn run(cfg: &RunConfig) -> Result<AnalyzeOutcome> {
    if cfg.inputs.is_empty() {
        bail!("no input files");
    }
    if cfg.books.is_empty() {
        bail!("no books requested");
    }
    if cfg.replicates == 0 {
        bail!("--replicates must be at least 1");
    }

    let opts = ParseOptions {
        language: None,
        lowercase: cfg.lowercase,
    };
    let mut inputs = Vec::new();
    let mut books: Vec<Book> = Vec::new();
    let mut notices = Vec::new();
    let mut seen_ids = std::collections::BTreeSet::new();

    for path in &cfg.inputs {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let tid = translation_id(path)?;
        if !seen_ids.insert(tid.clone()) {
            bail!("two inputs map to translation id {tid:?}");
        }
        let translation = parse_corpus(&bytes, cfg.format, &tid, &opts)
            .with_context(|| format!("parsing {}", path.display()))?;
        let selection = select_books(&translation, &cfg.books)?;
        if !selection.missing.is_empty() {
            let msg = format!("{tid}: missing books {:?}", selection.missing);
            warn!("{msg}");
            notices.push(msg);
        }
        let mut selected = selection.books;
        let mut target = None;
        if let Some(granularity) = cfg.truncate.granularity() {
            if selected.len() >= 2 {
                selected = truncate_books(&selected, granularity)?;
                target = selected.iter().map(Book::char_len).max();
            } else if !selected.is_empty() {
                notices.push(format!("{tid}: fewer than two books, truncation skipped"));
            }
        }
        inputs.push(InputRecord {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
            translation_id: tid,
            language: translation.language.clone(),
            books: selected.iter().map(|b| b.book_id).collect(),
            missing_books: selection.missing,
            skipped_empty_verses: translation.provenance.skipped_empty,
            truncation_target: target,
        });
        books.extend(selected);
    }

    if books.is_empty() {
        warn!("no valid books in any input");
        notices.push("no valid books".into());
    }

    let measure_cfg = MeasureConfig {
        master_seed: cfg.seed,
        replicates: cfg.replicates,
        scope: cfg.order_scope,
        verse_shuffle: cfg.verse_shuffle,
    };
    let units: Vec<(&Book, u32)> = books
        .iter()
        .flat_map(|b| (0..cfg.replicates).map(move |r| (b, r)))
        .collect();
    info!("{} work units on {} workers", units.len(), cfg.workers);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .context("starting worker pool")?;
    let outcomes: Vec<std::result::Result<BookMeasurement, UnitError>> = pool.install(|| {
        units
            .par_iter()
            .map(|&(book, r)| {
                measure_replicate(book, &measure_cfg, r).map_err(|e| UnitError {
                    translation_id: book.translation_id.clone(),
                    book_id: book.book_id,
                    replicate: r,
                    error: e.to_string(),
                })
            })
            .collect()
    });

    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for o in outcomes {
        match o {
            Ok(m) => rows.push(m),
            Err(e) => {
                warn!("{} book {} replicate {}: {}", e.translation_id, e.book_id, e.replicate, e.error);
                errors.push(e);
            }
        }
    }
    rows.sort_by(|a, b| {
        (&a.translation_id, a.book_id, a.replicate).cmp(&(&b.translation_id, b.book_id, b.replicate))
    });
    errors.sort();

    let negative_rows = rows.iter().filter(|m| m.has_negative()).count();
    if negative_rows > 0 {
        warn!("{negative_rows} rows have a negative d_order or d_structure (estimator noise)");
    }

    let manifest = Manifest {
        software: format!("lexorder {}", env!("CARGO_PKG_VERSION")),
        config: cfg.clone(),
        inputs,
        rows: rows.len(),
        negative_rows,
        errors,
        notices,
    };
    Ok(AnalyzeOutcome { rows, manifest })
}

pub fn write_outputs(outcome: &AnalyzeOutcome, out_dir: &Path) -> Result<()> {
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let results = out_dir.join("results.csv");
    let file = fs::File::create(&results).with_context(|| format!("creating {}", results.display()))?;
    write_results(std::io::BufWriter::new(file), &outcome.rows)?;
    let mut manifest = serde_json::to_string_pretty(&outcome.manifest)?;
    manifest.push('\n');
    fs::write(out_dir.join("manifest.json"), manifest)?;
    Ok(())
}

use std::path::PathBuf;

use anyhow::{Context, Result};
use lexorder_core::books::DEFAULT_BOOKS;
use lexorder_core::corpus::{Format, Granularity};
use lexorder_core::measures::GroupBy;
use lexorder_core::transforms::OrderScope;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Truncate {
    #[default]
    Off,
    Token,
    Char,
}

impl Truncate {
    pub fn granularity(self) -> Option<Granularity> {
        match self {
            Truncate::Off => None,
            Truncate::Token => Some(Granularity::Token),
            Truncate::Char => Some(Granularity::Character),
        }
    }
}

/// Everything that determines the output of `analyze`. Serialized into the
/// run manifest; feeding the manifest back with `--config` reproduces the
/// results byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub format: Format,
    pub books: Vec<u32>,
    pub seed: u64,
    pub replicates: u32,
    pub truncate: Truncate,
    pub order_scope: OrderScope,
    pub group_by: GroupBy,
    pub verse_shuffle: bool,
    pub lowercase: bool,
    /// Does not affect results.
    pub workers: usize,
    pub out: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            format: Format::Pbc,
            books: DEFAULT_BOOKS.to_vec(),
            seed: 0,
            replicates: 3,
            truncate: Truncate::Off,
            order_scope: OrderScope::Verse,
            group_by: GroupBy::Language,
            verse_shuffle: true,
            lowercase: false,
            workers: 0,
            out: PathBuf::from("out"),
        }
    }
}

#[derive(Deserialize)]
struct ManifestConfig {
    config: RunConfig,
}

impl RunConfig {
    /// Reads either a bare config or a run manifest containing one.
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        if let Ok(m) = serde_json::from_str::<ManifestConfig>(&text) {
            return Ok(m.config);
        }
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

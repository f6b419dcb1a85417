//! Per-book word-order and word-structure information.
//!
//! For each replicate a single verse permutation is drawn and shared by all
//! three variants, so the variants differ only in the dimension that was
//! destroyed:
//!
//! * original: verse-shuffled book,
//! * order: the verse-shuffled book with tokens additionally permuted,
//! * structure: the masked book put through the same verse permutation.
//!
//! `d_order = h_order - h_original` and `d_structure = h_structure -
//! h_original`. Small books can give slightly negative values; they are kept
//! as they are.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::corpus::Book;
use crate::entropy::{estimate, EntropyEstimate};
use crate::error::{Error, Result};
use crate::transforms::{
    derive_seed, destroy_word_order, mask_book, permute_verses, verse_permutation, BookVariant,
    OrderScope, Purpose, SeedSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureConfig {
    pub master_seed: u64,
    pub replicates: u32,
    pub scope: OrderScope,
    /// Shuffle verses before estimating. Disabling it is only meant for
    /// sensitivity checks.
    pub verse_shuffle: bool,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        Self {
            master_seed: 0,
            replicates: 3,
            scope: OrderScope::Verse,
            verse_shuffle: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicateSeeds {
    pub verse_shuffle: u64,
    pub order_shuffle: u64,
    pub mask_draw: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BookMeasurement {
    pub translation_id: String,
    pub language: String,
    pub book_id: u32,
    pub replicate: u32,
    pub n: usize,
    pub h_original: f64,
    pub h_order: f64,
    pub h_structure: f64,
    pub d_order: f64,
    pub d_structure: f64,
    pub seeds: ReplicateSeeds,
}

impl BookMeasurement {
    /// Either difference came out below zero (estimator noise).
    pub fn has_negative(&self) -> bool {
        self.d_order < 0.0 || self.d_structure < 0.0
    }
}

pub fn replicate_seeds(book: &Book, master_seed: u64, replicate: u32) -> ReplicateSeeds {
    let seed = |purpose| {
        derive_seed(&SeedSpec {
            master_seed,
            translation_id: &book.translation_id,
            book_id: book.book_id,
            replicate,
            purpose,
        })
    };
    ReplicateSeeds {
        verse_shuffle: seed(Purpose::VerseShuffle),
        order_shuffle: seed(Purpose::OrderShuffle),
        mask_draw: seed(Purpose::MaskDraw),
    }
}

pub fn measure_book(book: &Book, config: &MeasureConfig) -> Result<Vec<BookMeasurement>> {
    if config.replicates == 0 {
        return Err(Error::InvalidArgument("replicates must be >= 1".into()));
    }
    (0..config.replicates)
        .map(|r| measure_replicate(book, config, r))
        .collect()
}

pub fn measure_replicate(book: &Book, config: &MeasureConfig, replicate: u32) -> Result<BookMeasurement> {
    let scope = config.scope;
    measure_replicate_with(book, config, replicate, |b, seed| {
        destroy_word_order(b, seed, scope)
    })
}

/// [`measure_replicate`] with a caller-supplied order-destroying step, which
/// receives the verse-shuffled book and the order-shuffle seed.
pub fn measure_replicate_with<F>(
    book: &Book,
    config: &MeasureConfig,
    replicate: u32,
    destroy_order: F,
) -> Result<BookMeasurement>
where
    F: FnOnce(&Book, u64) -> Result<BookVariant>,
{
    if book.is_empty() {
        return Err(Error::EmptyBook(book.book_id));
    }
    let seeds = replicate_seeds(book, config.master_seed, replicate);
    let perm: Vec<usize> = if config.verse_shuffle {
        verse_permutation(book.verses.len(), seeds.verse_shuffle)
    } else {
        (0..book.verses.len()).collect()
    };

    let original = permute_verses(book, &perm);
    let masked = mask_book(book, seeds.mask_draw)?;
    let structure = permute_verses(&masked.book, &perm);
    let order = destroy_order(&original, seeds.order_shuffle)?;

    let h_original = estimate(&original.flatten()?)?;
    let h_order = estimate(&order.sequence)?;
    let h_structure = estimate(&structure.flatten()?)?;
    debug_assert_eq!(h_original.n, h_order.n);
    debug_assert_eq!(h_original.n, h_structure.n);

    Ok(assemble(book, replicate, seeds, &h_original, &h_order, &h_structure))
}

fn assemble(
    book: &Book,
    replicate: u32,
    seeds: ReplicateSeeds,
    original: &EntropyEstimate,
    order: &EntropyEstimate,
    structure: &EntropyEstimate,
) -> BookMeasurement {
    BookMeasurement {
        translation_id: book.translation_id.clone(),
        language: book.language.clone(),
        book_id: book.book_id,
        replicate,
        n: original.n,
        h_original: original.h_bpc,
        h_order: order.h_bpc,
        h_structure: structure.h_bpc,
        d_order: order.h_bpc - original.h_bpc,
        d_structure: structure.h_bpc - original.h_bpc,
        seeds,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupBy {
    Translation,
    #[default]
    Language,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateMeasurement {
    /// Translation id or language code, depending on the grouping.
    pub key: String,
    pub book_id: u32,
    pub d_order_mean: f64,
    pub d_order_std: Option<f64>,
    pub d_structure_mean: f64,
    pub d_structure_std: Option<f64>,
    /// Items averaged in the last stage: replicates for translation grouping,
    /// translations for language grouping.
    pub count: usize,
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    d_order: f64,
    d_structure: f64,
}

fn mean_std(xs: &[f64]) -> (f64, Option<f64>) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let std = (xs.len() > 1).then(|| {
        let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
        (ss / (n - 1.0)).sqrt()
    });
    (mean, std)
}

fn summarize(key: String, book_id: u32, items: &[Pair]) -> AggregateMeasurement {
    let (o, os) = mean_std(&items.iter().map(|p| p.d_order).collect::<Vec<_>>());
    let (s, ss) = mean_std(&items.iter().map(|p| p.d_structure).collect::<Vec<_>>());
    AggregateMeasurement {
        key,
        book_id,
        d_order_mean: o,
        d_order_std: os,
        d_structure_mean: s,
        d_structure_std: ss,
        count: items.len(),
    }
}

/// Unweighted means per group and book. Replicates are averaged per
/// translation first; language grouping then averages translations.
/// Output is sorted by (key, book_id) and does not depend on input order.
pub fn aggregate(measurements: &[BookMeasurement], group_by: GroupBy) -> Result<Vec<AggregateMeasurement>> {
    if measurements.is_empty() {
        return Err(Error::InsufficientData("no measurements to aggregate".into()));
    }
    let mut sorted: Vec<&BookMeasurement> = measurements.iter().collect();
    sorted.sort_by(|a, b| {
        (&a.translation_id, a.book_id, a.replicate)
            .cmp(&(&b.translation_id, b.book_id, b.replicate))
            .then(a.d_order.total_cmp(&b.d_order))
            .then(a.d_structure.total_cmp(&b.d_structure))
    });

    let mut per_translation: BTreeMap<(String, u32), (String, Vec<Pair>)> = BTreeMap::new();
    for m in sorted {
        per_translation
            .entry((m.translation_id.clone(), m.book_id))
            .or_insert_with(|| (m.language.clone(), Vec::new()))
            .1
            .push(Pair {
                d_order: m.d_order,
                d_structure: m.d_structure,
            });
    }

    let translation_rows: Vec<(String, AggregateMeasurement)> = per_translation
        .into_iter()
        .map(|((tid, book), (lang, items))| (lang, summarize(tid, book, &items)))
        .collect();

    match group_by {
        GroupBy::Translation => Ok(translation_rows.into_iter().map(|(_, a)| a).collect()),
        GroupBy::Language => {
            let mut per_language: BTreeMap<(String, u32), Vec<Pair>> = BTreeMap::new();
            for (lang, a) in translation_rows {
                per_language.entry((lang, a.book_id)).or_default().push(Pair {
                    d_order: a.d_order_mean,
                    d_structure: a.d_structure_mean,
                });
            }
            Ok(per_language
                .into_iter()
                .map(|((lang, book), items)| summarize(lang, book, &items))
                .collect())
        }
    }
}

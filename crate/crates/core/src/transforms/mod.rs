//! Destructive book transforms: verse shuffling, word-order destruction and
//! word-structure masking.
//!
//! Every transform is a pure function of its input and a 64-bit seed (see
//! [`seed::derive_seed`]); the same seed always yields the same bytes.

pub mod rng;
pub mod seed;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::{Book, SymbolSequence};
use crate::error::{Error, Result};

pub use rng::XorShift64Star;
pub use seed::{derive_seed, Purpose, SeedSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderScope {
    /// Tokens permuted independently inside each verse.
    #[default]
    Verse,
    /// All tokens of the book permuted together, then poured back into the
    /// original per-verse token counts.
    Book,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantKind {
    Original,
    OrderDestroyed,
    StructureMasked,
}

#[derive(Debug, Clone)]
pub struct BookVariant {
    pub kind: VariantKind,
    pub book: Book,
    pub sequence: SymbolSequence,
    pub seeds: Vec<(Purpose, u64)>,
    pub mask: Option<MaskTable>,
}

impl BookVariant {
    fn new(kind: VariantKind, book: Book, seeds: Vec<(Purpose, u64)>) -> Result<Self> {
        let sequence = book.flatten()?;
        Ok(Self {
            kind,
            book,
            sequence,
            seeds,
            mask: None,
        })
    }

    pub fn original(book: &Book) -> Result<Self> {
        Self::new(VariantKind::Original, book.clone(), Vec::new())
    }
}

/// Returns the verse permutation a seed induces on `n` verses: output
/// position `k` holds input verse `perm[k]`.
pub fn verse_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    XorShift64Star::new(seed).shuffle(&mut perm);
    perm
}

/// Applies a permutation from [`verse_permutation`] to a book's verses.
pub fn permute_verses(book: &Book, perm: &[usize]) -> Book {
    assert_eq!(perm.len(), book.verses.len(), "permutation length");
    book.with_verses(perm.iter().map(|&i| book.verses[i].clone()).collect())
}

pub fn shuffle_verses(book: &Book, seed: u64) -> Result<Book> {
    if book.is_empty() {
        return Err(Error::EmptyBook(book.book_id));
    }
    Ok(permute_verses(book, &verse_permutation(book.verses.len(), seed)))
}

/// Permutes word tokens while leaving every token intact. Verses are visited
/// in their current order and all draws come from one generator seeded with
/// `seed`.
pub fn destroy_word_order(book: &Book, seed: u64, scope: OrderScope) -> Result<BookVariant> {
    if book.is_empty() {
        return Err(Error::EmptyBook(book.book_id));
    }
    let mut rng = XorShift64Star::new(seed);
    let verses = match scope {
        OrderScope::Verse => book
            .verses
            .iter()
            .map(|v| {
                let mut toks: Vec<&str> = v.tokens().collect();
                rng.shuffle(&mut toks);
                v.with_text(toks.join(" "))
            })
            .collect(),
        OrderScope::Book => {
            let mut toks: Vec<&str> = book.tokens().collect();
            rng.shuffle(&mut toks);
            let mut rest = toks.as_slice();
            book.verses
                .iter()
                .map(|v| {
                    let (head, tail) = rest.split_at(v.tokens().count());
                    rest = tail;
                    v.with_text(head.join(" "))
                })
                .collect()
        }
    };
    BookVariant::new(
        VariantKind::OrderDestroyed,
        book.with_verses(verses),
        vec![(Purpose::OrderShuffle, seed)],
    )
}

/// Word type -> random replacement of the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskTable {
    masks: BTreeMap<String, String>,
    alphabet: Vec<char>,
}

impl MaskTable {
    pub fn get(&self, word: &str) -> Option<&str> {
        self.masks.get(word).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.masks.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Characters the masks were drawn from, sorted.
    pub fn mask_alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// The table mapping masks back to the words they replaced.
    pub fn inverse(&self) -> MaskTable {
        MaskTable {
            masks: self.masks.iter().map(|(k, v)| (v.clone(), k.clone())).collect(),
            alphabet: self.alphabet.clone(),
        }
    }

    /// `type<TAB>mask` lines in lexicographic type order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.masks {
            let _ = writeln!(out, "{k}\t{v}");
        }
        out
    }
}

fn is_mask_char(c: char) -> bool {
    !c.is_whitespace() && !c.is_control()
}

/// Draws a distinct random mask for every word type of two or more
/// characters. Types are processed in lexicographic order; each mask is a
/// uniform string over the book's alphabet (whitespace and control characters
/// removed) redrawn until it differs from all masks assigned so far.
pub fn build_mask_table(
    lexicon: &BTreeMap<String, usize>,
    alphabet: &BTreeSet<char>,
    seed: u64,
) -> Result<MaskTable> {
    if lexicon.is_empty() {
        return Err(Error::InvalidArgument("empty lexicon".into()));
    }
    let mask_alphabet: Vec<char> = alphabet.iter().copied().filter(|&c| is_mask_char(c)).collect();

    let mut per_length: BTreeMap<usize, usize> = BTreeMap::new();
    for word in lexicon.keys() {
        let len = word.chars().count();
        if len >= 2 {
            *per_length.entry(len).or_insert(0) += 1;
        }
    }
    for (&length, &types) in &per_length {
        let available = capacity(mask_alphabet.len(), length);
        if available < types as u128 {
            return Err(Error::MaskSpaceExhausted {
                length,
                types,
                available,
                alphabet: mask_alphabet.len(),
            });
        }
    }

    let mut rng = XorShift64Star::new(seed);
    let mut used = HashSet::new();
    let mut masks = BTreeMap::new();
    let k = mask_alphabet.len() as u64;
    for word in lexicon.keys() {
        let len = word.chars().count();
        if len < 2 {
            continue;
        }
        let mask = loop {
            let candidate: String = (0..len)
                .map(|_| mask_alphabet[rng.below(k) as usize])
                .collect();
            if used.insert(candidate.clone()) {
                break candidate;
            }
        };
        masks.insert(word.clone(), mask);
    }
    Ok(MaskTable {
        masks,
        alphabet: mask_alphabet,
    })
}

/// `k^len`, saturating.
fn capacity(k: usize, len: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..len {
        acc = acc.saturating_mul(k as u128);
    }
    acc
}

/// Replaces every token of two or more characters by its mask.
pub fn mask_word_structure(book: &Book, table: &MaskTable) -> Result<BookVariant> {
    let verses = book
        .verses
        .iter()
        .map(|v| {
            let toks = v
                .tokens()
                .map(|t| {
                    if t.chars().nth(1).is_none() {
                        Ok(t)
                    } else {
                        table.get(t).ok_or_else(|| Error::MissingMask(t.to_string()))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(v.with_text(toks.join(" ")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut variant = BookVariant::new(VariantKind::StructureMasked, book.with_verses(verses), Vec::new())?;
    variant.mask = Some(table.clone());
    Ok(variant)
}

/// Builds a mask table from the book's own lexicon and alphabet and applies it.
pub fn mask_book(book: &Book, seed: u64) -> Result<BookVariant> {
    let seq = book.flatten()?;
    let table = build_mask_table(seq.lexicon(), seq.alphabet(), seed)?;
    let mut variant = mask_word_structure(book, &table)?;
    variant.seeds.push((Purpose::MaskDraw, seed));
    Ok(variant)
}

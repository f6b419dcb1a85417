//! Verse-aligned corpora: parsing, books, flattened symbol sequences and the
//! constant-length truncation used for inter-book comparisons.
//!
//! Two line formats are understood, both UTF-8 with `#` comment lines:
//!
//! * PBC: `BBCCCVVV<TAB>text`, an 8-digit id of book (2 digits), chapter (3)
//!   and verse (3).
//! * TSV: `book<TAB>chapter<TAB>verse<TAB>text`.
//!
//! Comment lines of the form `# key: value` are kept as provenance metadata.
//! Verse text is expected to be tokenized already (tokens separated by
//! spaces); runs of whitespace are collapsed to a single space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VerseRef {
    pub book: u32,
    pub chapter: u32,
    pub verse: u32,
}

impl VerseRef {
    pub fn new(book: u32, chapter: u32, verse: u32) -> Self {
        Self {
            book,
            chapter,
            verse,
        }
    }
}

impl fmt::Display for VerseRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.book, self.chapter, self.verse)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verse {
    pub reference: VerseRef,
    text: String,
}

impl Verse {
    /// Builds a verse, collapsing whitespace runs (including newlines) to
    /// single spaces. Returns `None` if nothing but whitespace remains.
    pub fn new(reference: VerseRef, text: &str) -> Option<Self> {
        let text = normalize_ws(text);
        if text.is_empty() {
            None
        } else {
            Some(Self { reference, text })
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.text.split(' ')
    }

    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    /// Replaces the text, keeping the reference. The caller guarantees the
    /// new text is normalized and nonempty.
    pub(crate) fn with_text(&self, text: String) -> Self {
        debug_assert!(!text.is_empty() && normalize_ws(&text) == text);
        Self {
            reference: self.reference,
            text,
        }
    }
}

fn normalize_ws(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Book {
    pub book_id: u32,
    pub translation_id: String,
    pub language: String,
    /// Canonical (sorted) order unless the book was produced by a verse shuffle.
    pub verses: Vec<Verse>,
}

impl Book {
    pub fn new(
        book_id: u32,
        translation_id: impl Into<String>,
        language: impl Into<String>,
        mut verses: Vec<Verse>,
    ) -> Self {
        verses.sort_by_key(|v| v.reference);
        Self {
            book_id,
            translation_id: translation_id.into(),
            language: language.into(),
            verses,
        }
    }

    /// Convenience constructor numbering the given texts as chapter 1,
    /// verses 1..; empty texts are dropped.
    pub fn from_texts<S: AsRef<str>>(
        book_id: u32,
        translation_id: &str,
        language: &str,
        texts: &[S],
    ) -> Self {
        let verses = texts
            .iter()
            .enumerate()
            .filter_map(|(i, t)| Verse::new(VerseRef::new(book_id, 1, i as u32 + 1), t.as_ref()))
            .collect();
        Self::new(book_id, translation_id, language, verses)
    }

    pub fn is_empty(&self) -> bool {
        self.verses.is_empty()
    }

    /// Length of the flattened book in characters, separators included.
    pub fn char_len(&self) -> usize {
        let chars: usize = self.verses.iter().map(Verse::char_len).sum();
        chars + self.verses.len().saturating_sub(1)
    }

    pub fn token_count(&self) -> usize {
        self.verses.iter().map(|v| v.tokens().count()).sum()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.verses.iter().flat_map(Verse::tokens)
    }

    /// The book as one string, verses joined by a single space.
    pub fn text(&self) -> String {
        let mut out = String::with_capacity(self.char_len());
        for (i, v) in self.verses.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(v.text());
        }
        out
    }

    pub fn flatten(&self) -> Result<SymbolSequence> {
        if self.is_empty() {
            return Err(Error::EmptyBook(self.book_id));
        }
        Ok(SymbolSequence::from_text(&self.text()))
    }

    pub(crate) fn with_verses(&self, verses: Vec<Verse>) -> Self {
        Self {
            book_id: self.book_id,
            translation_id: self.translation_id.clone(),
            language: self.language.clone(),
            verses,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Pbc,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pbc" => Ok(Format::Pbc),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Pbc => "pbc",
            Format::Tsv => "tsv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Provenance {
    pub source: Option<String>,
    pub format: Option<Format>,
    /// `# key: value` comment lines in file order.
    pub metadata: Vec<(String, String)>,
    /// Data lines whose text was empty (verses absent from the translation).
    pub skipped_empty: usize,
}

impl Provenance {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(key))
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub translation_id: String,
    pub language: String,
    pub books: BTreeMap<u32, Book>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Language code to use when the header does not declare one.
    pub language: Option<String>,
    /// Apply Unicode default lowercasing to verse text.
    pub lowercase: bool,
}

/// Header keys consulted, in order, for the ISO 639-3 language code.
const LANGUAGE_KEYS: [&str; 4] = ["closest_iso_639-3", "iso_639-3", "iso639-3", "language_code"];

pub fn parse_corpus(
    input: &[u8],
    format: Format,
    translation_id: &str,
    opts: &ParseOptions,
) -> Result<Translation> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let line = input[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::MalformedLine {
            line,
            reason: "invalid UTF-8".into(),
        }
    })?;
    parse_str(text, format, translation_id, opts)
}

pub fn parse_str(
    text: &str,
    format: Format,
    translation_id: &str,
    opts: &ParseOptions,
) -> Result<Translation> {
    let mut provenance = Provenance {
        format: Some(format),
        ..Default::default()
    };
    let mut seen = BTreeSet::new();
    let mut by_book: BTreeMap<u32, Vec<Verse>> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            provenance.metadata.push(parse_comment(comment));
            continue;
        }
        let (reference, body) = match format {
            Format::Pbc => parse_pbc_line(line),
            Format::Tsv => parse_tsv_line(line),
        }
        .map_err(|reason| Error::MalformedLine {
            line: lineno,
            reason,
        })?;
        if !seen.insert(reference) {
            return Err(Error::DuplicateVerse(reference));
        }
        let body = if opts.lowercase {
            body.to_lowercase()
        } else {
            body.to_string()
        };
        match Verse::new(reference, &body) {
            Some(v) => by_book.entry(reference.book).or_default().push(v),
            None => provenance.skipped_empty += 1,
        }
    }

    if by_book.is_empty() {
        return Err(Error::EmptyInput);
    }

    let language = LANGUAGE_KEYS
        .iter()
        .find_map(|k| provenance.get(k))
        .map(str::to_string)
        .or_else(|| opts.language.clone())
        .unwrap_or_else(|| "und".to_string());

    let books = by_book
        .into_iter()
        .map(|(id, verses)| (id, Book::new(id, translation_id, language.clone(), verses)))
        .collect();

    Ok(Translation {
        translation_id: translation_id.to_string(),
        language,
        books,
        provenance,
    })
}

fn parse_comment(comment: &str) -> (String, String) {
    match comment.split_once(':') {
        Some((k, v)) => (
            k.trim().replace(' ', "_").to_lowercase(),
            v.trim().to_string(),
        ),
        None => (String::new(), comment.trim().to_string()),
    }
}

fn parse_pbc_line(line: &str) -> std::result::Result<(VerseRef, &str), String> {
    let (id, text) = line
        .split_once('\t')
        .ok_or_else(|| "expected <id><TAB><text>".to_string())?;
    let id = id.trim();
    if id.len() != 8 || !id.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("verse id {id:?} is not 8 digits"));
    }
    let num = |r: std::ops::Range<usize>| id[r].parse::<u32>().expect("checked digits");
    let reference = VerseRef::new(num(0..2), num(2..5), num(5..8));
    check_ref(reference)?;
    Ok((reference, text))
}

fn parse_tsv_line(line: &str) -> std::result::Result<(VerseRef, &str), String> {
    let mut parts = line.splitn(4, '\t');
    let mut field = |name: &str| -> std::result::Result<u32, String> {
        let raw = parts
            .next()
            .ok_or_else(|| format!("missing {name} field"))?;
        raw.trim()
            .parse::<u32>()
            .map_err(|_| format!("{name} {raw:?} is not a non-negative integer"))
    };
    let book = field("book")?;
    let chapter = field("chapter")?;
    let verse = field("verse")?;
    let text = parts.next().ok_or_else(|| "missing text field".to_string())?;
    let reference = VerseRef::new(book, chapter, verse);
    check_ref(reference)?;
    Ok((reference, text))
}

fn check_ref(r: VerseRef) -> std::result::Result<(), String> {
    if r.chapter == 0 || r.verse == 0 {
        Err(format!("chapter and verse must be >= 1 in {r}"))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub books: Vec<Book>,
    pub missing: Vec<u32>,
}

/// Picks the requested books (in the order requested, duplicates removed) and
/// reports which ones the translation lacks.
pub fn select_books(translation: &Translation, ids: &[u32]) -> Result<Selection> {
    if ids.is_empty() {
        return Err(Error::NoBooksRequested);
    }
    let mut books = Vec::new();
    let mut missing = Vec::new();
    let mut seen = BTreeSet::new();
    for &id in ids {
        if !seen.insert(id) {
            continue;
        }
        match translation.books.get(&id) {
            Some(b) => books.push(b.clone()),
            None => missing.push(id),
        }
    }
    Ok(Selection { books, missing })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    /// Cut at the last token boundary not exceeding the target.
    #[default]
    Token,
    /// Cut at exactly the target character (minus a trailing separator).
    Character,
}

/// Truncates every book to the flattened length of the shortest one.
pub fn truncate_books(books: &[Book], granularity: Granularity) -> Result<Vec<Book>> {
    if books.len() < 2 {
        return Err(Error::TooFewBooks(books.len()));
    }
    if let Some(b) = books.iter().find(|b| b.is_empty()) {
        return Err(Error::EmptyBook(b.book_id));
    }
    let target = books.iter().map(Book::char_len).min().expect("nonempty");
    Ok(books
        .iter()
        .map(|b| truncate_to(b, target, granularity))
        .collect())
}

/// Cuts `book` so its flattened length is at most `target` characters,
/// keeping verses in their current order.
pub fn truncate_to(book: &Book, target: usize, granularity: Granularity) -> Book {
    if book.char_len() <= target {
        return book.clone();
    }
    let mut kept = Vec::new();
    let mut used = 0usize;
    for verse in &book.verses {
        let sep = usize::from(!kept.is_empty());
        let len = verse.char_len();
        if used + sep + len <= target {
            used += sep + len;
            kept.push(verse.clone());
            continue;
        }
        let budget = target.saturating_sub(used + sep);
        let partial = match granularity {
            Granularity::Token => {
                let mut text = String::new();
                let mut text_len = 0;
                for tok in verse.tokens() {
                    let tok_len = tok.chars().count();
                    let extra = tok_len + usize::from(text_len > 0);
                    if text_len + extra > budget {
                        break;
                    }
                    if text_len > 0 {
                        text.push(' ');
                    }
                    text.push_str(tok);
                    text_len += extra;
                }
                text
            }
            Granularity::Character => {
                let cut: String = verse.text().chars().take(budget).collect();
                cut.trim_end_matches(' ').to_string()
            }
        };
        if !partial.is_empty() {
            kept.push(verse.with_text(partial));
        }
        break;
    }
    book.with_verses(kept)
}

/// A book rendered as a flat character sequence together with its alphabet
/// and lexicon of space-separated word types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence {
    chars: Vec<char>,
    alphabet: BTreeSet<char>,
    lexicon: BTreeMap<String, usize>,
}

impl SymbolSequence {
    pub fn from_text(text: &str) -> Self {
        Self::from_chars(text.chars().collect())
    }

    pub fn from_chars(chars: Vec<char>) -> Self {
        let alphabet = chars.iter().copied().collect();
        let mut lexicon = BTreeMap::new();
        let mut cur = String::new();
        for &c in chars.iter().chain(std::iter::once(&' ')) {
            if c == ' ' {
                if !cur.is_empty() {
                    *lexicon.entry(std::mem::take(&mut cur)).or_insert(0) += 1;
                }
            } else {
                cur.push(c);
            }
        }
        Self {
            chars,
            alphabet,
            lexicon,
        }
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Word type -> token count.
    pub fn lexicon(&self) -> &BTreeMap<String, usize> {
        &self.lexicon
    }

    pub fn token_count(&self) -> usize {
        self.lexicon.values().sum()
    }

    pub fn as_string(&self) -> String {
        self.chars.iter().collect()
    }
}

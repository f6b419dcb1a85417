use std::collections::BTreeMap;

use lexorder_core::corpus::Book;
use lexorder_core::transforms::{destroy_word_order, mask_book, mask_word_structure, shuffle_verses, OrderScope};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    prop_oneof![
        3 => "[a-h]{1,3}",
        2 => "[a-z]{2,9}",
        1 => "[.,;]",
        1 => "[äöüß]{1,4}",
    ]
}

fn book() -> impl Strategy<Value = Book> {
    prop::collection::vec(prop::collection::vec(word(), 1..12), 1..15).prop_map(|verses| {
        let texts: Vec<String> = verses.iter().map(|v| v.join(" ")).collect();
        Book::from_texts(40, "p", "und", &texts)
    })
}

fn spectrum(b: &Book) -> Vec<usize> {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for t in b.tokens() {
        *counts.entry(t).or_default() += 1;
    }
    let mut freq: Vec<usize> = counts.into_values().collect();
    freq.sort_unstable();
    freq
}

fn token_lengths(b: &Book) -> Vec<usize> {
    b.tokens().map(|t| t.chars().count()).collect()
}

fn sorted<'a>(it: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut v: Vec<_> = it.collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn masking_preserves_counts_lengths_and_spectrum(b in book(), seed in any::<u64>()) {
        let masked = match mask_book(&b, seed) {
            Ok(m) => m,
            Err(lexorder_core::Error::MaskSpaceExhausted { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(masked.sequence.len(), b.char_len());
        prop_assert_eq!(masked.book.token_count(), b.token_count());
        prop_assert_eq!(token_lengths(&masked.book), token_lengths(&b));
        prop_assert_eq!(spectrum(&masked.book), spectrum(&b));
        for (orig, new) in b.tokens().zip(masked.book.tokens()) {
            if orig.chars().count() == 1 {
                prop_assert_eq!(orig, new);
            }
        }
        let table = masked.mask.as_ref().unwrap();
        let inverse = table.inverse();
        prop_assert_eq!(inverse.len(), table.len());
        prop_assert_eq!(mask_word_structure(&masked.book, &inverse).unwrap().book, b.clone());
        prop_assert_eq!(mask_book(&b, seed).unwrap().book, masked.book);
    }

    #[test]
    fn order_destruction_preserves_verse_bags(b in book(), seed in any::<u64>()) {
        let v = destroy_word_order(&b, seed, OrderScope::Verse).unwrap();
        prop_assert_eq!(v.sequence.len(), b.char_len());
        prop_assert_eq!(v.book.verses.len(), b.verses.len());
        for (x, y) in b.verses.iter().zip(&v.book.verses) {
            prop_assert_eq!(sorted(x.tokens()), sorted(y.tokens()));
        }
        let w = destroy_word_order(&b, seed, OrderScope::Book).unwrap();
        prop_assert_eq!(w.sequence.len(), b.char_len());
        prop_assert_eq!(sorted(w.book.tokens()), sorted(b.tokens()));
        prop_assert_eq!(destroy_word_order(&b, seed, OrderScope::Verse).unwrap().book, v.book);
    }

    #[test]
    fn verse_shuffle_is_permutation(b in book(), seed in any::<u64>()) {
        let s = shuffle_verses(&b, seed).unwrap();
        prop_assert_eq!(s.char_len(), b.char_len());
        prop_assert_eq!(sorted(s.verses.iter().map(|v| v.text())), sorted(b.verses.iter().map(|v| v.text())));
    }

    #[test]
    fn flatten_round_trips_tokens(b in book()) {
        let seq = b.flatten().unwrap();
        let text = seq.as_string();
        let re: Vec<&str> = text.split(' ').collect();
        let orig: Vec<&str> = b.tokens().collect();
        prop_assert_eq!(re, orig);
        prop_assert_eq!(seq.token_count(), b.token_count());
        prop_assert_eq!(seq.alphabet().len() >= 2, text.chars().collect::<std::collections::BTreeSet<_>>().len() >= 2);
    }
}

#[test]
fn word_bigrams_generally_change() {
    let texts = ["the quick brown fox jumps over the lazy dog"; 20];
    let b = Book::from_texts(40, "t", "eng", &texts);
    let v = destroy_word_order(&b, 1, OrderScope::Verse).unwrap();
    assert_ne!(v.book.text(), b.text());
}

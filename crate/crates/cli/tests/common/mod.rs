#![allow(dead_code)]

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lexorder_core::transforms::XorShift64Star;

pub const SIX: [u32; 6] = [40, 41, 42, 43, 44, 66];

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lexorder"))
}

pub fn run(args: &[&str]) -> Output {
    let out = bin().args(args).output().expect("spawn lexorder");
    if std::env::var_os("LEXORDER_TEST_VERBOSE").is_some() {
        eprintln!("{}", String::from_utf8_lossy(&out.stderr));
    }
    out
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// A small PBC file: `verses` verses of random words for each book.
pub fn pbc_text(language: &str, books: &[u32], verses: u32, seed: u64) -> String {
    let mut rng = XorShift64Star::new(seed);
    let letters: Vec<char> = "abcdefghiklmnoprstuy".chars().collect();
    let vocab: Vec<String> = (0..80)
        .map(|_| {
            let len = 1 + rng.below(7) as usize;
            (0..len).map(|_| letters[rng.below(letters.len() as u64) as usize]).collect()
        })
        .collect();
    let mut s = format!("# language_name: Test\n# iso_639-3: {language}\n");
    for &b in books {
        for v in 1..=verses {
            let n = 4 + rng.below(8);
            let words: Vec<&str> = (0..n)
                .map(|_| {
                    // skewed draw so the text has some redundancy
                    let a = rng.below(vocab.len() as u64);
                    let b = rng.below(vocab.len() as u64);
                    vocab[a.min(b) as usize].as_str()
                })
                .collect();
            writeln!(s, "{b:02}{:03}{v:03}\t{}", 1 + (v - 1) / 20, words.join(" ")).unwrap();
        }
    }
    s
}

pub fn write_corpus(dir: &Path, tid: &str, language: &str, books: &[u32], seed: u64) -> PathBuf {
    let path = dir.join(format!("{tid}.txt"));
    std::fs::write(&path, pbc_text(language, books, 40, seed)).unwrap();
    path
}

pub fn lines(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .map(str::to_string)
        .collect()
}

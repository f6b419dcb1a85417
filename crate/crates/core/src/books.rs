//! Canonical book numbering used by the Parallel Bible Corpus.
//!
//! Books 1..=39 are the Old Testament and 40..=66 the New Testament, in the
//! usual Protestant order. The default analysis set is the four gospels, Acts
//! and Revelation.

pub const MATTHEW: u32 = 40;
pub const MARK: u32 = 41;
pub const LUKE: u32 = 42;
pub const JOHN: u32 = 43;
pub const ACTS: u32 = 44;
pub const REVELATION: u32 = 66;

/// The six books analysed by default, in canonical order.
pub const DEFAULT_BOOKS: [u32; 6] = [MATTHEW, MARK, LUKE, JOHN, ACTS, REVELATION];

const NAMES: [&str; 66] = [
    "Genesis",
    "Exodus",
    "Leviticus",
    "Numbers",
    "Deuteronomy",
    "Joshua",
    "Judges",
    "Ruth",
    "1 Samuel",
    "2 Samuel",
    "1 Kings",
    "2 Kings",
    "1 Chronicles",
    "2 Chronicles",
    "Ezra",
    "Nehemiah",
    "Esther",
    "Job",
    "Psalms",
    "Proverbs",
    "Ecclesiastes",
    "Song of Solomon",
    "Isaiah",
    "Jeremiah",
    "Lamentations",
    "Ezekiel",
    "Daniel",
    "Hosea",
    "Joel",
    "Amos",
    "Obadiah",
    "Jonah",
    "Micah",
    "Nahum",
    "Habakkuk",
    "Zephaniah",
    "Haggai",
    "Zechariah",
    "Malachi",
    "Matthew",
    "Mark",
    "Luke",
    "John",
    "Acts",
    "Romans",
    "1 Corinthians",
    "2 Corinthians",
    "Galatians",
    "Ephesians",
    "Philippians",
    "Colossians",
    "1 Thessalonians",
    "2 Thessalonians",
    "1 Timothy",
    "2 Timothy",
    "Titus",
    "Philemon",
    "Hebrews",
    "James",
    "1 Peter",
    "2 Peter",
    "1 John",
    "2 John",
    "3 John",
    "Jude",
    "Revelation",
];

pub fn name(book_id: u32) -> Option<&'static str> {
    let idx = usize::try_from(book_id).ok()?.checked_sub(1)?;
    NAMES.get(idx).copied()
}

/// Short label used in correlation-matrix headers.
pub fn abbrev(book_id: u32) -> String {
    match book_id {
        MATTHEW => "Mt".into(),
        MARK => "Mr".into(),
        LUKE => "Lk".into(),
        JOHN => "Jn".into(),
        ACTS => "Ac".into(),
        REVELATION => "Re".into(),
        other => format!("b{other}"),
    }
}

/// Parses a book given either as a number or as an English name/abbreviation.
pub fn parse(s: &str) -> Option<u32> {
    let s = s.trim();
    if let Ok(id) = s.parse::<u32>() {
        return Some(id);
    }
    let lower = s.to_lowercase();
    match lower.as_str() {
        "mt" | "matt" => return Some(MATTHEW),
        "mr" | "mk" => return Some(MARK),
        "lk" => return Some(LUKE),
        "jn" | "joh" => return Some(JOHN),
        "ac" => return Some(ACTS),
        "re" | "rev" => return Some(REVELATION),
        _ => {}
    }
    NAMES
        .iter()
        .position(|n| n.to_lowercase() == lower)
        .map(|i| i as u32 + 1)
}

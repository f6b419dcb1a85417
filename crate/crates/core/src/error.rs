use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("duplicate verse {0}")]
    DuplicateVerse(crate::corpus::VerseRef),

    #[error("input contains no verses")]
    EmptyInput,

    #[error("book {0} has no verses")]
    EmptyBook(u32),

    #[error("empty symbol sequence")]
    EmptySequence,

    #[error("no books requested")]
    NoBooksRequested,

    #[error("truncation needs at least two books, got {0}")]
    TooFewBooks(usize),

    #[error(
        "mask space exhausted for length {length}: {types} types but only \
         {available} distinct strings over a {alphabet}-character mask alphabet"
    )]
    MaskSpaceExhausted {
        length: usize,
        types: usize,
        available: u128,
        alphabet: usize,
    },

    #[error("token {0:?} has no entry in the mask table")]
    MissingMask(String),

    #[error("vectors differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("need at least {need} observations, got {got}")]
    TooFewObservations { need: usize, got: usize },

    #[error("input has zero variance")]
    ZeroVariance,

    #[error("ranks contain ties")]
    TiedRanks,

    #[error("exact permutation test limited to n <= {max}, got {n}; use a sampled test instead")]
    PermutationTooLarge { n: usize, max: usize },

    #[error("point {index} has d_order = 0; the reciprocal regressor is undefined there")]
    ZeroRegressor { index: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("affix {affix:?} collides with the ending of root {root:?}")]
    AffixCollision { affix: String, root: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

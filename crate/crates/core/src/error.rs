use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry out of range or row/column not a permutation at cell ({row}, {col})")]
    NotClosed { row: usize, col: usize },
    #[error("index 0 is not the identity at cell ({row}, {col})")]
    NoIdentityAtZero { row: usize, col: usize },
    #[error("associativity fails for ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("group too large: {0}")]
    TooLarge(String),
    #[error("subset is not a normal subgroup")]
    NotNormal,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("mapping is not an isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("time budget exhausted")]
    Timeout,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
    #[error("arity {0} exceeds the configured maximum {1}")]
    ArityTooLarge(usize, usize),
    #[error("dimension {0} is too small")]
    DimensionTooSmall(usize),
    #[error("tuple budget exceeded: {cells} cells requested, budget {budget}")]
    Budget { cells: u128, budget: u64 },
    #[error("operation requires a non-abelian group")]
    AbelianInput,
    #[error("filtration step {step} ascends on neither side of the decomposition")]
    DecompositionMismatch { step: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to parse instance document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("instance must have n >= 1")]
    EmptyInstance,
    #[error("declared n = {declared} but weight matrix has {rows} rows")]
    RowCount { declared: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("weight at ({x}, {y}) is negative: {value}")]
    NegativeWeight { x: usize, y: usize, value: f64 },
    #[error("weight at ({x}, {y}) is not finite")]
    NonFiniteWeight { x: usize, y: usize },
    #[error("invalid alpha {0}: must be a number in [0, 1]")]
    InvalidAlpha(String),
    #[error("alpha {alpha} outside the range [{lo}, {hi}] accepted by {algorithm}")]
    AlphaOutOfRange { algorithm: &'static str, alpha: f64, lo: f64, hi: f64 },
    #[error("index {index} out of range for instance of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("agent {side}{index} appears in more than one pair")]
    DuplicateEndpoint { side: char, index: usize },
    #[error("information budget exceeded: {0}")]
    Budget(#[from] BudgetViolation),
    #[error("k = {k} exceeds what the information budget supports ({max})")]
    KTooLarge { k: usize, max: usize },
    #[error("instance size {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid generator parameters: {0}")]
    Generator(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A query that reached past what a view is allowed to reveal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetViolation {
    #[error("rank {rank} requested from a preference list of depth {depth}")]
    Rank { rank: usize, depth: usize },
    #[error("position {position} requested from a ranked prefix of length {len}")]
    Prefix { position: usize, len: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

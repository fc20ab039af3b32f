use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<usize>,
        reason: &'static str,
    },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid permutation {0:?}: not a bijection on 0..n")]
    InvalidPermutation(Vec<usize>),

    #[error("letter {letter} is not in the alphabet with k={k}, l={l}")]
    LetterOutOfRange { letter: String, k: usize, l: usize },

    #[error("resource limit exceeded: {what} is {value}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    /// Two independent computations of the same quantity disagreed.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("configuration: {0}")]
    Config(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

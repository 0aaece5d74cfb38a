use qtarith::QtError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a packed word: {0}")]
    NotPacked(String),
    #[error("signed word is not regular: {0}")]
    NotRegular(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("half-products are only defined on nonempty arguments")]
    EmptyArgument,
    #[error("{finer} is not finer than {coarser}")]
    NotFiner { finer: String, coarser: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Arith(#[from] QtError),
    #[error("degree bound {max} is below the size {size} of the key")]
    DegreeBound { size: usize, max: usize },
    #[error("alphabets of {0} and {1} intersect")]
    SharedLetters(String, String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

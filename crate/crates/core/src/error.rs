use thiserror::Error;

/// Errors raised by braid computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at token {position} ({token:?}): {reason}")]
    Syntax {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("generator index {index} needs at least {} strands, have {strands}", index.unsigned_abs() + 1)]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("strand count must be at least 1")]
    NoStrands,

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word is not positive")]
    NotPositive,

    #[error("strands {first} and {second} cross twice, so the word is not simple")]
    NotSimple { first: usize, second: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("the last strand does not end in its starting position")]
    LastStrandMoves,

    #[error("handle reduction did not finish within {fuel} steps")]
    FuelExhausted { fuel: u64 },

    #[error("sliding circuit set exceeded the cap of {cap} vertices")]
    VertexCapExceeded { cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;

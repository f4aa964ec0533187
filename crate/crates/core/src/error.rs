//! Error type shared by every module.

use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SboError {
    #[error("gamma pole: argument {0} is a nonpositive integer")]
    Pole(String),

    #[error("index error: need 0 <= i <= n, got i={i}, n={n}")]
    Index { i: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("scale {0} is not a rational square and the polynomial has odd gaps")]
    IrrationalScale(String),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("series order {order} exceeds the limit {limit}")]
    OrderExceeded { order: usize, limit: usize },

    #[error("singular linear system")]
    Singular,

    #[error("solution is not polynomial in alpha ({0})")]
    NonPolynomialSolution(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("unit mismatch: {0} vs {1}")]
    UnitMismatch(String, String),

    #[error("could not separate roots after {0} refinement steps")]
    UnresolvedOverlap(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, SboError>;

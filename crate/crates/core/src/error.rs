use thiserror::Error;

use crate::base::{Color, Rank};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank ({m}|{n}): both parts must be positive")]
    InvalidRank { m: usize, n: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: Rank, right: Rank },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("partition {0:?} is not an (m|n)-hook partition")]
    HookViolation(Vec<usize>),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} does not correspond to a hook partition")]
    NotPolynomial(String),

    #[error("color {color} out of range for {context}")]
    ColorOutOfRange { color: Color, context: String },

    #[error("shape violation: {0}")]
    ShapeViolation(String),

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("insertion overflowed the rectangle at row {row}")]
    InsertionOverflow { row: usize },

    #[error("crystal has {cardinality} elements, above the cap of {cap}")]
    SizeCapExceeded { cardinality: u128, cap: u128 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("not in the image: {0}")]
    NotInImage(String),

    #[error("graphs are not isomorphic: {0}")]
    NotIsomorphic(String),

    #[error("graph has {0} source vertices, expected exactly one")]
    MultipleSources(usize),

    #[error("malformed hook tableau: {0}")]
    MalformedHookTableau(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

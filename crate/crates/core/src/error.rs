use thiserror::Error;

use crate::blocks::Violation;
use crate::combinatorics::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition {0:?} is not canonical: trailing zero part")]
    NonCanonicalComposition(Vec<u32>),

    #[error("{0:?} is not a partition: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("largest part {largest} exceeds bound {bound}")]
    BoundViolation { largest: u32, bound: u32 },

    #[error("letter {0} is invalid: value and flag must be positive")]
    InvalidLetter(Letter),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("tableau is not semistandard at row {row}, column {col}")]
    NotSemistandard { row: usize, col: usize },

    #[error("tableau shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("malformed biword: {0}")]
    MalformedBiword(String),

    #[error("letter {letter} in component {component} violates the flagging condition")]
    Flagging { component: usize, letter: Letter },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("level must be at least 1")]
    ZeroLevel,

    #[error("invalid block data: {}", format_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration budget out of range: {0}")]
    Budget(String),

    #[error("cannot convert {from} to {to}")]
    Unsupported { from: String, to: String },
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

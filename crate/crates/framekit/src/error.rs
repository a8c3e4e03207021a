//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value violates a precondition (dimension mismatch, empty input, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Input bytes are not well-formed JSON of the expected shape.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed JSON whose values violate the schema (wrong vector length,
    /// non-finite entry, zero dimension, ...).
    #[error("schema error: {0}")]
    Schema(String),
    /// An operator does not satisfy the hypothesis required by a transform
    /// rule (e.g. a rank-deficient operator passed with the frame rule).
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;

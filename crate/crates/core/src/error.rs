//! Error types shared across the kernel.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum KernelError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quotient is not artinian: {0}")]
    NotArtinian(String),

    #[error("presentation is not local-normalized: {0}")]
    NotLocalNormalized(String),

    #[error("kernel element is not annihilated by the maximal ideal: {0}")]
    NotAnnihilated(String),

    #[error("truncation degree exceeded: {0}")]
    TruncationExceeded(String),

    #[error("feasibility bound exceeded: {0}")]
    FeasibilityExceeded(String),

    #[error("sequence is not regular: {0}")]
    NotRegular(String),

    #[error("classes over different sequences: {0}")]
    SequenceMismatch(String),

    #[error("bidegree out of range: {0}")]
    BadBidegree(String),

    #[error("difference is not divisible by the extension kernel: {0}")]
    DivisionFailure(String),

    #[error("extension violates the injective-differential hypothesis: {0}")]
    HypothesisViolated(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, KernelError>;

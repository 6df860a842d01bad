use thiserror::Error;

/// Errors raised when validating or querying discrete distributions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("probabilities sum to {sum}, expected 1 within {tolerance}")]
    NonNormalized { sum: f64, tolerance: f64 },

    #[error("negative probability {value} at flat index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("distribution has no cells or zero total mass")]
    EmptyInput,

    #[error("alphabet sizes {dims:?} require {expected} cells, got {got}")]
    ShapeMismatch {
        dims: Vec<usize>,
        expected: usize,
        got: usize,
    },

    #[error("state {x} is outside the outcome alphabet of size {nx}")]
    StateOutOfRange { x: usize, nx: usize },

    #[error("outcome state {x} has zero probability")]
    ZeroProbabilityState { x: usize },

    #[error("outcome variable has zero entropy")]
    ZeroEntropyOutput,

    #[error("conditional mass on a zero-probability marginal cell (inconsistent joint)")]
    InconsistentJoint,

    #[error("cell line {line}: {reason}")]
    MalformedCellLine { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Failures while interpreting one raw hand. Line numbers are 1-based; when
/// a multi-hand stream is parsed they point into the whole stream.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },

    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: unknown action verb {verb:?}")]
    UnknownActionVerb { line: usize, verb: String },

    #[error("chip imbalance: {reason}")]
    ChipImbalance { reason: String },

    #[error("truncated hand: {reason}")]
    TruncatedHand { reason: String },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MalformedHeader { line, .. }
            | ParseError::MalformedLine { line, .. }
            | ParseError::UnknownActionVerb { line, .. } => Some(*line),
            _ => None,
        }
    }
}

/// Failures while reading the normalized line format.
#[derive(Debug, Error)]
pub enum NormalizedError {
    #[error("line {line}: {reason}")]
    SchemaMismatch { line: usize, reason: String },

    #[error("line {line}: bad record: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, ParseError>;

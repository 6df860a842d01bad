use thiserror::Error;

/// Failures produced while validating or running a simulation.
#[derive(Debug, Error)]
pub enum SimError {
    /// The configuration cannot produce a legal session.
    #[error("invalid simulation config: {reason}")]
    InvalidConfig { reason: String },
}

pub type Result<T> = std::result::Result<T, SimError>;

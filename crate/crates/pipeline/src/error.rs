use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("hand {hand_id} has {seats} seats, analysis needs exactly 2")]
    NonHeadsUpHand { hand_id: String, seats: usize },

    #[error("negative wager amount {amount}")]
    NegativeAmount { amount: i64 },

    #[error("no {scale} strength cutoff fitted for the {level_cents}-cent level")]
    MissingCutoff {
        level_cents: u64,
        scale: &'static str,
    },

    #[error("not enough data for {what} (have {have}, need {need})")]
    InsufficientData {
        what: String,
        have: usize,
        need: usize,
    },

    #[error("no observations to build a distribution from")]
    EmptyInput,

    #[error(transparent)]
    Info(#[from] infodecomp::Error),

    #[error(transparent)]
    Eval(#[from] handeval::Error),

    #[error(transparent)]
    Parse(#[from] handparse::ParseError),
}

pub type Result<T> = std::result::Result<T, PipelineError>;

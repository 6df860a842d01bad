use crate::card::Card;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank {rank} outside 2..=14")]
    InvalidRank { rank: u8 },

    #[error("not a card: {text:?}")]
    InvalidCard { text: String },

    #[error("duplicate card {card}")]
    DuplicateCard { card: Card },

    #[error("community must hold 0, 3, 4, or 5 cards, got {got}")]
    InvalidCommunitySize { got: usize },

    #[error("ranking table line {line}: {reason}")]
    TableFormat { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

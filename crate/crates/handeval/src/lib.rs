//! Texas hold'em hand strength: cards, showdown scoring of five- to
//! seven-card hands, and the 169-class preflop ranking with exact all-in
//! equities.

mod card;
mod error;
mod preflop;
mod score;

pub use card::{Card, Suit, RANK_LETTERS};
pub use error::{Error, Result};
pub use preflop::{enumerate_equities, hole_key, PreflopClass, PreflopTable, TABLE_HEADER};
pub use score::{compare, score_hand, HandCategory, HandScore};

//! Reader for no-limit hold'em hand transcripts.
//!
//! Raw logs (one blank-line-separated block per hand) are parsed into
//! [`HandRecord`] values, replayed action by action to verify that the chips
//! add up, and stored in a line-oriented JSON format that round-trips byte
//! for byte. Hands that cannot be parsed are reported individually rather
//! than aborting the stream.

mod error;
mod normalize;
mod raw;
mod record;
mod report;

pub use error::{NormalizedError, ParseError, Result};
pub use normalize::{
    read_normalized, write_normalized, NormalizedHeader, FORMAT_NAME, FORMAT_VERSION,
};
pub use raw::{parse_hand, parse_money};
pub use record::{
    ActionKind, ActionRecord, HandFlows, HandRecord, PlayerFlow, Reveal, Seat, Street, StreetName,
};
pub use report::{parse_stream, ParseFailure, ParseOutcome};

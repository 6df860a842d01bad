//! Synthetic heads-up session generator with known information structure.
//!
//! Each hand is a preflop shove: both players commit everything in a single
//! betting round, the board runs out, and the hand settles. The first
//! poster's wager, the second poster's wager, and the second poster's hand
//! strength form one observation triple whose joint distribution is dialed
//! in by the two agent policies. Because every policy is an explicit rule on
//! binned states, the decomposition a downstream analysis should recover is
//! known in closed form, which makes these sessions ground truth for testing
//! the full parse-bin-decompose chain.

mod deal;
mod error;
mod policy;
mod sim;

pub use deal::{deal, DEAL_SIZE};
pub use error::{Result, SimError};
pub use policy::{policy_wager, AgentPolicy, PolicyKind, WagerRange};
pub use sim::{simulate_session, SimConfig, SimOutput};

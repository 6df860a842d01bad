//! Decomposition of the information two discrete predictors carry about a
//! discrete outcome.
//!
//! The total predictive information I(X; Y1,Y2) is split into four
//! non-negative parts: redundancy (carried by both predictors), information
//! unique to each predictor, and synergy (available only from the pair
//! jointly). Redundancy is measured as the expected minimum specific
//! information across predictors, so the parts are non-negative and sum to
//! the total. Everything is in bits (log base 2), with 0 log 0 = 0.

mod decompose;
mod dist;
mod error;
mod measures;

pub use decompose::{
    decompose, outcome_entropy, specific_decompose, PartialDecomposition, SpecificDecomposition,
    SpecificState,
};
pub use dist::{JointDistribution2, JointDistribution3, NORMALIZATION_TOLERANCE};
pub use error::{Error, Result};
pub use measures::entropy;

//! From parsed hand records to information reports.
//!
//! The chain: build a per-player profit ledger and label skill groups, fit
//! per-level discretization cutoffs, turn each betting round of each
//! two-player hand into a (wager, strength, opposing wager) observation,
//! count observations into 3x3x3 distributions per (level, skill) cell, and
//! decompose each cell's information with hand-clustered resampling
//! intervals. [`run_analysis`] runs the whole chain; the pieces are public
//! for partial runs and testing.

pub mod analysis;
pub mod binning;
pub mod bootstrap;
pub mod error;
pub mod joint;
pub mod ledger;
pub mod observe;

pub use analysis::{
    run_analysis, to_csv_string, to_json_string, AnalysisConfig, AnalysisReport, CellReport,
    Estimate, StateBreakdown,
};
pub use binning::{
    bin_strength, bin_wager, fit_bins, BinningSpec, LevelCutoffs, LevelSamples, StrengthState,
    WagerState, STANDARD_LEVELS,
};
pub use bootstrap::{bootstrap_ci, bootstrap_percentiles, derive_seed, BootstrapConfig};
pub use error::{PipelineError, Result};
pub use joint::{build_joint, count_cells};
pub use ledger::{build_ledger, classify, hand_payouts, LedgerRow, PlayerLedger, SkillClass};
pub use observe::{
    collect_level_samples, extract_observations, HeroPosition, RoundObservation, SkillLabels,
    Variant,
};

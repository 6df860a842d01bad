use crate::error::{PipelineError, Result};
use crate::observe::RoundObservation;
use infodecomp::JointDistribution3;

/// Cell counts in (W1, P1, W2) order: the wager to predict, then the private
/// and public predictors.
pub fn count_cells(observations: &[&RoundObservation]) -> [u64; 27] {
    let mut counts = [0u64; 27];
    for obs in observations {
        let idx = obs.w1.index() * 9 + obs.p1.index() * 3 + obs.w2.index();
        counts[idx] += 1;
    }
    counts
}

/// Plug-in maximum-likelihood 3x3x3 distribution: cell counts over the
/// total, no smoothing. Empty cells are zeros; an empty input is an error.
pub fn build_joint(observations: &[&RoundObservation]) -> Result<JointDistribution3> {
    if observations.is_empty() {
        return Err(PipelineError::EmptyInput);
    }
    let counts = count_cells(observations);
    Ok(JointDistribution3::from_counts(3, 3, 3, &counts)?)
}

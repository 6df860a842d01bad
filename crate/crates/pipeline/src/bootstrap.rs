use crate::error::{PipelineError, Result};
use crate::joint::count_cells;
use crate::observe::RoundObservation;
use infodecomp::JointDistribution3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Derives an independent stream seed from a base seed and an index
/// (splitmix64 finalizer), so parallel resamples reproduce the sequential
/// result exactly.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy)]
pub struct BootstrapConfig {
    pub resamples: u32,
    pub seed: u64,
    /// Resample whole hands (all their rounds together) rather than rounds
    /// independently, respecting within-hand dependence.
    pub cluster_by_hand: bool,
}

/// Resampling units: observation indices grouped so that one draw moves a
/// whole unit.
fn resampling_units(observations: &[&RoundObservation], by_hand: bool) -> Vec<Vec<usize>> {
    if !by_hand {
        return (0..observations.len()).map(|i| vec![i]).collect();
    }
    let mut order: Vec<&str> = Vec::new();
    let mut groups: std::collections::HashMap<&str, Vec<usize>> = std::collections::HashMap::new();
    for (i, obs) in observations.iter().enumerate() {
        let entry = groups.entry(obs.hand_id.as_str()).or_default();
        if entry.is_empty() {
            order.push(&obs.hand_id);
        }
        entry.push(i);
    }
    order
        .into_iter()
        .map(|id| groups.remove(id).unwrap())
        .collect()
}

/// 95% percentile bounds for every coordinate of a vector statistic,
/// estimated by resampling. The statistic is computed on the plug-in
/// distribution of each resample; coordinates are kept aligned, so one pass
/// prices every reported scalar.
pub fn bootstrap_percentiles(
    observations: &[&RoundObservation],
    statistic: &(impl Fn(&JointDistribution3) -> Vec<f64> + Sync),
    config: &BootstrapConfig,
) -> Result<Vec<(f64, f64)>> {
    if observations.is_empty() {
        return Err(PipelineError::EmptyInput);
    }
    if config.resamples < 2 {
        return Err(PipelineError::InsufficientData {
            what: "bootstrap resampling".to_string(),
            have: config.resamples as usize,
            need: 2,
        });
    }
    let units = resampling_units(observations, config.cluster_by_hand);
    let n = units.len();

    let rows: Vec<Vec<f64>> = (0..config.resamples as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, r));
            let mut counts = [0u64; 27];
            for _ in 0..n {
                let unit = &units[rng.gen_range(0..n)];
                for &i in unit {
                    let obs = observations[i];
                    counts[obs.w1.index() * 9 + obs.p1.index() * 3 + obs.w2.index()] += 1;
                }
            }
            let joint = JointDistribution3::from_counts(3, 3, 3, &counts)
                .expect("resample counts are nonempty by construction");
            statistic(&joint)
        })
        .collect();

    let width = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == width));
    let mut out = Vec::with_capacity(width);
    let mut column = vec![0.0f64; rows.len()];
    for k in 0..width {
        for (i, row) in rows.iter().enumerate() {
            column[i] = row[k];
        }
        column.sort_unstable_by(|a, b| a.partial_cmp(b).expect("statistics must not be NaN"));
        out.push((percentile(&column, 0.025), percentile(&column, 0.975)));
    }
    Ok(out)
}

/// Convenience wrapper for a single scalar statistic: the 95% interval,
/// widened if needed to contain the full-sample point estimate.
pub fn bootstrap_ci(
    observations: &[&RoundObservation],
    statistic: &(impl Fn(&JointDistribution3) -> f64 + Sync),
    config: &BootstrapConfig,
) -> Result<(f64, f64)> {
    let bounds = bootstrap_percentiles(
        observations,
        &|j: &JointDistribution3| vec![statistic(j)],
        config,
    )?;
    let joint = JointDistribution3::from_counts(3, 3, 3, &count_cells(observations))?;
    let point = statistic(&joint);
    let (low, high) = bounds[0];
    Ok((low.min(point), high.max(point)))
}

/// Linear-interpolation percentile on a sorted slice.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let position = q * (sorted.len() - 1) as f64;
    let below = position.floor() as usize;
    let above = position.ceil() as usize;
    if below == above {
        sorted[below]
    } else {
        let t = position - below as f64;
        sorted[below] * (1.0 - t) + sorted[above] * t
    }
}

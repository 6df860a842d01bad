use crate::binning::{fit_bins, BinningSpec, WagerState, STANDARD_LEVELS};
use crate::bootstrap::{bootstrap_percentiles, derive_seed, BootstrapConfig};
use crate::error::Result;
use crate::joint::build_joint;
use crate::ledger::{build_ledger, classify, SkillClass};
use crate::observe::{
    collect_level_samples, extract_observations, RoundObservation, SkillLabels, Variant,
};
use handparse::HandRecord;
use infodecomp::JointDistribution3;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Everything that shapes a run. Embedded verbatim in the report so results
/// stay reproducible from the artifact alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub variant: Variant,
    pub resamples: u32,
    pub seed: u64,
    pub levels: Vec<u64>,
    pub cluster_by_hand: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            variant: Variant::Main,
            resamples: 500,
            seed: 0,
            levels: STANDARD_LEVELS.to_vec(),
            cluster_by_hand: true,
        }
    }
}

/// A point estimate with its 95% resampling interval. The interval is
/// widened, if needed, to contain the point estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    fn new(value: f64, (low, high): (f64, f64)) -> Estimate {
        Estimate {
            value,
            ci_low: low.min(value),
            ci_high: high.max(value),
        }
    }
}

/// The decomposition restricted to one wager outcome. Weighted by `weight`,
/// these average back to the cell-level figures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateBreakdown {
    pub w1: WagerState,
    pub weight: Estimate,
    pub total: Estimate,
    pub redundancy: Estimate,
    pub unique_p1: Estimate,
    pub unique_w2: Estimate,
    pub synergy: Estimate,
}

/// All measures for one (level, skill) cell, in bits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub level_cents: u64,
    pub skill: SkillClass,
    pub observations: u64,
    pub hands: u64,
    pub entropy_w1: Estimate,
    pub total_information: Estimate,
    pub normalized_total: Estimate,
    pub redundancy: Estimate,
    pub unique_p1: Estimate,
    pub unique_w2: Estimate,
    pub synergy: Estimate,
    pub interaction_information: Estimate,
    pub mi_p1: Estimate,
    pub mi_w2: Estimate,
    pub states: Vec<StateBreakdown>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub config: AnalysisConfig,
    pub binning: BinningSpec,
    pub cells: Vec<CellReport>,
}

const STATE_FIELDS: usize = 6;

/// Every reported scalar for one cell, as a flat vector so the bootstrap
/// prices all of them from the same resamples: 10 cell-level measures, then
/// 6 per wager outcome.
fn cell_statistics(joint: &JointDistribution3) -> Vec<f64> {
    let d = infodecomp::decompose(joint);
    let h = infodecomp::outcome_entropy(joint);
    let normalized = if h > 0.0 { d.total / h } else { 0.0 };
    let mut v = vec![
        h,
        d.total,
        normalized,
        d.redundancy,
        d.unique_y1,
        d.unique_y2,
        d.synergy,
        d.interaction_info,
        d.mi_y1,
        d.mi_y2,
    ];
    let specific =
        infodecomp::specific_decompose(joint).expect("counted distributions are normalized");
    for x in 0..3 {
        match specific.states.iter().find(|s| s.x == x) {
            // Outcomes with no mass in a resample carry nothing; zeros keep
            // the coordinate layout identical across resamples.
            None => v.extend_from_slice(&[0.0; STATE_FIELDS]),
            Some(s) => v.extend_from_slice(&[
                s.weight,
                s.total,
                s.redundancy,
                s.unique_y1,
                s.unique_y2,
                s.synergy,
            ]),
        }
    }
    v
}

fn cell_report(
    level: u64,
    skill: SkillClass,
    observations: &[&RoundObservation],
    config: &AnalysisConfig,
) -> Result<CellReport> {
    let joint = build_joint(observations)?;
    let point = cell_statistics(&joint);
    let bounds = bootstrap_percentiles(
        observations,
        &cell_statistics,
        &BootstrapConfig {
            resamples: config.resamples,
            seed: derive_seed(derive_seed(config.seed, level), skill as u64),
            cluster_by_hand: config.cluster_by_hand,
        },
    )?;
    let est = |k: usize| Estimate::new(point[k], bounds[k]);

    let mut hand_ids: Vec<&str> = observations.iter().map(|o| o.hand_id.as_str()).collect();
    hand_ids.sort_unstable();
    hand_ids.dedup();

    let states = WagerState::ALL
        .into_iter()
        .enumerate()
        .map(|(x, w1)| {
            let base = 10 + x * STATE_FIELDS;
            StateBreakdown {
                w1,
                weight: est(base),
                total: est(base + 1),
                redundancy: est(base + 2),
                unique_p1: est(base + 3),
                unique_w2: est(base + 4),
                synergy: est(base + 5),
            }
        })
        .collect();

    Ok(CellReport {
        level_cents: level,
        skill,
        observations: observations.len() as u64,
        hands: hand_ids.len() as u64,
        entropy_w1: est(0),
        total_information: est(1),
        normalized_total: est(2),
        redundancy: est(3),
        unique_p1: est(4),
        unique_w2: est(5),
        synergy: est(6),
        interaction_information: est(7),
        mi_p1: est(8),
        mi_w2: est(9),
        states,
    })
}

/// Runs the full chain on parsed records: profit ledger and skill labels
/// over every table size, cutoff fitting, observation extraction from the
/// two-player hands, then per-(level, skill) decomposition with resampled
/// intervals. Levels without enough wagers to fit a cutoff are dropped.
pub fn run_analysis(hands: &[HandRecord], config: &AnalysisConfig) -> Result<AnalysisReport> {
    let wanted: BTreeSet<u64> = config.levels.iter().copied().collect();
    let in_scope: Vec<&HandRecord> = hands
        .iter()
        .filter(|h| wanted.contains(&h.blind_cents))
        .collect();

    let ledger = build_ledger(in_scope.iter().copied())?;
    let mut labels: SkillLabels = BTreeMap::new();
    for level in ledger.levels() {
        labels.insert(level, classify(&ledger, level));
    }

    let mut samples = collect_level_samples(in_scope.iter().copied())?;
    samples.retain(|s| s.wagers_cents.len() >= 2);
    let binning = fit_bins(&samples)?;

    let heads_up: Vec<&HandRecord> = in_scope
        .iter()
        .copied()
        .filter(|h| h.seats.len() == 2 && binning.levels.contains_key(&h.blind_cents))
        .collect();
    let observations =
        extract_observations(heads_up.iter().copied(), &labels, &binning, config.variant)?;

    let mut groups: BTreeMap<(u64, SkillClass), Vec<&RoundObservation>> = BTreeMap::new();
    for obs in &observations {
        groups
            .entry((obs.level_cents, obs.hero_skill))
            .or_default()
            .push(obs);
    }

    let mut cells = Vec::with_capacity(groups.len());
    for ((level, skill), obs) in &groups {
        cells.push(cell_report(*level, *skill, obs, config)?);
    }
    Ok(AnalysisReport {
        config: config.clone(),
        binning,
        cells,
    })
}

/// Pretty JSON with a trailing newline; byte-identical for identical runs.
pub fn to_json_string(report: &AnalysisReport) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

fn skill_label(skill: SkillClass) -> &'static str {
    match skill {
        SkillClass::Shark => "shark",
        SkillClass::Fish => "fish",
        SkillClass::Other => "other",
    }
}

fn wager_label(w: WagerState) -> &'static str {
    match w {
        WagerState::NoWager => "no_wager",
        WagerState::Small => "small",
        WagerState::Large => "large",
    }
}

/// Long-form CSV: one row per (cell, measure), with the per-outcome rows
/// carrying the outcome in the `state` column.
pub fn to_csv_string(report: &AnalysisReport) -> String {
    let mut out =
        String::from("level_cents,skill,measure,state,value,ci_low,ci_high,observations\n");
    for cell in &report.cells {
        let mut row = |measure: &str, state: &str, e: &Estimate| {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                cell.level_cents,
                skill_label(cell.skill),
                measure,
                state,
                e.value,
                e.ci_low,
                e.ci_high,
                cell.observations
            )
            .unwrap();
        };
        row("entropy_w1", "", &cell.entropy_w1);
        row("total_information", "", &cell.total_information);
        row("normalized_total", "", &cell.normalized_total);
        row("redundancy", "", &cell.redundancy);
        row("unique_p1", "", &cell.unique_p1);
        row("unique_w2", "", &cell.unique_w2);
        row("synergy", "", &cell.synergy);
        row("interaction_information", "", &cell.interaction_information);
        row("mi_p1", "", &cell.mi_p1);
        row("mi_w2", "", &cell.mi_w2);
        for state in &cell.states {
            let label = wager_label(state.w1);
            row("weight", label, &state.weight);
            row("total", label, &state.total);
            row("redundancy", label, &state.redundancy);
            row("unique_p1", label, &state.unique_p1);
            row("unique_w2", label, &state.unique_w2);
            row("synergy", label, &state.synergy);
        }
    }
    out
}

use crate::binning::{
    bin_strength, bin_wager, BinningSpec, LevelSamples, StrengthState, WagerState,
};
use crate::error::{PipelineError, Result};
use crate::ledger::SkillClass;
use handeval::score_hand;
use handparse::{HandRecord, StreetName};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which analysis is being run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Hero is the second poster; every betting round; strength observed
    /// only through showdown reveals.
    Main,
    /// First betting round only, strength on the 169-step scale.
    PreflopOnly,
    /// Main, restricted to rounds where the hero's hand is observed.
    ShowdownOnly,
    /// Main, run once with each player as hero.
    BothPositions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeroPosition {
    First,
    Second,
}

/// One (betting round, hero) data point: the triplet the analysis counts,
/// plus the keys used for grouping and for hand-level resampling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundObservation {
    pub hand_id: String,
    pub level_cents: u64,
    pub street: StreetName,
    pub hero_position: HeroPosition,
    pub hero_skill: SkillClass,
    pub w1: WagerState,
    pub w2: WagerState,
    pub p1: StrengthState,
}

/// Per-level skill labels from `classify`, for every level present.
pub type SkillLabels = BTreeMap<u64, BTreeMap<String, SkillClass>>;

fn hero_indices(hand: &HandRecord, variant: Variant) -> Vec<(usize, HeroPosition)> {
    // Seat order does not define acting order; the blind posts do. The
    // second poster is the responding player.
    let first_poster = hand.first_position().unwrap_or(&hand.seats[0].player);
    let first_index = hand
        .seats
        .iter()
        .position(|s| s.player == first_poster)
        .unwrap_or(0);
    let second_index = 1 - first_index;
    match variant {
        Variant::BothPositions => vec![
            (second_index, HeroPosition::Second),
            (first_index, HeroPosition::First),
        ],
        _ => vec![(second_index, HeroPosition::Second)],
    }
}

/// Extracts the observation sequence for two-player hands. Streets with no
/// actions are not betting rounds (everyone was already all-in) and yield
/// nothing. The strength score uses the hero's revealed hole cards against
/// the cards on the table at that round, so it changes street by street.
pub fn extract_observations<'a>(
    hands: impl IntoIterator<Item = &'a HandRecord>,
    labels: &SkillLabels,
    spec: &BinningSpec,
    variant: Variant,
) -> Result<Vec<RoundObservation>> {
    let mut out = Vec::new();
    for hand in hands {
        extract_hand(hand, labels, spec, variant, &mut out)?;
    }
    Ok(out)
}

fn extract_hand(
    hand: &HandRecord,
    labels: &SkillLabels,
    spec: &BinningSpec,
    variant: Variant,
    out: &mut Vec<RoundObservation>,
) -> Result<()> {
    if hand.seats.len() != 2 {
        return Err(PipelineError::NonHeadsUpHand {
            hand_id: hand.hand_id.clone(),
            seats: hand.seats.len(),
        });
    }
    let flows = hand.flows()?;
    let level = hand.blind_cents;

    for (hero_index, hero_position) in hero_indices(hand, variant) {
        let hero = &hand.seats[hero_index].player;
        let villain = &hand.seats[1 - hero_index].player;
        let hero_skill = labels
            .get(&level)
            .and_then(|m| m.get(hero))
            .copied()
            .unwrap_or(SkillClass::Other);
        let reveal = hand.reveal_for(hero);

        for (si, street) in hand.streets.iter().enumerate() {
            if street.actions.is_empty() {
                continue;
            }
            if variant == Variant::PreflopOnly && si > 0 {
                break;
            }
            let w1 = bin_wager(flows.players[hero].voluntary_by_street[si] as i64, level)?;
            let w2 = bin_wager(flows.players[villain].voluntary_by_street[si] as i64, level)?;
            let score = match reveal {
                Some(r) => Some(score_hand(r.cards, &hand.board_through(si))?),
                None => None,
            };
            let p1 = bin_strength(score, level, spec)?;
            if variant == Variant::ShowdownOnly && p1 == StrengthState::NotObserved {
                continue;
            }
            out.push(RoundObservation {
                hand_id: hand.hand_id.clone(),
                level_cents: level,
                street: street.name,
                hero_position,
                hero_skill,
                w1,
                w2,
                p1,
            });
        }
    }
    Ok(())
}

/// Collects the raw material for cutoff fitting from every hand, any table
/// size: each player's nonzero street wagers, and each revealed player's
/// per-street strength ordinals (split by scale).
pub fn collect_level_samples<'a>(
    hands: impl IntoIterator<Item = &'a HandRecord>,
) -> Result<Vec<LevelSamples>> {
    let mut by_level: BTreeMap<u64, LevelSamples> = BTreeMap::new();
    for hand in hands {
        let flows = hand.flows()?;
        let sample = by_level
            .entry(hand.blind_cents)
            .or_insert_with(|| LevelSamples {
                level_cents: hand.blind_cents,
                ..LevelSamples::default()
            });
        for flow in flows.players.values() {
            for &w in &flow.voluntary_by_street {
                if w > 0 {
                    sample.wagers_cents.push(w);
                }
            }
        }
        for reveal in &hand.showdown {
            for (si, street) in hand.streets.iter().enumerate() {
                if street.actions.is_empty() {
                    continue;
                }
                let score = score_hand(reveal.cards, &hand.board_through(si))?;
                if si == 0 {
                    sample.preflop_ordinals.push(score.ordinal);
                } else {
                    sample.showdown_ordinals.push(score.ordinal);
                }
            }
        }
    }
    Ok(by_level.into_values().collect())
}

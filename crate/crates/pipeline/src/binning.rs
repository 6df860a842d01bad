use crate::error::{PipelineError, Result};
use handeval::{score_hand, Card, HandScore, Suit};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Wager state of one player on one street.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WagerState {
    NoWager,
    Small,
    Large,
}

impl WagerState {
    pub const ALL: [WagerState; 3] = [WagerState::NoWager, WagerState::Small, WagerState::Large];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Hand-strength state of the focal player on one street.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrengthState {
    NotObserved,
    Weak,
    Strong,
}

impl StrengthState {
    pub const ALL: [StrengthState; 3] = [
        StrengthState::NotObserved,
        StrengthState::Weak,
        StrengthState::Strong,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Discretization boundaries for one betting level. Strength scores live on
/// two incomparable scales, the 169-step scale when no community cards are
/// out and the showdown scale afterwards, so each gets its own cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelCutoffs {
    pub max_small_wager_cents: u64,
    /// Highest ordinal still Weak on the showdown scale, when fitted.
    pub max_weak_ordinal: Option<u32>,
    /// Highest ordinal still Weak on the no-community scale, when fitted.
    pub max_weak_preflop_ordinal: Option<u32>,
}

/// All fitted cutoffs, keyed by betting level in cents. Reports embed this
/// so the boundaries in force are always visible.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BinningSpec {
    pub levels: BTreeMap<u64, LevelCutoffs>,
}

/// The seven standard cash levels, in cents.
pub const STANDARD_LEVELS: [u64; 7] = [25, 50, 100, 200, 400, 600, 1000];

/// Strongest five-card hand whose category is a pair of the given rank:
/// the pair plus the best three kickers.
fn max_pair_ordinal(pair_rank: u8) -> u32 {
    let mut kickers = Vec::new();
    for rank in (2..=14u8).rev() {
        if rank != pair_rank && kickers.len() < 3 {
            kickers.push(rank);
        }
    }
    let hole = [
        Card::new(pair_rank, Suit::Clubs).unwrap(),
        Card::new(pair_rank, Suit::Diamonds).unwrap(),
    ];
    let board = [
        Card::new(kickers[0], Suit::Hearts).unwrap(),
        Card::new(kickers[1], Suit::Spades).unwrap(),
        Card::new(kickers[2], Suit::Diamonds).unwrap(),
    ];
    score_hand(hole, &board).unwrap().ordinal
}

impl BinningSpec {
    /// Reference cutoffs for the seven standard levels: the small/large
    /// boundary sits at the blind itself, and the weak/strong boundary at a
    /// low pair (fours, threes, fours, fives, then sixes going up in stakes).
    pub fn standard_defaults() -> BinningSpec {
        let weak_pairs: [u8; 7] = [4, 3, 4, 5, 6, 6, 6];
        let mut levels = BTreeMap::new();
        for (level, pair_rank) in STANDARD_LEVELS.into_iter().zip(weak_pairs) {
            levels.insert(
                level,
                LevelCutoffs {
                    max_small_wager_cents: level,
                    max_weak_ordinal: Some(max_pair_ordinal(pair_rank)),
                    max_weak_preflop_ordinal: None,
                },
            );
        }
        BinningSpec { levels }
    }

    pub fn cutoffs(&self, level_cents: u64) -> Option<&LevelCutoffs> {
        self.levels.get(&level_cents)
    }
}

/// Bins one street wager. Zero covers both folds and checks: a chosen wager
/// of nothing. The small/large boundary is the blind itself (which is where
/// equal-frequency fitting lands on representative data; `fit_bins` reports
/// the fitted value so the equality stays visible).
pub fn bin_wager(amount_cents: i64, level_cents: u64) -> Result<WagerState> {
    if amount_cents < 0 {
        return Err(PipelineError::NegativeAmount {
            amount: amount_cents,
        });
    }
    Ok(match amount_cents as u64 {
        0 => WagerState::NoWager,
        a if a <= level_cents => WagerState::Small,
        _ => WagerState::Large,
    })
}

/// True when a score sits on the no-community 169-step scale.
fn is_preflop_scale(score: HandScore) -> bool {
    // Showdown-scale ordinals start far above 169 (even the worst high-card
    // five encodes its ranks in high bits).
    score.ordinal <= 169
}

/// Bins one strength score, or the absence of one. Scores at or below the
/// level's cutoff (on the matching scale) are Weak.
pub fn bin_strength(
    score: Option<HandScore>,
    level_cents: u64,
    spec: &BinningSpec,
) -> Result<StrengthState> {
    let Some(score) = score else {
        return Ok(StrengthState::NotObserved);
    };
    let cutoffs = spec
        .cutoffs(level_cents)
        .ok_or(PipelineError::MissingCutoff {
            level_cents,
            scale: "any",
        })?;
    let (cutoff, scale) = if is_preflop_scale(score) {
        (cutoffs.max_weak_preflop_ordinal, "no-community")
    } else {
        (cutoffs.max_weak_ordinal, "showdown")
    };
    let cutoff = cutoff.ok_or(PipelineError::MissingCutoff { level_cents, scale })?;
    Ok(if score.ordinal <= cutoff {
        StrengthState::Weak
    } else {
        StrengthState::Strong
    })
}

/// Raw material for fitting one level's cutoffs.
#[derive(Debug, Clone, Default)]
pub struct LevelSamples {
    pub level_cents: u64,
    /// Voluntary nonzero street wagers, any player.
    pub wagers_cents: Vec<u64>,
    /// Observed strength ordinals on the showdown scale.
    pub showdown_ordinals: Vec<u32>,
    /// Observed strength ordinals on the no-community scale.
    pub preflop_ordinals: Vec<u32>,
}

/// The value splitting a sample into halves: everything at or below it forms
/// the lower bin. With ties the halves differ only by the tied mass.
fn lower_median<T: Copy + Ord>(values: &mut [T]) -> T {
    values.sort_unstable();
    values[(values.len() - 1) / 2]
}

/// Fits equal-frequency cutoffs per level. Wager cutoffs need at least two
/// nonzero wagers; strength cutoffs are fitted per scale when at least two
/// observations exist on that scale and left absent otherwise.
pub fn fit_bins(samples: &[LevelSamples]) -> Result<BinningSpec> {
    let mut levels = BTreeMap::new();
    for sample in samples {
        let mut wagers = sample.wagers_cents.clone();
        if wagers.len() < 2 {
            return Err(PipelineError::InsufficientData {
                what: format!("the wager cutoff at the {}-cent level", sample.level_cents),
                have: wagers.len(),
                need: 2,
            });
        }
        let max_small_wager_cents = lower_median(&mut wagers);

        let fit_strength = |ordinals: &[u32]| -> Option<u32> {
            if ordinals.len() < 2 {
                return None;
            }
            let mut v = ordinals.to_vec();
            Some(lower_median(&mut v))
        };
        levels.insert(
            sample.level_cents,
            LevelCutoffs {
                max_small_wager_cents,
                max_weak_ordinal: fit_strength(&sample.showdown_ordinals),
                max_weak_preflop_ordinal: fit_strength(&sample.preflop_ordinals),
            },
        );
    }
    Ok(BinningSpec { levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cards(spec: &str) -> Vec<Card> {
        spec.split_whitespace()
            .map(|c| c.parse().unwrap())
            .collect()
    }

    fn score(hole_spec: &str, board_spec: &str) -> HandScore {
        let hole = cards(hole_spec);
        score_hand([hole[0], hole[1]], &cards(board_spec)).unwrap()
    }

    #[test]
    fn wager_rule_at_every_standard_level() {
        for level in STANDARD_LEVELS {
            assert_eq!(bin_wager(0, level).unwrap(), WagerState::NoWager);
            assert_eq!(bin_wager(1, level).unwrap(), WagerState::Small);
            assert_eq!(bin_wager(level as i64, level).unwrap(), WagerState::Small);
            assert_eq!(
                bin_wager(level as i64 + 1, level).unwrap(),
                WagerState::Large
            );
            assert_eq!(
                bin_wager(10 * level as i64, level).unwrap(),
                WagerState::Large
            );
        }
        assert!(matches!(
            bin_wager(-1, 100),
            Err(PipelineError::NegativeAmount { amount: -1 })
        ));
    }

    #[test]
    fn strength_rule_at_the_hundred_cent_level() {
        let spec = BinningSpec::standard_defaults();
        assert_eq!(
            bin_strength(None, 100, &spec).unwrap(),
            StrengthState::NotObserved
        );

        // The hundred-cent boundary is a pair of fours with top kickers.
        let pair_threes = score("3c 3d", "Ah Ks Qd");
        let pair_nines = score("9c 9d", "2h 5s Qd");
        let ace_high = score("Ac Kd", "2h 5s 9d 3c Jd");
        let trips = score("2c 2d", "2h 5s 9d");
        assert_eq!(
            bin_strength(Some(pair_threes), 100, &spec).unwrap(),
            StrengthState::Weak
        );
        assert_eq!(
            bin_strength(Some(ace_high), 100, &spec).unwrap(),
            StrengthState::Weak
        );
        assert_eq!(
            bin_strength(Some(pair_nines), 100, &spec).unwrap(),
            StrengthState::Strong
        );
        assert_eq!(
            bin_strength(Some(trips), 100, &spec).unwrap(),
            StrengthState::Strong
        );

        // Exactly at the boundary stays Weak.
        let boundary = spec.cutoffs(100).unwrap().max_weak_ordinal.unwrap();
        assert_eq!(score("4c 4d", "Ah Ks Qd").ordinal, boundary);
        assert_eq!(
            bin_strength(Some(score("4c 4d", "Ah Ks Qd")), 100, &spec).unwrap(),
            StrengthState::Weak,
        );

        // The defaults carry no cutoff for the no-community scale.
        let preflop = score("Ac Ad", "");
        assert!(matches!(
            bin_strength(Some(preflop), 100, &spec),
            Err(PipelineError::MissingCutoff {
                level_cents: 100,
                scale: "no-community"
            })
        ));
        assert!(matches!(
            bin_strength(Some(trips), 75, &spec),
            Err(PipelineError::MissingCutoff {
                level_cents: 75,
                scale: "any"
            })
        ));
    }

    #[test]
    fn default_cutoffs_cover_the_standard_levels() {
        let spec = BinningSpec::standard_defaults();
        assert_eq!(spec.levels.len(), STANDARD_LEVELS.len());
        for level in STANDARD_LEVELS {
            assert_eq!(spec.cutoffs(level).unwrap().max_small_wager_cents, level);
        }
        // The weak boundary is lowest at the 50-cent level and rises with
        // the stakes.
        let boundary = |level: u64| spec.cutoffs(level).unwrap().max_weak_ordinal.unwrap();
        assert!(boundary(50) < boundary(25));
        assert_eq!(boundary(25), boundary(100));
        assert!(boundary(100) < boundary(200));
        assert!(boundary(200) < boundary(400));
        assert_eq!(boundary(600), boundary(1000));
    }

    #[test]
    fn pair_boundaries_order_by_rank() {
        assert!(max_pair_ordinal(3) < max_pair_ordinal(4));
        assert!(max_pair_ordinal(4) < max_pair_ordinal(5));
        assert!(max_pair_ordinal(6) < max_pair_ordinal(7));
        // Stronger kickers with the same pair stay below the boundary.
        assert!(score("4c 4d", "Ah Ks Jd").ordinal < max_pair_ordinal(4));
    }

    #[test]
    fn fit_bins_takes_the_lower_median() {
        let sample = |wagers: &[u64]| LevelSamples {
            level_cents: 100,
            wagers_cents: wagers.to_vec(),
            ..LevelSamples::default()
        };
        let fitted = fit_bins(&[sample(&[100, 100, 200, 200])]).unwrap();
        assert_eq!(fitted.cutoffs(100).unwrap().max_small_wager_cents, 100);

        let fitted = fit_bins(&[sample(&[300, 100, 200, 100, 200])]).unwrap();
        assert_eq!(fitted.cutoffs(100).unwrap().max_small_wager_cents, 200);

        let fitted = fit_bins(&[sample(&[5, 5, 5])]).unwrap();
        assert_eq!(fitted.cutoffs(100).unwrap().max_small_wager_cents, 5);

        assert!(matches!(
            fit_bins(&[sample(&[5])]),
            Err(PipelineError::InsufficientData {
                have: 1,
                need: 2,
                ..
            })
        ));
    }

    #[test]
    fn fit_bins_fits_each_strength_scale_independently() {
        let sample = LevelSamples {
            level_cents: 100,
            wagers_cents: vec![50, 150],
            showdown_ordinals: vec![400_000, 350_000, 500_000],
            preflop_ordinals: vec![42],
        };
        let fitted = fit_bins(&[sample]).unwrap();
        let cutoffs = fitted.cutoffs(100).unwrap();
        assert_eq!(cutoffs.max_weak_ordinal, Some(400_000));
        assert_eq!(cutoffs.max_weak_preflop_ordinal, None);
    }
}

use crate::card::Card;
use crate::error::{Error, Result};
use crate::preflop::PreflopTable;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::sync::OnceLock;

/// Showdown hand categories, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HandCategory {
    HighCard,
    Pair,
    TwoPair,
    ThreeOfAKind,
    Straight,
    Flush,
    FullHouse,
    FourOfAKind,
    StraightFlush,
}

impl HandCategory {
    pub const ALL: [HandCategory; 9] = [
        HandCategory::HighCard,
        HandCategory::Pair,
        HandCategory::TwoPair,
        HandCategory::ThreeOfAKind,
        HandCategory::Straight,
        HandCategory::Flush,
        HandCategory::FullHouse,
        HandCategory::FourOfAKind,
        HandCategory::StraightFlush,
    ];
}

/// Ordinal hand strength. With community cards present the ordinal encodes
/// the best five-card hand (category plus tiebreak ranks), so comparing
/// ordinals reproduces showdown order and equal ordinals are exactly the
/// showdown ties. With no community cards the ordinal is the two-card class
/// position on the bundled 169-class scale (higher is stronger); preflop
/// ordinals are only comparable with other preflop ordinals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HandScore {
    pub ordinal: u32,
    pub category: HandCategory,
}

impl PartialOrd for HandScore {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HandScore {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ordinal.cmp(&other.ordinal)
    }
}

/// Total-order comparison of two scores: `Greater` means `a` beats `b`.
pub fn compare(a: HandScore, b: HandScore) -> Ordering {
    a.cmp(&b)
}

/// Scores a hand. With 3, 4, or 5 community cards the result is the best
/// five-card combination from hole plus board; with 0 community cards it is
/// the preflop class strength. Duplicate cards and other community sizes are
/// rejected.
pub fn score_hand(hole: [Card; 2], community: &[Card]) -> Result<HandScore> {
    if !matches!(community.len(), 0 | 3 | 4 | 5) {
        return Err(Error::InvalidCommunitySize {
            got: community.len(),
        });
    }
    let mut seen = 0u64;
    for card in hole.iter().chain(community) {
        let bit = 1u64 << card.index();
        if seen & bit != 0 {
            return Err(Error::DuplicateCard { card: *card });
        }
        seen |= bit;
    }
    if community.is_empty() {
        return Ok(PreflopTable::bundled().score_for(hole));
    }
    let mut base = EvalBase::new();
    for card in community {
        base.add(card.rank(), card.suit() as u8);
    }
    let ordinal = base.eval2(
        (hole[0].rank(), hole[0].suit() as u8),
        (hole[1].rank(), hole[1].suit() as u8),
    );
    Ok(HandScore {
        ordinal,
        category: category_of(ordinal),
    })
}

pub(crate) fn category_of(ordinal: u32) -> HandCategory {
    HandCategory::ALL[(ordinal >> 20) as usize]
}

fn encode(category: HandCategory, t: [u8; 5]) -> u32 {
    ((category as u32) << 20)
        | ((t[0] as u32) << 16)
        | ((t[1] as u32) << 12)
        | ((t[2] as u32) << 8)
        | ((t[3] as u32) << 4)
        | (t[4] as u32)
}

/// Straight top rank (5 for the wheel, 0 for none) for each 13-bit rank set.
fn straight_lut() -> &'static [u8; 8192] {
    static LUT: OnceLock<Box<[u8; 8192]>> = OnceLock::new();
    LUT.get_or_init(|| {
        let mut table = Box::new([0u8; 8192]);
        for bits in 0..8192u16 {
            let mask = bits << 2;
            let mut high = 0u8;
            for h in (6..=14u16).rev() {
                let run = 0b11111u16 << (h - 4);
                if mask & run == run {
                    high = h as u8;
                    break;
                }
            }
            if high == 0 {
                const WHEEL: u16 = (1 << 14) | (1 << 5) | (1 << 4) | (1 << 3) | (1 << 2);
                if mask & WHEEL == WHEEL {
                    high = 5;
                }
            }
            table[bits as usize] = high;
        }
        table
    })
}

fn straight_high(rank_mask: u16) -> u8 {
    straight_lut()[(rank_mask >> 2) as usize]
}

/// Fills `out` with the highest ranks present in `mask`, descending,
/// skipping `exclude` ranks. Unfilled slots stay 0.
fn top_ranks(mask: u16, exclude: &[u8], out: &mut [u8]) {
    let mut slot = 0;
    let mut r = 14u8;
    while slot < out.len() && r >= 2 {
        if mask & (1 << r) != 0 && !exclude.contains(&r) {
            out[slot] = r;
            slot += 1;
        }
        r -= 1;
    }
}

/// Incremental evaluator state holding 0..=5 fixed cards; two more cards are
/// supplied per evaluation. Works for any total of 5 to 7 cards.
#[derive(Debug, Clone, Default)]
pub(crate) struct EvalBase {
    rank_counts: [u8; 15],
    suit_masks: [u16; 4],
    suit_counts: [u8; 4],
}

impl EvalBase {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, rank: u8, suit: u8) {
        self.rank_counts[rank as usize] += 1;
        self.suit_masks[suit as usize] |= 1 << rank;
        self.suit_counts[suit as usize] += 1;
    }

    /// Ordinal of the base cards plus the two given (rank, suit) cards.
    pub(crate) fn eval2(&self, a: (u8, u8), b: (u8, u8)) -> u32 {
        let mut rc = self.rank_counts;
        let mut sm = self.suit_masks;
        let mut sc = self.suit_counts;
        rc[a.0 as usize] += 1;
        sm[a.1 as usize] |= 1 << a.0;
        sc[a.1 as usize] += 1;
        rc[b.0 as usize] += 1;
        sm[b.1 as usize] |= 1 << b.0;
        sc[b.1 as usize] += 1;

        let rank_mask = sm[0] | sm[1] | sm[2] | sm[3];

        let mut flush_suit = usize::MAX;
        for s in 0..4 {
            if sc[s] >= 5 {
                flush_suit = s;
                break;
            }
        }
        if flush_suit != usize::MAX {
            let high = straight_high(sm[flush_suit]);
            if high > 0 {
                return encode(HandCategory::StraightFlush, [high, 0, 0, 0, 0]);
            }
        }

        let mut quad = 0u8;
        let mut trip1 = 0u8;
        let mut trip2 = 0u8;
        let mut pair1 = 0u8;
        let mut pair2 = 0u8;
        for r in (2..=14u8).rev() {
            match rc[r as usize] {
                4 => {
                    if quad == 0 {
                        quad = r;
                    }
                }
                3 => {
                    if trip1 == 0 {
                        trip1 = r;
                    } else if trip2 == 0 {
                        trip2 = r;
                    }
                }
                2 => {
                    if pair1 == 0 {
                        pair1 = r;
                    } else if pair2 == 0 {
                        pair2 = r;
                    }
                }
                _ => {}
            }
        }

        if quad > 0 {
            let mut kick = [0u8; 1];
            top_ranks(rank_mask, &[quad], &mut kick);
            return encode(HandCategory::FourOfAKind, [quad, kick[0], 0, 0, 0]);
        }
        if trip1 > 0 {
            let fh_pair = if trip2 > 0 { trip2 } else { pair1 };
            if fh_pair > 0 {
                return encode(HandCategory::FullHouse, [trip1, fh_pair, 0, 0, 0]);
            }
        }
        if flush_suit != usize::MAX {
            let mut t = [0u8; 5];
            top_ranks(sm[flush_suit], &[], &mut t);
            return encode(HandCategory::Flush, t);
        }
        let sh = straight_high(rank_mask);
        if sh > 0 {
            return encode(HandCategory::Straight, [sh, 0, 0, 0, 0]);
        }
        if trip1 > 0 {
            let mut kick = [0u8; 2];
            top_ranks(rank_mask, &[trip1], &mut kick);
            return encode(HandCategory::ThreeOfAKind, [trip1, kick[0], kick[1], 0, 0]);
        }
        if pair2 > 0 {
            let mut kick = [0u8; 1];
            top_ranks(rank_mask, &[pair1, pair2], &mut kick);
            return encode(HandCategory::TwoPair, [pair1, pair2, kick[0], 0, 0]);
        }
        if pair1 > 0 {
            let mut kick = [0u8; 3];
            top_ranks(rank_mask, &[pair1], &mut kick);
            return encode(HandCategory::Pair, [pair1, kick[0], kick[1], kick[2], 0]);
        }
        let mut t = [0u8; 5];
        top_ranks(rank_mask, &[], &mut t);
        encode(HandCategory::HighCard, t)
    }
}

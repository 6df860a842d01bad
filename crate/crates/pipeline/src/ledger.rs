use crate::error::Result;
use handeval::score_hand;
use handparse::HandRecord;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Skill label of a player at one betting level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkillClass {
    Shark,
    Fish,
    Other,
}

impl SkillClass {
    pub const ALL: [SkillClass; 3] = [SkillClass::Shark, SkillClass::Fish, SkillClass::Other];
}

/// Profit record of one player at one betting level. Net is exact integer
/// cents; the mean is materialized only on demand so no rounding happens
/// during accumulation or comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerRow {
    pub hands: u64,
    pub net_cents: i64,
}

impl LedgerRow {
    pub fn mean_cents(&self) -> f64 {
        if self.hands == 0 {
            0.0
        } else {
            self.net_cents as f64 / self.hands as f64
        }
    }
}

/// Compares two rows by exact mean profit (net/hands as rationals).
fn cmp_mean(a: &LedgerRow, b: &LedgerRow) -> std::cmp::Ordering {
    let left = a.net_cents as i128 * b.hands as i128;
    let right = b.net_cents as i128 * a.hands as i128;
    left.cmp(&right)
}

/// Per-player, per-level profit ledger. Rankings at different levels are
/// independent: the same player id can be a shark at one level and a fish at
/// another.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PlayerLedger {
    pub rows: BTreeMap<u64, BTreeMap<String, LedgerRow>>,
}

impl PlayerLedger {
    pub fn levels(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, player: &str, level_cents: u64) -> Option<&LedgerRow> {
        self.rows.get(&level_cents).and_then(|m| m.get(player))
    }
}

/// Gross pot payouts of one hand, by player, derived from the action replay:
/// a fold-out pays the survivor; otherwise the best revealed hand wins, with
/// side pots layered by contribution and exact ties split (odd cents go to
/// the earlier seat). The rake comes off the main pot before payout. Hands
/// whose winner cannot be determined (no survivor revealed) yield None.
pub fn hand_payouts(hand: &HandRecord) -> Result<Option<BTreeMap<String, u64>>> {
    let flows = hand.flows()?;
    let alive: Vec<&str> = hand
        .seats
        .iter()
        .map(|s| s.player.as_str())
        .filter(|p| !flows.players[*p].folded)
        .collect();

    let mut payouts: BTreeMap<String, u64> = BTreeMap::new();
    let total = hand.pot_cents - hand.rake_cents;

    if alive.len() == 1 {
        payouts.insert(alive[0].to_string(), total);
        return Ok(Some(payouts));
    }

    // Showdown: rank the survivors that revealed. Mucked survivors lost by
    // definition; if nobody revealed the winner is unknowable.
    let board = hand.board_through(hand.streets.len() - 1);
    let mut scored: Vec<(&str, handeval::HandScore)> = Vec::new();
    for player in &alive {
        if let Some(reveal) = hand.reveal_for(player) {
            scored.push((player, score_hand(reveal.cards, &board)?));
        }
    }
    if scored.is_empty() {
        return Ok(None);
    }

    // Side pots: slice contributions at each distinct committed amount, from
    // the bottom up. Every player funds each slice up to their commitment;
    // the slice goes to the best revealed hand among eligible survivors
    // (falling back to all revealed survivors if none is eligible, which
    // cannot happen with coherent records).
    let committed: BTreeMap<&str, u64> = hand
        .seats
        .iter()
        .map(|s| (s.player.as_str(), flows.players[&s.player].committed))
        .collect();
    let mut cuts: Vec<u64> = committed.values().copied().filter(|&c| c > 0).collect();
    cuts.sort_unstable();
    cuts.dedup();

    let seat_of = |p: &str| {
        hand.seats
            .iter()
            .find(|s| s.player == p)
            .map(|s| s.seat)
            .unwrap_or(u8::MAX)
    };

    let mut rake_left = hand.rake_cents;
    let mut floor = 0u64;
    for &cut in &cuts {
        let pot: u64 = committed
            .values()
            .map(|&c| c.min(cut).saturating_sub(floor))
            .sum();
        floor = cut;
        if pot == 0 {
            continue;
        }
        // Rake is deducted from the earliest (main) pot layers.
        let take = rake_left.min(pot);
        rake_left -= take;
        let pot = pot - take;
        if pot == 0 {
            continue;
        }

        let eligible: Vec<(&str, handeval::HandScore)> = scored
            .iter()
            .filter(|(p, _)| committed[p] >= cut)
            .copied()
            .collect();
        let pool = if eligible.is_empty() {
            &scored
        } else {
            &eligible
        };
        let best = pool.iter().map(|&(_, s)| s).max().unwrap();
        let mut winners: Vec<&str> = pool
            .iter()
            .filter(|&&(_, s)| s == best)
            .map(|&(p, _)| p)
            .collect();
        winners.sort_by_key(|p| seat_of(p));

        let share = pot / winners.len() as u64;
        let mut remainder = pot - share * winners.len() as u64;
        for w in winners {
            let extra = if remainder > 0 { 1 } else { 0 };
            remainder = remainder.saturating_sub(extra);
            *payouts.entry(w.to_string()).or_insert(0) += share + extra;
        }
    }
    debug_assert_eq!(payouts.values().sum::<u64>(), total);
    Ok(Some(payouts))
}

/// Accumulates every hand into per-player, per-level profit rows. Net profit
/// is payout minus chips committed, so rake losses are included. Hands with
/// an undeterminable winner are skipped entirely (they cannot be attributed).
pub fn build_ledger<'a>(hands: impl IntoIterator<Item = &'a HandRecord>) -> Result<PlayerLedger> {
    let mut ledger = PlayerLedger::default();
    for hand in hands {
        let Some(payouts) = hand_payouts(hand)? else {
            continue;
        };
        let flows = hand.flows()?;
        let level = ledger.rows.entry(hand.blind_cents).or_default();
        for seat in &hand.seats {
            let row = level.entry(seat.player.clone()).or_default();
            row.hands += 1;
            let won = payouts.get(&seat.player).copied().unwrap_or(0) as i64;
            row.net_cents += won - flows.players[&seat.player].committed as i64;
        }
    }
    Ok(ledger)
}

/// Labels every player at one level. Sharks have strictly positive mean
/// profit. Among the rest, the worst-performing half (rounding the half up)
/// are fish, except that when players tie exactly at the boundary mean, so
/// that the half split would be arbitrary, all players at that mean are kept
/// out of the fish group.
pub fn classify(ledger: &PlayerLedger, level_cents: u64) -> BTreeMap<String, SkillClass> {
    let mut out = BTreeMap::new();
    let Some(rows) = ledger.rows.get(&level_cents) else {
        return out;
    };

    let mut unprofitable: Vec<(&String, &LedgerRow)> = Vec::new();
    for (player, row) in rows {
        if row.net_cents > 0 {
            out.insert(player.clone(), SkillClass::Shark);
        } else {
            unprofitable.push((player, row));
        }
    }
    unprofitable.sort_by(|a, b| cmp_mean(a.1, b.1).then_with(|| a.0.cmp(b.0)));

    let m = unprofitable.len();
    let half = m.div_ceil(2);
    // When the mean at the cut also occurs past it, membership in the lower
    // half would be arbitrary for those tied players, so they all stay out.
    let straddles = half < m
        && cmp_mean(unprofitable[half - 1].1, unprofitable[half].1) == std::cmp::Ordering::Equal;
    for (i, (player, row)) in unprofitable.iter().enumerate() {
        let at_boundary_mean = cmp_mean(row, unprofitable[half - 1].1) == std::cmp::Ordering::Equal;
        let fish = i < half && !(straddles && at_boundary_mean);
        let class = if fish {
            SkillClass::Fish
        } else {
            SkillClass::Other
        };
        out.insert((*player).clone(), class);
    }
    out
}

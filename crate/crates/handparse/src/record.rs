use crate::error::{ParseError, Result};
use handeval::Card;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One fully parsed hand. Field order is the normalized wire order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HandRecord {
    pub hand_id: String,
    /// Header timestamp, preserved verbatim.
    pub timestamp: String,
    /// The big blind, which names the stakes level.
    pub blind_cents: u64,
    pub seats: Vec<Seat>,
    pub streets: Vec<Street>,
    /// Hole cards revealed at or after showdown. Always present, possibly
    /// empty; mucked hands contribute nothing.
    pub showdown: Vec<Reveal>,
    pub pot_cents: u64,
    pub rake_cents: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Seat {
    pub player: String,
    pub seat: u8,
    pub stack_cents: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StreetName {
    Preflop,
    Flop,
    Turn,
    River,
}

impl StreetName {
    pub const ORDER: [StreetName; 4] = [
        StreetName::Preflop,
        StreetName::Flop,
        StreetName::Turn,
        StreetName::River,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Street {
    pub name: StreetName,
    /// Community cards dealt at the start of this street (3 at the flop,
    /// 1 at turn and river), not the running board.
    pub board: Vec<Card>,
    pub actions: Vec<ActionRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    /// Forced post; excluded from voluntary wager totals.
    PostBlind,
    Fold,
    Check,
    Call,
    Bet,
    /// `amount_cents` is the raised-to street total, not the increment.
    Raise,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionRecord {
    pub player: String,
    pub kind: ActionKind,
    pub amount_cents: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reveal {
    pub player: String,
    pub cards: [Card; 2],
}

/// Money movement of one player reconstructed from the action sequence.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PlayerFlow {
    /// Chips that stayed in the pot (uncalled excess already refunded).
    pub committed: u64,
    /// Voluntarily pushed chips per street as acted, before refunds and
    /// excluding forced posts: the wager signal.
    pub voluntary_by_street: Vec<u64>,
    pub folded: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct HandFlows {
    pub players: BTreeMap<String, PlayerFlow>,
    pub computed_pot: u64,
    /// Uncalled amounts refunded, per player.
    pub returns: BTreeMap<String, u64>,
}

impl HandRecord {
    /// The board as visible during the given street index.
    pub fn board_through(&self, street_index: usize) -> Vec<Card> {
        self.streets[..=street_index]
            .iter()
            .flat_map(|s| s.board.iter().copied())
            .collect()
    }

    /// The player who acts first: the first blind poster, falling back to
    /// the first actor.
    pub fn first_position(&self) -> Option<&str> {
        let first = self.streets.first()?;
        first
            .actions
            .iter()
            .find(|a| a.kind == ActionKind::PostBlind)
            .or_else(|| first.actions.first())
            .map(|a| a.player.as_str())
    }

    pub fn reveal_for(&self, player: &str) -> Option<&Reveal> {
        self.showdown.iter().find(|r| r.player == player)
    }

    /// Replays every action, enforcing wager coherence (raises exceed the
    /// standing bet, calls never overpay) and computing per-player flows
    /// with uncalled excess refunded at the end of each street.
    pub fn flows(&self) -> Result<HandFlows> {
        let imbalance = |reason: String| ParseError::ChipImbalance { reason };
        let mut flows = HandFlows::default();
        for seat in &self.seats {
            flows.players.insert(
                seat.player.clone(),
                PlayerFlow {
                    committed: 0,
                    voluntary_by_street: vec![0; self.streets.len()],
                    folded: false,
                },
            );
        }

        for (si, street) in self.streets.iter().enumerate() {
            // Street-cumulative chips per player, forced posts included.
            let mut cum: BTreeMap<&str, u64> = BTreeMap::new();
            let mut forced: BTreeMap<&str, u64> = BTreeMap::new();
            let mut high = 0u64;
            for action in &street.actions {
                let player = action.player.as_str();
                if flows.players.get(player).map(|f| f.folded).unwrap_or(false) {
                    return Err(imbalance(format!("{player} acts after folding")));
                }
                let c = cum.entry(player).or_insert(0);
                match action.kind {
                    ActionKind::PostBlind => {
                        *c += action.amount_cents;
                        *forced.entry(player).or_insert(0) += action.amount_cents;
                    }
                    ActionKind::Check => {
                        if *c < high {
                            return Err(imbalance(format!(
                                "{player} checks while {} short of the bet",
                                high - *c
                            )));
                        }
                    }
                    ActionKind::Fold => {
                        flows.players.get_mut(player).unwrap().folded = true;
                    }
                    ActionKind::Call => {
                        let owed = high.saturating_sub(*c);
                        if action.amount_cents > owed {
                            return Err(imbalance(format!(
                                "{player} calls {} but owes {owed}",
                                action.amount_cents
                            )));
                        }
                        *c += action.amount_cents;
                    }
                    ActionKind::Bet => {
                        if high > *c {
                            return Err(imbalance(format!("{player} bets into a standing bet")));
                        }
                        *c += action.amount_cents;
                        high = high.max(*c);
                    }
                    ActionKind::Raise => {
                        if action.amount_cents <= high {
                            return Err(imbalance(format!(
                                "{player} raises to {} at or below the standing bet {high}",
                                action.amount_cents
                            )));
                        }
                        if action.amount_cents < *c {
                            return Err(imbalance(format!(
                                "{player} raises to {} below own committed {c}",
                                action.amount_cents
                            )));
                        }
                        *c = action.amount_cents;
                        high = *c;
                    }
                }
                high = high.max(*c);
            }

            // Refund the uncalled excess of the single top committer.
            let top = cum.iter().map(|(p, &v)| (v, *p)).max();
            if let Some((top_amount, top_player)) = top {
                let matched = cum
                    .iter()
                    .filter(|(p, _)| **p != top_player)
                    .map(|(_, &v)| v)
                    .max()
                    .unwrap_or(0);
                if top_amount > matched {
                    *flows.returns.entry(top_player.to_string()).or_insert(0) +=
                        top_amount - matched;
                    *cum.get_mut(top_player).unwrap() = matched;
                }
            }

            for (player, &street_cum) in &cum {
                let flow = flows.players.get_mut(*player).unwrap();
                flow.committed += street_cum;
            }
            // The wager signal keeps the acted amount: refunds do not erase
            // the bet that was shown to the opponent.
            let mut acted: BTreeMap<&str, u64> = BTreeMap::new();
            for action in &street.actions {
                match action.kind {
                    ActionKind::Bet | ActionKind::Call => {
                        *acted.entry(action.player.as_str()).or_insert(0) += action.amount_cents;
                    }
                    ActionKind::Raise => {
                        // Raised-to total minus forced posts is the voluntary
                        // street total so far.
                        let f = forced.get(action.player.as_str()).copied().unwrap_or(0);
                        acted.insert(
                            action.player.as_str(),
                            action.amount_cents.saturating_sub(f),
                        );
                    }
                    _ => {}
                }
            }
            for (player, amount) in acted {
                flows.players.get_mut(player).unwrap().voluntary_by_street[si] = amount;
            }
        }

        flows.computed_pot = flows.players.values().map(|f| f.committed).sum();
        Ok(flows)
    }

    /// Structural checks shared by the parser and by programmatic builders:
    /// board sizes per street, street order, seat uniqueness, no duplicate
    /// cards, reveals from seated players, and chip conservation against the
    /// recorded pot.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| ParseError::TruncatedHand { reason };
        if self.seats.len() < 2 {
            return Err(fail("fewer than two seats".into()));
        }
        let mut names = std::collections::BTreeSet::new();
        let mut numbers = std::collections::BTreeSet::new();
        for seat in &self.seats {
            if !names.insert(&seat.player) {
                return Err(fail(format!("duplicate player {}", seat.player)));
            }
            if !numbers.insert(seat.seat) {
                return Err(fail(format!("duplicate seat {}", seat.seat)));
            }
        }
        if self.streets.is_empty() {
            return Err(fail("no streets".into()));
        }
        for (i, street) in self.streets.iter().enumerate() {
            if street.name != StreetName::ORDER[i] {
                return Err(fail(format!("street {:?} out of order", street.name)));
            }
            let want = match street.name {
                StreetName::Preflop => 0,
                StreetName::Flop => 3,
                StreetName::Turn | StreetName::River => 1,
            };
            if street.board.len() != want {
                return Err(fail(format!(
                    "{:?} deals {} cards, expected {want}",
                    street.name,
                    street.board.len()
                )));
            }
            for action in &street.actions {
                if !names.contains(&action.player) {
                    return Err(fail(format!("action by unseated {}", action.player)));
                }
            }
        }
        let mut cards = std::collections::BTreeSet::new();
        for card in self
            .streets
            .iter()
            .flat_map(|s| s.board.iter())
            .chain(self.showdown.iter().flat_map(|r| r.cards.iter()))
        {
            if !cards.insert(*card) {
                return Err(fail(format!("duplicate card {card}")));
            }
        }
        let mut revealers = std::collections::BTreeSet::new();
        for reveal in &self.showdown {
            if !names.contains(&reveal.player) {
                return Err(fail(format!("reveal by unseated {}", reveal.player)));
            }
            if !revealers.insert(&reveal.player) {
                return Err(fail(format!("duplicate reveal for {}", reveal.player)));
            }
        }
        if self.rake_cents > self.pot_cents {
            return Err(ParseError::ChipImbalance {
                reason: format!("rake {} exceeds pot {}", self.rake_cents, self.pot_cents),
            });
        }
        let flows = self.flows()?;
        if flows.computed_pot != self.pot_cents {
            return Err(ParseError::ChipImbalance {
                reason: format!(
                    "actions commit {} but the recorded pot is {}",
                    flows.computed_pot, self.pot_cents
                ),
            });
        }
        Ok(())
    }
}

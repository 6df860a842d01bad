use crate::deal::{deal, DEAL_SIZE};
use crate::error::{Result, SimError};
use crate::policy::{chosen_large, AgentPolicy, PolicyKind, WagerRange};
use handeval::{score_hand, Card};
use handparse::{ActionKind, ActionRecord, HandRecord, Reveal, Seat, Street, StreetName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt::Write as _;

/// Everything that determines a simulated session. Two agents play heads-up
/// preflop shove hands: the first poster wagers a policy-chosen amount
/// all-in, the second poster moves all-in over it, and the board runs out
/// with no further decisions. One hand therefore carries exactly one
/// (hero wager, hero strength, villain wager) betting round.
///
/// Omitted fields take their defaults; unknown fields are rejected so that a
/// misspelled key cannot silently configure a default session.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    pub hands: u64,
    pub blind_cents: u64,
    pub seed: u64,
    /// Second poster: the focal player of the downstream analysis.
    pub hero: AgentPolicy,
    /// First poster; acts before seeing anything from the hero.
    pub villain: AgentPolicy,
    /// Probability that a finished hand is shown down on the record.
    /// Unrevealed hands still settle truthfully but expose no hole cards.
    pub showdown_rate: f64,
    pub hero_name: String,
    pub villain_name: String,
    pub rake_cents: u64,
    pub first_hand_id: u64,
}

impl Default for SimConfig {
    fn default() -> SimConfig {
        SimConfig {
            hands: 1000,
            blind_cents: 100,
            seed: 0,
            hero: AgentPolicy::new(PolicyKind::Uniform, 0.0, 100),
            villain: AgentPolicy::new(PolicyKind::Uniform, 0.0, 100),
            showdown_rate: 1.0,
            hero_name: "hero".to_string(),
            villain_name: "villain".to_string(),
            rake_cents: 0,
            first_hand_id: 1_000_000,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(SimError::InvalidConfig { reason });
        if self.blind_cents < 2 {
            return fail(format!(
                "blind of {} cents cannot cover a small blind",
                self.blind_cents
            ));
        }
        if self.rake_cents > self.blind_cents {
            return fail(format!(
                "rake {} exceeds the blind {}",
                self.rake_cents, self.blind_cents
            ));
        }
        if !(0.0..=1.0).contains(&self.showdown_rate) {
            return fail(format!(
                "showdown rate {} is not in [0, 1]",
                self.showdown_rate
            ));
        }
        for (name, who) in [(&self.hero_name, "hero"), (&self.villain_name, "villain")] {
            if name.is_empty() {
                return fail(format!("{who} name is empty"));
            }
            if !name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
            {
                return fail(format!(
                    "{who} name {name:?} would not survive a log round-trip"
                ));
            }
        }
        if self.hero_name == self.villain_name {
            return fail(format!("both players are named {:?}", self.hero_name));
        }
        self.check_policy(&self.hero, "hero")?;
        self.check_policy(&self.villain, "villain")?;
        // The opening raise must clear the standing big blind.
        let min_open = self.villain.small_cents.min_cents + self.blind_cents / 2;
        if min_open <= self.blind_cents {
            return fail(format!(
                "villain small wagers from {} cents cannot raise past the blind",
                self.villain.small_cents.min_cents
            ));
        }
        Ok(())
    }

    fn check_policy(&self, policy: &AgentPolicy, who: &str) -> Result<()> {
        let fail = |reason: String| Err(SimError::InvalidConfig { reason });
        if !(0.0..=1.0).contains(&policy.noise) {
            return fail(format!("{who} noise {} is not in [0, 1]", policy.noise));
        }
        for (range, label) in [(policy.small_cents, "small"), (policy.large_cents, "large")] {
            if range.min_cents == 0 || range.min_cents > range.max_cents {
                return fail(format!(
                    "{who} {label} range {}..={} is empty or starts at zero",
                    range.min_cents, range.max_cents
                ));
            }
            if range.max_cents > 100 * self.blind_cents {
                return fail(format!(
                    "{who} {label} wagers reach {} cents, past 100 blinds",
                    range.max_cents
                ));
            }
        }
        if policy.small_cents.max_cents > self.blind_cents {
            return fail(format!(
                "{who} small wagers reach {} cents, past the {}-cent blind",
                policy.small_cents.max_cents, self.blind_cents
            ));
        }
        if policy.large_cents.min_cents <= self.blind_cents {
            return fail(format!(
                "{who} large wagers start at {} cents, within the {}-cent blind",
                policy.large_cents.min_cents, self.blind_cents
            ));
        }
        Ok(())
    }
}

/// A finished session: structured records, the equivalent raw log text, and
/// the strength boundary the policies played against.
#[derive(Debug, Clone, PartialEq)]
pub struct SimOutput {
    pub records: Vec<HandRecord>,
    pub text: String,
    /// Highest starting-hand ordinal the policies treated as weak.
    pub strength_cutoff: u32,
}

/// Boundary used when too few hands reveal to fit one: the middle of the
/// 169-class starting-hand scale.
const FALLBACK_CUTOFF: u32 = 85;

/// Per-hand randomness, fixed before any policy runs so that the random
/// stream never depends on policy choices. Draw order: nine cards, the
/// showdown coin, the stand-in public bit for the first actor, then six
/// units (gate, value, amount for the villain, the same for the hero).
struct Plan {
    cards: [Card; DEAL_SIZE],
    hero_ordinal: u32,
    villain_ordinal: u32,
    reveal: bool,
    phantom: bool,
    units: [f64; 6],
}

fn plan_hand(config: &SimConfig, index: u64) -> Plan {
    let mut rng = ChaCha8Rng::seed_from_u64(pipeline::derive_seed(config.seed, index));
    let cards = deal(&mut rng);
    let reveal = rng.gen::<f64>() < config.showdown_rate;
    let phantom = rng.gen::<f64>() < 0.5;
    let mut units = [0.0f64; 6];
    for unit in &mut units {
        *unit = rng.gen();
    }
    let ordinal = |hole: [Card; 2]| {
        score_hand(hole, &[])
            .expect("a deal never repeats a card")
            .ordinal
    };
    Plan {
        cards,
        hero_ordinal: ordinal([cards[0], cards[1]]),
        villain_ordinal: ordinal([cards[2], cards[3]]),
        reveal,
        phantom,
        units,
    }
}

/// Lower median of the starting-hand ordinals that will be visible on the
/// record: the same equal-frequency boundary the downstream fit recovers
/// from the logs, so the agents and the analysis binarize strength
/// identically.
fn strength_cutoff(plans: &[Plan]) -> u32 {
    let mut ordinals: Vec<u32> = plans
        .iter()
        .filter(|p| p.reveal)
        .flat_map(|p| [p.hero_ordinal, p.villain_ordinal])
        .collect();
    if ordinals.len() < 2 {
        return FALLBACK_CUTOFF;
    }
    ordinals.sort_unstable();
    ordinals[(ordinals.len() - 1) / 2]
}

fn wager_range(policy: &AgentPolicy, large: bool) -> WagerRange {
    if large {
        policy.large_cents
    } else {
        policy.small_cents
    }
}

fn usd(cents: u64) -> String {
    format!("${}.{:02}", cents / 100, cents % 100)
}

fn act(player: &str, kind: ActionKind, amount_cents: u64) -> ActionRecord {
    ActionRecord {
        player: player.to_string(),
        kind,
        amount_cents,
    }
}

fn realize(config: &SimConfig, cutoff: u32, index: u64, plan: &Plan) -> (HandRecord, String) {
    let small_blind = config.blind_cents / 2;
    let blind = config.blind_cents;
    let hero = config.hero_name.as_str();
    let villain = config.villain_name.as_str();
    let u = &plan.units;

    let villain_large = chosen_large(
        config.villain.kind,
        plan.villain_ordinal > cutoff,
        plan.phantom,
        config.villain.noise,
        u[0],
        u[1],
    );
    let villain_amount = wager_range(&config.villain, villain_large).sample(u[2]);
    let hero_large = chosen_large(
        config.hero.kind,
        plan.hero_ordinal > cutoff,
        villain_large,
        config.hero.noise,
        u[3],
        u[4],
    );
    let hero_amount = wager_range(&config.hero, hero_large).sample(u[5]);

    let villain_total = small_blind + villain_amount;
    let hero_total = blind + hero_amount;
    let hero_calls = hero_total <= villain_total;
    let matched = villain_total.min(hero_total);
    let pot = 2 * matched;
    let payout = pot - config.rake_cents;

    let hero_hole = [plan.cards[0], plan.cards[1]];
    let villain_hole = [plan.cards[2], plan.cards[3]];
    let flop = [plan.cards[4], plan.cards[5], plan.cards[6]];
    let (turn, river) = (plan.cards[7], plan.cards[8]);
    let board = [flop[0], flop[1], flop[2], turn, river];
    let beats = score_hand(villain_hole, &board)
        .expect("a deal never repeats a card")
        .cmp(&score_hand(hero_hole, &board).expect("a deal never repeats a card"));
    let (villain_take, hero_take) = match beats {
        Ordering::Greater => (payout, 0),
        Ordering::Less => (0, payout),
        // Seat order breaks ties: the odd cent stays with seat 1.
        Ordering::Equal => (payout / 2 + payout % 2, payout / 2),
    };

    let hand_id = config.first_hand_id + index;
    let timestamp = format!(
        "2026/03/01 {:02}:{:02}:{:02} ET",
        12 + (index / 3600) % 12,
        (index / 60) % 60,
        index % 60
    );

    let mut preflop = vec![
        act(villain, ActionKind::PostBlind, small_blind),
        act(hero, ActionKind::PostBlind, blind),
        act(villain, ActionKind::Raise, villain_total),
    ];
    if hero_calls {
        preflop.push(act(hero, ActionKind::Call, hero_amount));
    } else {
        preflop.push(act(hero, ActionKind::Raise, hero_total));
    }
    let streets = vec![
        Street {
            name: StreetName::Preflop,
            board: Vec::new(),
            actions: preflop,
        },
        Street {
            name: StreetName::Flop,
            board: flop.to_vec(),
            actions: Vec::new(),
        },
        Street {
            name: StreetName::Turn,
            board: vec![turn],
            actions: Vec::new(),
        },
        Street {
            name: StreetName::River,
            board: vec![river],
            actions: Vec::new(),
        },
    ];
    let showdown = if plan.reveal {
        vec![
            Reveal {
                player: villain.to_string(),
                cards: villain_hole,
            },
            Reveal {
                player: hero.to_string(),
                cards: hero_hole,
            },
        ]
    } else {
        Vec::new()
    };
    let record = HandRecord {
        hand_id: hand_id.to_string(),
        timestamp: timestamp.clone(),
        blind_cents: blind,
        seats: vec![
            Seat {
                player: villain.to_string(),
                seat: 1,
                stack_cents: villain_total,
            },
            Seat {
                player: hero.to_string(),
                seat: 2,
                stack_cents: hero_total,
            },
        ],
        streets,
        showdown,
        pot_cents: pot,
        rake_cents: config.rake_cents,
    };
    record
        .validate()
        .expect("a generated hand must replay cleanly");

    let mut text = String::with_capacity(512);
    let w = &mut text;
    writeln!(
        w,
        "PokerStars Hand #{hand_id}:  Hold'em No Limit ({}/{} USD) - {timestamp}",
        usd(small_blind),
        usd(blind)
    )
    .unwrap();
    writeln!(w, "Table 'Synthetica' 2-max Seat #1 is the button").unwrap();
    writeln!(w, "Seat 1: {villain} ({} in chips)", usd(villain_total)).unwrap();
    writeln!(w, "Seat 2: {hero} ({} in chips)", usd(hero_total)).unwrap();
    writeln!(w, "{villain}: posts small blind {}", usd(small_blind)).unwrap();
    writeln!(w, "{hero}: posts big blind {}", usd(blind)).unwrap();
    writeln!(w, "*** HOLE CARDS ***").unwrap();
    writeln!(w, "Dealt to {hero} [{} {}]", hero_hole[0], hero_hole[1]).unwrap();
    writeln!(
        w,
        "{villain}: raises {} to {} and is all-in",
        usd(villain_total - blind),
        usd(villain_total)
    )
    .unwrap();
    if hero_calls {
        writeln!(w, "{hero}: calls {} and is all-in", usd(hero_amount)).unwrap();
    } else {
        writeln!(
            w,
            "{hero}: raises {} to {} and is all-in",
            usd(hero_total - villain_total),
            usd(hero_total)
        )
        .unwrap();
    }
    let unmatched = villain_total.max(hero_total) - matched;
    if unmatched > 0 {
        let refunded = if villain_total > hero_total {
            villain
        } else {
            hero
        };
        writeln!(
            w,
            "Uncalled bet ({}) returned to {refunded}",
            usd(unmatched)
        )
        .unwrap();
    }
    writeln!(w, "*** FLOP *** [{} {} {}]", flop[0], flop[1], flop[2]).unwrap();
    writeln!(
        w,
        "*** TURN *** [{} {} {}] [{turn}]",
        flop[0], flop[1], flop[2]
    )
    .unwrap();
    writeln!(
        w,
        "*** RIVER *** [{} {} {} {turn}] [{river}]",
        flop[0], flop[1], flop[2]
    )
    .unwrap();
    if plan.reveal {
        writeln!(w, "*** SHOW DOWN ***").unwrap();
        writeln!(
            w,
            "{villain}: shows [{} {}]",
            villain_hole[0], villain_hole[1]
        )
        .unwrap();
        writeln!(w, "{hero}: shows [{} {}]", hero_hole[0], hero_hole[1]).unwrap();
    }
    if villain_take > 0 {
        writeln!(w, "{villain} collected {} from pot", usd(villain_take)).unwrap();
    }
    if hero_take > 0 {
        writeln!(w, "{hero} collected {} from pot", usd(hero_take)).unwrap();
    }
    writeln!(w, "*** SUMMARY ***").unwrap();
    writeln!(
        w,
        "Total pot {} | Rake {}",
        usd(pot),
        usd(config.rake_cents)
    )
    .unwrap();
    writeln!(
        w,
        "Board [{} {} {} {turn} {river}]",
        flop[0], flop[1], flop[2]
    )
    .unwrap();

    (record, text)
}

/// Runs a full session. Hands are independent: each draws its randomness
/// from a seed derived from the session seed and the hand index, so output
/// is identical however the work is scheduled. The only coupling is the
/// strength boundary, fitted once from the planned reveals before any hand
/// is realized.
pub fn simulate_session(config: &SimConfig) -> Result<SimOutput> {
    config.validate()?;
    let plans: Vec<Plan> = (0..config.hands)
        .into_par_iter()
        .map(|i| plan_hand(config, i))
        .collect();
    let cutoff = strength_cutoff(&plans);
    let hands: Vec<(HandRecord, String)> = plans
        .par_iter()
        .enumerate()
        .map(|(i, plan)| realize(config, cutoff, i as u64, plan))
        .collect();

    let mut records = Vec::with_capacity(hands.len());
    let mut text = String::new();
    for (i, (record, block)) in hands.into_iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&block);
        records.push(record);
    }
    Ok(SimOutput {
        records,
        text,
        strength_cutoff: cutoff,
    })
}

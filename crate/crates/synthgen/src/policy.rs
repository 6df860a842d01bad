use pipeline::{StrengthState, WagerState};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// How an agent picks its wager size from what it can see.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    /// Coin flip; ignores both the hand and the opponent.
    Uniform,
    /// Mirrors the opponent's wager size and ignores the hand.
    PublicFollower,
    /// Wagers large exactly with a strong hand; ignores the opponent.
    PrivateFollower,
    /// Wagers large when hand strength and the opponent's size disagree,
    /// so the size is unreadable without both inputs.
    Encryptor,
}

/// Inclusive range of raw cent amounts for one wager size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WagerRange {
    pub min_cents: u64,
    pub max_cents: u64,
}

impl WagerRange {
    /// Maps a unit draw in [0, 1) onto the range, uniformly by cent.
    pub fn sample(&self, unit: f64) -> u64 {
        let span = self.max_cents - self.min_cents + 1;
        let offset = ((unit * span as f64) as u64).min(span - 1);
        self.min_cents + offset
    }
}

/// One agent's decision rule plus its sizing. `noise` is the probability of
/// discarding the rule for a coin flip; at zero the choice is a deterministic
/// function of the rule's declared inputs alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgentPolicy {
    pub kind: PolicyKind,
    pub noise: f64,
    pub small_cents: WagerRange,
    pub large_cents: WagerRange,
}

impl AgentPolicy {
    /// Default sizing for a blind level: small wagers sit in the upper half
    /// of the blind (so even the opening raise stays legal), large wagers
    /// run from just over the blind to five blinds.
    pub fn new(kind: PolicyKind, noise: f64, blind_cents: u64) -> AgentPolicy {
        let small_blind = blind_cents / 2;
        AgentPolicy {
            kind,
            noise,
            small_cents: WagerRange {
                min_cents: blind_cents - small_blind + 1,
                max_cents: blind_cents,
            },
            large_cents: WagerRange {
                min_cents: blind_cents + 1,
                max_cents: 5 * blind_cents,
            },
        }
    }
}

/// The decision core on binary inputs. `gate` and `value` are unit draws:
/// with probability `noise` the gate routes to a coin flip on `value`,
/// otherwise the kind's rule decides.
pub(crate) fn chosen_large(
    kind: PolicyKind,
    strong: bool,
    large_in: bool,
    noise: f64,
    gate: f64,
    value: f64,
) -> bool {
    if gate < noise {
        return value < 0.5;
    }
    match kind {
        PolicyKind::Uniform => value < 0.5,
        PolicyKind::PublicFollower => large_in,
        PolicyKind::PrivateFollower => strong,
        PolicyKind::Encryptor => strong != large_in,
    }
}

/// Picks a wager size from binned inputs. Two unit draws are consumed per
/// call regardless of the kind, so the stream position never depends on the
/// policy or its inputs. An unobserved or absent input counts as the low bin.
pub fn policy_wager(
    policy: &AgentPolicy,
    p1: StrengthState,
    w2: WagerState,
    rng: &mut impl Rng,
) -> WagerState {
    let gate = rng.gen::<f64>();
    let value = rng.gen::<f64>();
    let strong = p1 == StrengthState::Strong;
    let large_in = w2 == WagerState::Large;
    if chosen_large(policy.kind, strong, large_in, policy.noise, gate, value) {
        WagerState::Large
    } else {
        WagerState::Small
    }
}

use crate::card::{Card, RANK_LETTERS};
use crate::error::{Error, Result};
use crate::score::{EvalBase, HandCategory, HandScore};
use rayon::prelude::*;
use std::sync::OnceLock;

/// One of the 169 two-card starting classes. `rank` 1 is the strongest
/// class; `equity` is the exact heads-up all-in win probability (ties count
/// half) against a uniformly random opponent hand and board.
#[derive(Debug, Clone, PartialEq)]
pub struct PreflopClass {
    pub high: u8,
    pub low: u8,
    pub suited: bool,
    pub rank: u16,
    pub equity: f64,
}

impl PreflopClass {
    pub fn is_pair(&self) -> bool {
        self.high == self.low
    }

    pub fn label(&self) -> String {
        let hi = RANK_LETTERS[self.high as usize - 2];
        let lo = RANK_LETTERS[self.low as usize - 2];
        if self.is_pair() {
            format!("{hi}{lo}")
        } else if self.suited {
            format!("{hi}{lo}s")
        } else {
            format!("{hi}{lo}o")
        }
    }

    fn key(&self) -> usize {
        class_key(self.high, self.low, self.suited)
    }
}

fn class_key(high: u8, low: u8, suited: bool) -> usize {
    ((high as usize - 2) * 13 + (low as usize - 2)) * 2 + suited as usize
}

/// Canonical (high, low, suited) key of a two-card hand.
pub fn hole_key(hole: [Card; 2]) -> (u8, u8, bool) {
    let (a, b) = (hole[0], hole[1]);
    let (hi, lo) = if a.rank() >= b.rank() { (a, b) } else { (b, a) };
    if hi.rank() == lo.rank() {
        (hi.rank(), lo.rank(), false)
    } else {
        (hi.rank(), lo.rank(), hi.suit() == lo.suit())
    }
}

fn parse_label(label: &str) -> Option<(u8, u8, bool)> {
    let chars: Vec<char> = label.chars().collect();
    let rank_of = |c: char| {
        RANK_LETTERS
            .iter()
            .position(|&r| r == c.to_ascii_uppercase())
            .map(|i| i as u8 + 2)
    };
    match chars.as_slice() {
        [h, l] => {
            let (h, l) = (rank_of(*h)?, rank_of(*l)?);
            (h == l).then_some((h, l, false))
        }
        [h, l, m] => {
            let (h, l) = (rank_of(*h)?, rank_of(*l)?);
            let suited = match m {
                's' => true,
                'o' => false,
                _ => return None,
            };
            (h > l).then_some((h, l, suited))
        }
        _ => None,
    }
}

/// The full 169-class ranking, addressable by hole cards, label, or rank.
#[derive(Debug, Clone)]
pub struct PreflopTable {
    classes: Vec<PreflopClass>, // sorted by rank
    by_key: Vec<u16>,           // class key -> rank
}

pub const TABLE_HEADER: &str = "# preflop-ranks v1";

impl PreflopTable {
    pub fn from_classes(mut classes: Vec<PreflopClass>) -> Result<Self> {
        let fail = |reason: &str| Error::TableFormat {
            line: 0,
            reason: reason.to_string(),
        };
        if classes.len() != 169 {
            return Err(fail(&format!(
                "expected 169 classes, got {}",
                classes.len()
            )));
        }
        classes.sort_by_key(|c| c.rank);
        let mut by_key = vec![0u16; 13 * 13 * 2];
        for (i, class) in classes.iter().enumerate() {
            if class.rank as usize != i + 1 {
                return Err(fail("ranks must cover 1..=169 exactly"));
            }
            if by_key[class.key()] != 0 {
                return Err(fail(&format!("duplicate class {}", class.label())));
            }
            by_key[class.key()] = class.rank;
        }
        Ok(Self { classes, by_key })
    }

    /// Parses the plain-text asset: `label rank equity` per line, `#`
    /// comments and blank lines skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut classes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::TableFormat {
                    line,
                    reason: format!("expected `label rank equity`, got {trimmed:?}"),
                });
            }
            let (high, low, suited) = parse_label(fields[0]).ok_or_else(|| Error::TableFormat {
                line,
                reason: format!("bad class label {:?}", fields[0]),
            })?;
            let rank: u16 = fields[1].parse().map_err(|_| Error::TableFormat {
                line,
                reason: format!("bad rank {:?}", fields[1]),
            })?;
            let equity: f64 = fields[2].parse().map_err(|_| Error::TableFormat {
                line,
                reason: format!("bad equity {:?}", fields[2]),
            })?;
            if !(0.0..=1.0).contains(&equity) {
                return Err(Error::TableFormat {
                    line,
                    reason: format!("equity {equity} outside [0, 1]"),
                });
            }
            classes.push(PreflopClass {
                high,
                low,
                suited,
                rank,
                equity,
            });
        }
        Self::from_classes(classes)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(TABLE_HEADER);
        out.push('\n');
        out.push_str("# label rank equity\n");
        for class in &self.classes {
            out.push_str(&format!(
                "{} {} {:.9}\n",
                class.label(),
                class.rank,
                class.equity
            ));
        }
        out
    }

    /// The table shipped with the crate.
    pub fn bundled() -> &'static PreflopTable {
        static TABLE: OnceLock<PreflopTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            PreflopTable::parse(include_str!("../data/preflop_ranks.txt"))
                .expect("bundled preflop ranking asset must parse")
        })
    }

    pub fn classes(&self) -> &[PreflopClass] {
        &self.classes
    }

    pub fn by_rank(&self, rank: u16) -> &PreflopClass {
        &self.classes[rank as usize - 1]
    }

    pub fn by_label(&self, label: &str) -> Option<&PreflopClass> {
        let (high, low, suited) = parse_label(label)?;
        let rank = self.by_key[class_key(high, low, suited)];
        (rank != 0).then(|| self.by_rank(rank))
    }

    pub fn class_for(&self, hole: [Card; 2]) -> &PreflopClass {
        let (high, low, suited) = hole_key(hole);
        self.by_rank(self.by_key[class_key(high, low, suited)])
    }

    /// Preflop strength on an ordinal scale where higher is stronger:
    /// ordinal = 170 - rank, so the top class scores 169.
    pub fn score_for(&self, hole: [Card; 2]) -> HandScore {
        let class = self.class_for(hole);
        let category = if class.is_pair() {
            HandCategory::Pair
        } else {
            HandCategory::HighCard
        };
        HandScore {
            ordinal: 170 - class.rank as u32,
            category,
        }
    }
}

/// Representative hole cards (as dense card indices) for every class; suit
/// symmetry makes one representative per class exact.
fn class_reps() -> Vec<(u8, u8, u8, u8, bool)> {
    // (card a, card b, high, low, suited)
    let idx = |rank: u8, suit: u8| suit * 13 + (rank - 2);
    let mut reps = Vec::with_capacity(169);
    for high in 2..=14u8 {
        for low in 2..=high {
            if high == low {
                reps.push((idx(high, 0), idx(high, 1), high, low, false));
            } else {
                reps.push((idx(high, 0), idx(low, 0), high, low, true));
                reps.push((idx(high, 0), idx(low, 1), high, low, false));
            }
        }
    }
    reps
}

const VILLAIN_HOLES_PER_BOARD: u64 = 45 * 44 / 2; // C(45,2)
                                                  // Boards that avoid one fixed two-card hand: C(50,5).
const BOARDS_PER_REP: u64 = 2_118_760;

struct BoardScratch {
    rest: [u8; 47],
    pos_of: [u8; 52],
    mat: Vec<u32>,
    sorted: Vec<u32>,
}

impl BoardScratch {
    fn new() -> Self {
        Self {
            rest: [0; 47],
            pos_of: [0xFF; 52],
            mat: vec![0; 47 * 47],
            sorted: vec![0; 47 * 46 / 2],
        }
    }

    fn process_board(
        &mut self,
        board: [u8; 5],
        reps: &[(u8, u8, u8, u8, bool)],
        acc: &mut [u64; 169],
    ) {
        let rank_of = |c: u8| c % 13 + 2;
        let suit_of = |c: u8| c / 13;

        let mut base = EvalBase::new();
        for &c in &board {
            base.add(rank_of(c), suit_of(c));
        }

        self.pos_of = [0xFF; 52];
        let mut n = 0usize;
        'cards: for c in 0..52u8 {
            for &b in &board {
                if b == c {
                    continue 'cards;
                }
            }
            self.rest[n] = c;
            self.pos_of[c as usize] = n as u8;
            n += 1;
        }
        debug_assert_eq!(n, 47);

        let mut k = 0usize;
        for i in 0..47usize {
            let ci = self.rest[i];
            let a = (rank_of(ci), suit_of(ci));
            for j in (i + 1)..47 {
                let cj = self.rest[j];
                let s = base.eval2(a, (rank_of(cj), suit_of(cj)));
                self.mat[i * 47 + j] = s;
                self.sorted[k] = s;
                k += 1;
            }
        }
        self.sorted.sort_unstable();

        for (ri, &(ca, cb, ..)) in reps.iter().enumerate() {
            let p1 = self.pos_of[ca as usize];
            let p2 = self.pos_of[cb as usize];
            if p1 == 0xFF || p2 == 0xFF {
                continue;
            }
            let hs = base.eval2((rank_of(ca), suit_of(ca)), (rank_of(cb), suit_of(cb)));
            let below = self.sorted.partition_point(|&s| s < hs);
            let upto = self.sorted.partition_point(|&s| s <= hs);
            let mut wins = below as i64;
            let mut ties = (upto - below) as i64;
            let entry = |a: u8, b: u8| {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                self.mat[lo as usize * 47 + hi as usize]
            };
            for q in 0..47u8 {
                if q == p1 || q == p2 {
                    continue;
                }
                let s1 = entry(p1, q);
                wins -= (s1 < hs) as i64;
                ties -= (s1 == hs) as i64;
                let s2 = entry(p2, q);
                wins -= (s2 < hs) as i64;
                ties -= (s2 == hs) as i64;
            }
            let s12 = entry(p1, p2);
            wins -= (s12 < hs) as i64;
            ties -= (s12 == hs) as i64;
            acc[ri] += (2 * wins + ties) as u64;
        }
    }
}

/// Exact all-in equity enumeration for every class: every board and every
/// opposing hand, counted with integer arithmetic. The result is identical
/// regardless of thread count. Takes a few CPU-minutes.
pub fn enumerate_equities(progress: impl Fn(u32) + Sync) -> PreflopTable {
    let reps = class_reps();
    let totals = (0..52u8)
        .into_par_iter()
        .map(|b0| {
            let mut acc = [0u64; 169];
            let mut scratch = BoardScratch::new();
            for b1 in (b0 + 1)..52 {
                for b2 in (b1 + 1)..52 {
                    for b3 in (b2 + 1)..52 {
                        for b4 in (b3 + 1)..52 {
                            scratch.process_board([b0, b1, b2, b3, b4], &reps, &mut acc);
                        }
                    }
                }
            }
            progress(b0 as u32);
            acc
        })
        .reduce(
            || [0u64; 169],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x += y;
                }
                a
            },
        );

    // Sort by the exact integer tally (2*wins + ties), descending; break
    // exact ties by class key for a deterministic table.
    let mut order: Vec<usize> = (0..169).collect();
    order.sort_by(|&a, &b| {
        totals[b]
            .cmp(&totals[a])
            .then_with(|| reps[a].cmp(&reps[b]))
    });
    let denom = (2 * VILLAIN_HOLES_PER_BOARD * BOARDS_PER_REP) as f64;
    let classes: Vec<PreflopClass> = order
        .iter()
        .enumerate()
        .map(|(i, &ri)| {
            let (_, _, high, low, suited) = reps[ri];
            PreflopClass {
                high,
                low,
                suited,
                rank: i as u16 + 1,
                equity: totals[ri] as f64 / denom,
            }
        })
        .collect();
    PreflopTable::from_classes(classes).expect("enumeration covers all classes")
}

//! Cross-checks against a deliberately naive evaluator that shares no code
//! with the library: five-card hands are classified by sorting and literal
//! rule matching, and seven-card hands by taking the best of all 21
//! five-card subsets.

use handeval::{compare, score_hand, Card, HandCategory, HandScore, PreflopTable, Suit};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

fn deck() -> Vec<Card> {
    Card::deck().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct NaiveScore {
    category: u8,
    ranks: [u8; 5],
}

/// Classifies one five-card hand from first principles.
fn naive5(cards: [Card; 5]) -> NaiveScore {
    let mut ranks: [u8; 5] = [
        cards[0].rank(),
        cards[1].rank(),
        cards[2].rank(),
        cards[3].rank(),
        cards[4].rank(),
    ];
    ranks.sort_unstable_by(|a, b| b.cmp(a));
    let flush = cards.iter().all(|c| c.suit() == cards[0].suit());

    let mut distinct = [0u8; 5];
    let mut nd = 0usize;
    for &r in &ranks {
        if nd == 0 || distinct[nd - 1] != r {
            distinct[nd] = r;
            nd += 1;
        }
    }
    let straight_high = if nd == 5 {
        if ranks[0] - ranks[4] == 4 {
            Some(ranks[0])
        } else if ranks == [14, 5, 4, 3, 2] {
            Some(5)
        } else {
            None
        }
    } else {
        None
    };

    if flush || straight_high.is_some() {
        return match (flush, straight_high) {
            (true, Some(h)) => NaiveScore {
                category: 8,
                ranks: [h, 0, 0, 0, 0],
            },
            (false, Some(h)) => NaiveScore {
                category: 4,
                ranks: [h, 0, 0, 0, 0],
            },
            _ => NaiveScore { category: 5, ranks },
        };
    }

    // Rank groups ordered by (multiplicity, rank) descending.
    let mut groups = [(0u8, 0u8); 5];
    for i in 0..nd {
        let r = distinct[i];
        let count = ranks.iter().filter(|&&x| x == r).count() as u8;
        groups[i] = (count, r);
    }
    groups[..nd].sort_unstable_by(|a, b| b.cmp(a));
    let mut ordered = [0u8; 5];
    for i in 0..nd {
        ordered[i] = groups[i].1;
    }
    let counts: Vec<u8> = groups[..nd].iter().map(|g| g.0).collect();
    let category = match counts.as_slice() {
        [4, 1] => 7,
        [3, 2] => 6,
        [3, 1, 1] => 3,
        [2, 2, 1] => 2,
        [2, 1, 1, 1] => 1,
        _ => 0,
    };
    NaiveScore {
        category,
        ranks: ordered,
    }
}

/// Best five-card hand out of seven, by trying every subset.
fn naive7(cards: [Card; 7]) -> NaiveScore {
    let mut best: Option<NaiveScore> = None;
    for skip_a in 0..7 {
        for skip_b in skip_a + 1..7 {
            let mut five = [cards[0]; 5];
            let mut n = 0;
            for (i, &c) in cards.iter().enumerate() {
                if i != skip_a && i != skip_b {
                    five[n] = c;
                    n += 1;
                }
            }
            let s = naive5(five);
            if best.map(|b| s > b).unwrap_or(true) {
                best = Some(s);
            }
        }
    }
    best.unwrap()
}

fn score7(cards: [Card; 7]) -> HandScore {
    score_hand([cards[0], cards[1]], &cards[2..]).unwrap()
}

fn category_index(c: HandCategory) -> u8 {
    HandCategory::ALL.iter().position(|&x| x == c).unwrap() as u8
}

/// Exhaustive five-card census: the library and the naive rules must agree
/// hand by hand, and the per-category totals must equal the classic counts.
#[test]
fn five_card_census_matches_exhaustive_enumeration() {
    let deck = deck();
    let mut lib_counts = [0u64; 9];
    let mut naive_counts = [0u64; 9];
    for a in 0..52 {
        for b in a + 1..52 {
            for c in b + 1..52 {
                for d in c + 1..52 {
                    for e in d + 1..52 {
                        let five = [deck[a], deck[b], deck[c], deck[d], deck[e]];
                        let naive = naive5(five);
                        naive_counts[naive.category as usize] += 1;
                        let score = score_hand([five[0], five[1]], &five[2..]).unwrap();
                        lib_counts[category_index(score.category) as usize] += 1;
                    }
                }
            }
        }
    }
    // High card, pair, two pair, trips, straight, flush, full house, quads,
    // straight flush.
    let expected: [u64; 9] = [
        1_302_540, 1_098_240, 123_552, 54_912, 10_200, 5_108, 3_744, 624, 40,
    ];
    assert_eq!(lib_counts, expected);
    assert_eq!(naive_counts, expected);
    assert_eq!(expected.iter().sum::<u64>(), 2_598_960);
}

/// 100,000 random seven-card hands: identical categories, and the two
/// orderings are isomorphic (checked along the naive-sorted chain).
#[test]
fn seven_card_scores_match_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ca9d5);
    let mut deck = deck();
    let mut pairs: Vec<(NaiveScore, u32)> = Vec::with_capacity(100_000);
    for _ in 0..100_000 {
        deck.partial_shuffle(&mut rng, 7);
        let seven: [Card; 7] = deck[..7].try_into().unwrap();
        let naive = naive7(seven);
        let score = score7(seven);
        assert_eq!(
            category_index(score.category),
            naive.category,
            "category mismatch on {seven:?}"
        );
        pairs.push((naive, score.ordinal));
    }
    pairs.sort_unstable();
    for w in pairs.windows(2) {
        let ((na, oa), (nb, ob)) = (w[0], w[1]);
        if na == nb {
            assert_eq!(oa, ob, "tie in oracle but not in ordinal");
        } else {
            assert!(
                oa < ob,
                "oracle order {na:?} < {nb:?} but ordinals {oa} >= {ob}"
            );
        }
    }
}

/// Head-to-head dominance: on a shared board, the comparator must pick the
/// same winner as the subset oracle.
#[test]
fn showdown_winner_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd011);
    let mut deck = deck();
    for _ in 0..20_000 {
        deck.partial_shuffle(&mut rng, 9);
        let board: [Card; 5] = deck[..5].try_into().unwrap();
        let hole_a = [deck[5], deck[6]];
        let hole_b = [deck[7], deck[8]];
        let score_a = score_hand(hole_a, &board).unwrap();
        let score_b = score_hand(hole_b, &board).unwrap();
        let mut seven_a = [hole_a[0]; 7];
        seven_a[..2].copy_from_slice(&hole_a);
        seven_a[2..].copy_from_slice(&board);
        let mut seven_b = [hole_b[0]; 7];
        seven_b[..2].copy_from_slice(&hole_b);
        seven_b[2..].copy_from_slice(&board);
        assert_eq!(
            compare(score_a, score_b),
            naive7(seven_a).cmp(&naive7(seven_b)),
            "winner mismatch: {hole_a:?} vs {hole_b:?} on {board:?}"
        );
    }
}

fn cards(s: &str) -> Vec<Card> {
    s.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

#[test]
fn category_ladder_examples() {
    let sf = score_hand([cards("As")[0], cards("Ks")[0]], &cards("Qs Js Ts 2h 3d")).unwrap();
    assert_eq!(sf.category, HandCategory::StraightFlush);

    let quads = score_hand([cards("Ah")[0], cards("Ad")[0]], &cards("Ac As Kh 2s 3d")).unwrap();
    assert_eq!(quads.category, HandCategory::FourOfAKind);
    assert_eq!(compare(sf, quads), Ordering::Greater);

    let boat = score_hand([cards("Kc")[0], cards("Kd")[0]], &cards("Ac As Kh 2s 3d")).unwrap();
    assert_eq!(boat.category, HandCategory::FullHouse);
    assert_eq!(compare(quads, boat), Ordering::Greater);
}

#[test]
fn board_straight_splits_exactly() {
    let board = cards("Qh Jh Th 2c 2d");
    let a = score_hand([cards("Ah")[0], cards("Kd")[0]], &board).unwrap();
    let b = score_hand([cards("As")[0], cards("Kc")[0]], &board).unwrap();
    assert_eq!(compare(a, b), Ordering::Equal);
    assert_eq!(a.category, HandCategory::Straight);
}

#[test]
fn bundled_table_is_a_bijection_over_all_holes() {
    let table = PreflopTable::bundled();
    assert_eq!(table.classes().len(), 169);

    let mut seen_ranks = vec![false; 170];
    for class in table.classes() {
        assert!(
            (1..=169).contains(&class.rank),
            "rank {} out of range",
            class.rank
        );
        assert!(!seen_ranks[class.rank as usize], "duplicate rank");
        seen_ranks[class.rank as usize] = true;
    }

    // Every unordered two-card combination lands in exactly one class, with
    // the multiplicities forced by suit counting: 6 per pair, 4 per suited,
    // 12 per offsuit class.
    let deck = deck();
    let mut hits = vec![0u32; 170];
    for i in 0..52 {
        for j in i + 1..52 {
            let class = table.class_for([deck[i], deck[j]]);
            hits[class.rank as usize] += 1;
        }
    }
    let mut total = 0u32;
    for class in table.classes() {
        let expected = if class.is_pair() {
            6
        } else if class.suited {
            4
        } else {
            12
        };
        assert_eq!(
            hits[class.rank as usize],
            expected,
            "class {}",
            class.label()
        );
        total += expected;
    }
    assert_eq!(total, 1326);
}

#[test]
fn bundled_ranking_matches_known_equities() {
    let table = PreflopTable::bundled();
    assert_eq!(table.by_rank(1).label(), "AA");

    // Anchors from independently published all-in equity tables (win plus
    // half of ties against one uniform random hand).
    for (label, equity) in [
        ("AA", 0.8520),
        ("KK", 0.8240),
        ("AKs", 0.6704),
        ("22", 0.5033),
        ("72o", 0.3458),
        ("32o", 0.3230),
    ] {
        let class = table.by_label(label).unwrap();
        assert!(
            (class.equity - equity).abs() < 1e-3,
            "{label}: table {} vs published {equity}",
            class.equity
        );
    }

    let seven_deuce = table.by_label("72o").unwrap();
    assert!(seven_deuce.rank > 164, "72o rank {}", seven_deuce.rank);

    // Stored in rank order with non-increasing equity.
    for pair in table.classes().windows(2) {
        assert_eq!(pair[1].rank, pair[0].rank + 1);
        assert!(pair[1].equity <= pair[0].equity);
    }
}

/// Monte Carlo re-measurement of a few bundled equities. 100,000 trials put
/// the standard error near 0.0015, so 0.006 is a four-sigma tolerance.
#[test]
fn bundled_equities_match_monte_carlo() {
    let table = PreflopTable::bundled();
    let mut rng = ChaCha8Rng::seed_from_u64(0xe517);
    for hole_text in ["As Ah", "Js Ts", "3c 2d"] {
        let hole: [Card; 2] = [cards(hole_text)[0], cards(hole_text)[1]];
        let expected = table.class_for(hole).equity;

        let mut rest: Vec<Card> = deck()
            .into_iter()
            .filter(|c| *c != hole[0] && *c != hole[1])
            .collect();
        let trials = 100_000u64;
        let mut tally = 0u64; // two per win, one per tie
        for _ in 0..trials {
            rest.partial_shuffle(&mut rng, 7);
            let villain = [rest[0], rest[1]];
            let board = &rest[2..7];
            let hero_score = score_hand(hole, board).unwrap();
            let villain_score = score_hand(villain, board).unwrap();
            tally += match compare(hero_score, villain_score) {
                Ordering::Greater => 2,
                Ordering::Equal => 1,
                Ordering::Less => 0,
            };
        }
        let measured = tally as f64 / (2 * trials) as f64;
        assert!(
            (measured - expected).abs() < 0.006,
            "{hole_text}: measured {measured} vs bundled {expected}"
        );
    }
}

#[test]
fn preflop_scores_rank_the_full_scale() {
    let table = PreflopTable::bundled();
    let aces = score_hand([cards("As")[0], cards("Ah")[0]], &[]).unwrap();
    assert_eq!(aces.ordinal, 169);
    let worst = score_hand([cards("3c")[0], cards("2d")[0]], &[]).unwrap();
    assert_eq!(worst.ordinal, 1);
    assert_eq!(compare(aces, worst), Ordering::Greater);

    for class in table.classes() {
        let rep = if class.is_pair() {
            [
                Card::new(class.high, Suit::Clubs).unwrap(),
                Card::new(class.high, Suit::Diamonds).unwrap(),
            ]
        } else if class.suited {
            [
                Card::new(class.high, Suit::Clubs).unwrap(),
                Card::new(class.low, Suit::Clubs).unwrap(),
            ]
        } else {
            [
                Card::new(class.high, Suit::Clubs).unwrap(),
                Card::new(class.low, Suit::Diamonds).unwrap(),
            ]
        };
        let score = table.score_for(rep);
        assert_eq!(score.ordinal, 170 - class.rank as u32);
    }

    // Suitedness splits classes.
    let suited = table.class_for([cards("As")[0], cards("Ks")[0]]);
    let offsuit = table.class_for([cards("As")[0], cards("Kh")[0]]);
    assert!(suited.suited && !offsuit.suited);
    assert_ne!(suited.rank, offsuit.rank);
}

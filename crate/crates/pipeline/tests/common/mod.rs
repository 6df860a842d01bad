#![allow(dead_code)]

use handeval::{score_hand, Card};
use handparse::{parse_stream, HandRecord};
use std::cmp::Ordering;

pub fn dollars(cents: u64) -> String {
    format!("{}.{:02}", cents / 100, cents % 100)
}

pub fn hole(s: &str) -> [Card; 2] {
    let mut it = s.split_whitespace().map(|c| c.parse().unwrap());
    [it.next().unwrap(), it.next().unwrap()]
}

fn header(id: u64, blind: u64, players: &[&str]) -> String {
    let mut text = format!(
        "PokerStars Hand #{id}:  Hold'em No Limit (${}/${} USD) - 2026/03/01 12:00:00 ET\n\
         Table 'Testa' 6-max Seat #1 is the button\n",
        dollars(blind / 2),
        dollars(blind),
    );
    for (i, p) in players.iter().enumerate() {
        text.push_str(&format!("Seat {}: {p} ($200.00 in chips)\n", i + 1));
    }
    text
}

fn blinds(sb_player: &str, bb_player: &str, blind: u64) -> String {
    format!(
        "{sb_player}: posts small blind ${}\n{bb_player}: posts big blind ${}\n",
        dollars(blind / 2),
        dollars(blind),
    )
}

fn summary(pot: u64, rake: u64) -> String {
    format!(
        "*** SUMMARY ***\nTotal pot ${} | Rake ${}\n",
        dollars(pot),
        dollars(rake),
    )
}

/// Both players limp in and check the hand down to a showdown. The winner
/// is computed from the cards so the collected lines stay coherent.
pub fn showdown_limp(
    id: u64,
    blind: u64,
    sb_player: &str,
    bb_player: &str,
    sb_cards: &str,
    bb_cards: &str,
    board: [&str; 5],
    rake: u64,
) -> String {
    let pot = 2 * blind;
    let full: Vec<Card> = board.iter().map(|c| c.parse().unwrap()).collect();
    let sb_score = score_hand(hole(sb_cards), &full).unwrap();
    let bb_score = score_hand(hole(bb_cards), &full).unwrap();
    let paid = pot - rake;
    let collected = match sb_score.cmp(&bb_score) {
        Ordering::Greater => vec![(sb_player, paid)],
        Ordering::Less => vec![(bb_player, paid)],
        Ordering::Equal => vec![(sb_player, paid - paid / 2), (bb_player, paid / 2)],
    };

    let mut text = header(id, blind, &[sb_player, bb_player]);
    text.push_str(&blinds(sb_player, bb_player, blind));
    text.push_str("*** HOLE CARDS ***\n");
    text.push_str(&format!(
        "{sb_player}: calls ${}\n{bb_player}: checks\n",
        dollars(blind - blind / 2),
    ));
    text.push_str(&format!(
        "*** FLOP *** [{} {} {}]\n{bb_player}: checks\n{sb_player}: checks\n",
        board[0], board[1], board[2],
    ));
    text.push_str(&format!(
        "*** TURN *** [{} {} {}] [{}]\n{bb_player}: checks\n{sb_player}: checks\n",
        board[0], board[1], board[2], board[3],
    ));
    text.push_str(&format!(
        "*** RIVER *** [{} {} {} {}] [{}]\n{bb_player}: checks\n{sb_player}: checks\n",
        board[0], board[1], board[2], board[3], board[4],
    ));
    text.push_str("*** SHOW DOWN ***\n");
    text.push_str(&format!("{sb_player}: shows [{sb_cards}]\n"));
    text.push_str(&format!("{bb_player}: shows [{bb_cards}]\n"));
    for (p, amount) in collected {
        text.push_str(&format!("{p} collected ${} from pot\n", dollars(amount)));
    }
    text.push_str(&summary(pot, rake));
    text
}

/// The small blind raises preflop and the big blind folds.
pub fn raise_fold(id: u64, blind: u64, sb_player: &str, bb_player: &str, raise_to: u64) -> String {
    assert!(raise_to > blind);
    let pot = 2 * blind;
    let mut text = header(id, blind, &[sb_player, bb_player]);
    text.push_str(&blinds(sb_player, bb_player, blind));
    text.push_str("*** HOLE CARDS ***\n");
    text.push_str(&format!(
        "{sb_player}: raises ${} to ${}\n{bb_player}: folds\n",
        dollars(raise_to - blind),
        dollars(raise_to),
    ));
    text.push_str(&format!(
        "Uncalled bet (${}) returned to {sb_player}\n",
        dollars(raise_to - blind),
    ));
    text.push_str(&format!(
        "{sb_player} collected ${} from pot\n",
        dollars(pot),
    ));
    text.push_str(&summary(pot, 0));
    text
}

/// The small blind folds to the big blind immediately.
pub fn fold_to_blind(id: u64, blind: u64, sb_player: &str, bb_player: &str) -> String {
    let pot = 2 * (blind / 2);
    let mut text = header(id, blind, &[sb_player, bb_player]);
    text.push_str(&blinds(sb_player, bb_player, blind));
    text.push_str("*** HOLE CARDS ***\n");
    text.push_str(&format!("{sb_player}: folds\n"));
    text.push_str(&format!(
        "Uncalled bet (${}) returned to {bb_player}\n",
        dollars(blind - blind / 2),
    ));
    text.push_str(&format!(
        "{bb_player} collected ${} from pot\n",
        dollars(pot),
    ));
    text.push_str(&summary(pot, 0));
    text
}

/// Limp preflop, then the big blind bets the flop; the small blind either
/// calls down to a showdown (checked turn and river) or folds at once.
pub fn flop_bet_hand(
    id: u64,
    blind: u64,
    sb_player: &str,
    bb_player: &str,
    sb_cards: &str,
    bb_cards: &str,
    board: [&str; 5],
    bet: u64,
    sb_calls: bool,
) -> String {
    let mut text = header(id, blind, &[sb_player, bb_player]);
    text.push_str(&blinds(sb_player, bb_player, blind));
    text.push_str("*** HOLE CARDS ***\n");
    text.push_str(&format!(
        "{sb_player}: calls ${}\n{bb_player}: checks\n",
        dollars(blind - blind / 2),
    ));
    text.push_str(&format!(
        "*** FLOP *** [{} {} {}]\n{bb_player}: bets ${}\n",
        board[0],
        board[1],
        board[2],
        dollars(bet),
    ));
    if sb_calls {
        let pot = 2 * blind + 2 * bet;
        let full: Vec<Card> = board.iter().map(|c| c.parse().unwrap()).collect();
        let sb_score = score_hand(hole(sb_cards), &full).unwrap();
        let bb_score = score_hand(hole(bb_cards), &full).unwrap();
        assert_ne!(
            sb_score.cmp(&bb_score),
            Ordering::Equal,
            "pick untied cards"
        );
        let winner = if sb_score > bb_score {
            sb_player
        } else {
            bb_player
        };
        text.push_str(&format!("{sb_player}: calls ${}\n", dollars(bet)));
        text.push_str(&format!(
            "*** TURN *** [{} {} {}] [{}]\n{bb_player}: checks\n{sb_player}: checks\n",
            board[0], board[1], board[2], board[3],
        ));
        text.push_str(&format!(
            "*** RIVER *** [{} {} {} {}] [{}]\n{bb_player}: checks\n{sb_player}: checks\n",
            board[0], board[1], board[2], board[3], board[4],
        ));
        text.push_str("*** SHOW DOWN ***\n");
        text.push_str(&format!("{sb_player}: shows [{sb_cards}]\n"));
        text.push_str(&format!("{bb_player}: shows [{bb_cards}]\n"));
        text.push_str(&format!("{winner} collected ${} from pot\n", dollars(pot)));
        text.push_str(&summary(pot, 0));
    } else {
        let pot = 2 * blind;
        text.push_str(&format!("{sb_player}: folds\n"));
        text.push_str(&format!(
            "Uncalled bet (${}) returned to {bb_player}\n",
            dollars(bet),
        ));
        text.push_str(&format!(
            "{bb_player} collected ${} from pot\n",
            dollars(pot),
        ));
        text.push_str(&summary(pot, 0));
    }
    text
}

/// A three-seat hand: the cutoff calls, the blinds fold around, the big
/// blind takes it with a flop bet. Feeds the ledger but never the
/// observation extractor.
pub fn three_way(id: u64, blind: u64, players: [&str; 3], board3: [&str; 3]) -> String {
    let [sb_player, bb_player, co_player] = players;
    let pot = blind / 2 + 2 * blind;
    let mut text = header(id, blind, &[sb_player, bb_player, co_player]);
    text.push_str(&blinds(sb_player, bb_player, blind));
    text.push_str("*** HOLE CARDS ***\n");
    text.push_str(&format!("{co_player}: calls ${}\n", dollars(blind)));
    text.push_str(&format!("{sb_player}: folds\n{bb_player}: checks\n"));
    text.push_str(&format!(
        "*** FLOP *** [{} {} {}]\n{bb_player}: bets ${}\n{co_player}: folds\n",
        board3[0],
        board3[1],
        board3[2],
        dollars(blind),
    ));
    text.push_str(&format!(
        "Uncalled bet (${}) returned to {bb_player}\n",
        dollars(blind),
    ));
    text.push_str(&format!(
        "{bb_player} collected ${} from pot\n",
        dollars(pot),
    ));
    text.push_str(&summary(pot, 0));
    text
}

/// A deterministic mixed corpus. At the 100-cent level: alice wins every
/// showdown (shark), bob bleeds the most, carol loses moderately, dave loses
/// least; each also appears in the big blind so every skill group shows up
/// as the focal player. Adds 50-cent hands, a three-seat hand, one hand at a
/// level that cannot be fitted (25) and one at a nonstandard level (30).
pub fn corpus_text() -> String {
    let mut hands: Vec<String> = Vec::new();
    let mut id = 9000;
    let mut next = || {
        id += 1;
        id
    };

    let quiet = ["2c", "7d", "9s", "3h", "5d"];
    let quiet2 = ["2d", "8c", "Qs", "3c", "6h"];

    // Alice beats each opponent twice from each blind seat.
    for villain in ["bob", "carol", "dave"] {
        hands.push(showdown_limp(
            next(),
            100,
            "alice",
            villain,
            "As Ad",
            "Kh Qh",
            quiet,
            5,
        ));
        hands.push(showdown_limp(
            next(),
            100,
            villain,
            "alice",
            "Kh Qh",
            "As Ad",
            quiet2,
            5,
        ));
        hands.push(flop_bet_hand(
            next(),
            100,
            "alice",
            villain,
            "As Ad",
            "Kh Qh",
            quiet,
            100,
            true,
        ));
        hands.push(flop_bet_hand(
            next(),
            100,
            villain,
            "alice",
            "Kh Qh",
            "As Ad",
            quiet2,
            100,
            true,
        ));
    }
    // Bob pays extra through raise-folds and bet-folds.
    hands.push(raise_fold(next(), 100, "alice", "bob", 300));
    hands.push(flop_bet_hand(
        next(),
        100,
        "bob",
        "alice",
        "Kh Qh",
        "As Ad",
        quiet,
        200,
        true,
    ));
    hands.push(flop_bet_hand(
        next(),
        100,
        "bob",
        "carol",
        "Th 4h",
        "Jc 9c",
        quiet,
        150,
        false,
    ));
    // Dave gets a couple of walks back.
    hands.push(fold_to_blind(next(), 100, "carol", "dave"));
    hands.push(fold_to_blind(next(), 100, "bob", "dave"));
    // A showdown that bob wins to keep his sample mixed.
    hands.push(showdown_limp(
        next(),
        100,
        "bob",
        "dave",
        "Js Jd",
        "9h 8h",
        quiet,
        0,
    ));

    // 50-cent level.
    hands.push(showdown_limp(
        next(),
        50,
        "alice",
        "bob",
        "Qs Qd",
        "Ah 9h",
        quiet,
        0,
    ));
    hands.push(showdown_limp(
        next(),
        50,
        "bob",
        "alice",
        "Ah 6h",
        "Qs Qd",
        quiet,
        0,
    ));
    hands.push(raise_fold(next(), 50, "alice", "carol", 150));
    hands.push(flop_bet_hand(
        next(),
        50,
        "carol",
        "alice",
        "9c 8c",
        "Ks Kd",
        quiet,
        50,
        true,
    ));

    // Ledger-only and edge hands.
    hands.push(three_way(
        next(),
        100,
        ["alice", "bob", "carol"],
        ["2c", "7d", "9s"],
    ));
    hands.push(raise_fold(next(), 25, "alice", "bob", 75));
    hands.push(raise_fold(next(), 30, "carol", "dave", 90));

    hands.join("\n")
}

pub fn corpus() -> Vec<HandRecord> {
    let outcome = parse_stream(&corpus_text());
    assert!(
        outcome.failures.is_empty(),
        "corpus must parse: {:?}",
        outcome.failures,
    );
    outcome.records
}

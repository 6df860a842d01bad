use crate::error::{ParseError, Result};
use crate::record::{ActionKind, ActionRecord, HandRecord, Reveal, Seat, Street, StreetName};
use handeval::Card;
use std::collections::BTreeMap;

/// Parses one hand transcript (the text between blank-line separators).
/// `line_offset` is the number of lines preceding this block in the source,
/// so reported line numbers are absolute and 1-based.
pub fn parse_hand(text: &str, line_offset: usize) -> Result<HandRecord> {
    Parser::new(text, line_offset).run()
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
enum Section {
    Actions,
    Showdown,
    Summary,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, line_offset: usize) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (line_offset + i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Parser { lines, pos: 0 }
    }

    fn run(mut self) -> Result<HandRecord> {
        let (header_line, header) = *self.lines.first().ok_or(ParseError::TruncatedHand {
            reason: "empty hand block".into(),
        })?;
        self.pos = 1;
        let (hand_id, blind_cents, timestamp) = parse_header(header_line, header)?;

        let mut seats: Vec<Seat> = Vec::new();
        let mut streets = vec![Street {
            name: StreetName::Preflop,
            board: Vec::new(),
            actions: Vec::new(),
        }];
        let mut showdown: Vec<Reveal> = Vec::new();
        let mut pot_rake: Option<(u64, u64)> = None;
        let mut section = Section::Actions;
        let mut uncalled: BTreeMap<String, u64> = BTreeMap::new();
        let mut collected: BTreeMap<String, u64> = BTreeMap::new();

        while self.pos < self.lines.len() {
            let (no, line) = self.lines[self.pos];
            self.pos += 1;
            let trimmed = line.trim();

            if let Some(marker) = street_marker(trimmed) {
                match marker {
                    Marker::HoleCards => {}
                    Marker::Unknown => {
                        return Err(malformed(no, "unsupported section marker"));
                    }
                    Marker::Street(name) => {
                        let board = last_bracket_cards(no, trimmed)?;
                        streets.push(Street {
                            name,
                            board,
                            actions: Vec::new(),
                        });
                        section = Section::Actions;
                    }
                    Marker::Showdown => section = Section::Showdown,
                    Marker::Summary => section = Section::Summary,
                }
                continue;
            }

            if section == Section::Summary {
                if let Some(rest) = trimmed.strip_prefix("Total pot ") {
                    pot_rake = Some(parse_pot_line(no, rest)?);
                }
                // Seat results and the board recap carry no new information.
                continue;
            }

            if trimmed.starts_with("Seat ") && seats_open(&streets) {
                if let Some(seat) = parse_seat(no, trimmed)? {
                    seats.push(seat);
                }
                continue;
            }

            if let Some(rest) = trimmed.strip_prefix("Uncalled bet (") {
                let (no_amt, rest) = (no, rest);
                let close = rest
                    .find(')')
                    .ok_or_else(|| malformed(no_amt, "unclosed amount"))?;
                let amount = money(no_amt, &rest[..close])?;
                let player = rest[close + 1..]
                    .strip_prefix(" returned to ")
                    .ok_or_else(|| malformed(no_amt, "missing return recipient"))?;
                *uncalled.entry(player.trim().to_string()).or_insert(0) += amount;
                continue;
            }

            if let Some((player, amount)) = parse_collected(no, trimmed)? {
                *collected.entry(player).or_insert(0) += amount;
                continue;
            }

            if trimmed.starts_with("Dealt to ") || trimmed.starts_with("Table ") {
                continue;
            }

            if let Some((player, rest)) = split_actor(trimmed, &seats) {
                match classify_action(no, player, rest, section)? {
                    Classified::Action(action) => streets.last_mut().unwrap().actions.push(action),
                    Classified::Reveal(reveal) => showdown.push(reveal),
                    Classified::Noise => {}
                }
                continue;
            }
            // Table chatter, join/leave notices and similar lines for players
            // who never took a seat are dropped.
        }

        let (pot_cents, rake_cents) = pot_rake.ok_or(ParseError::TruncatedHand {
            reason: format!("hand {hand_id} has no pot summary"),
        })?;

        let record = HandRecord {
            hand_id,
            timestamp,
            blind_cents,
            seats,
            streets,
            showdown,
            pot_cents,
            rake_cents,
        };
        record.validate()?;
        cross_check(&record, &uncalled, &collected)?;
        Ok(record)
    }
}

/// Explicit log lines must agree with the replayed flows: uncalled-bet
/// refunds match computed returns, and collections sum to pot minus rake.
fn cross_check(
    record: &HandRecord,
    uncalled: &BTreeMap<String, u64>,
    collected: &BTreeMap<String, u64>,
) -> Result<()> {
    let flows = record.flows()?;
    for (player, &amount) in uncalled {
        let computed = flows.returns.get(player).copied().unwrap_or(0);
        if computed != amount {
            return Err(ParseError::ChipImbalance {
                reason: format!(
                    "log returns {amount} to {player} but the replay returns {computed}"
                ),
            });
        }
    }
    if !collected.is_empty() {
        let total: u64 = collected.values().sum();
        let payout = record.pot_cents - record.rake_cents;
        if total != payout {
            return Err(ParseError::ChipImbalance {
                reason: format!("collections total {total} but pot minus rake is {payout}"),
            });
        }
    }
    Ok(())
}

fn malformed(line: usize, reason: &str) -> ParseError {
    ParseError::MalformedLine {
        line,
        reason: reason.to_string(),
    }
}

fn parse_header(line: usize, header: &str) -> Result<(String, u64, String)> {
    let bad = |reason: &str| ParseError::MalformedHeader {
        line,
        reason: reason.to_string(),
    };
    if !header.contains("Hold'em No Limit") {
        return Err(bad("not a no-limit hold'em hand"));
    }
    let hash = header.find('#').ok_or_else(|| bad("missing hand id"))?;
    let after = &header[hash + 1..];
    let colon = after.find(':').ok_or_else(|| bad("missing hand id"))?;
    let hand_id = after[..colon].trim().to_string();
    if hand_id.is_empty() || !hand_id.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad("hand id is not numeric"));
    }

    let open = header.find("($").ok_or_else(|| bad("missing stakes"))?;
    let close = header[open..]
        .find(')')
        .map(|i| open + i)
        .ok_or_else(|| bad("unclosed stakes"))?;
    let stakes = &header[open + 1..close];
    let mut parts = stakes.split('/');
    let _small = parts
        .next()
        .and_then(|s| parse_money(s))
        .ok_or_else(|| bad("unreadable small blind"))?;
    let big_raw = parts.next().ok_or_else(|| bad("missing big blind"))?;
    let big_token = big_raw.split_whitespace().next().unwrap_or("");
    let blind_cents = parse_money(big_token).ok_or_else(|| bad("unreadable big blind"))?;

    let dash = header[close..]
        .find(" - ")
        .map(|i| close + i)
        .ok_or_else(|| bad("missing timestamp"))?;
    let timestamp = header[dash + 3..].trim().to_string();
    if timestamp.is_empty() {
        return Err(bad("empty timestamp"));
    }
    Ok((hand_id, blind_cents, timestamp))
}

/// Seat lines only count before any community cards or showdown: the summary
/// also prints `Seat N:` lines, but those arrive in the summary section.
fn seats_open(streets: &[Street]) -> bool {
    streets.len() == 1
}

fn parse_seat(line: usize, text: &str) -> Result<Option<Seat>> {
    let rest = text.strip_prefix("Seat ").unwrap();
    let colon = rest
        .find(':')
        .ok_or_else(|| malformed(line, "seat without colon"))?;
    let number: u8 = rest[..colon]
        .trim()
        .parse()
        .map_err(|_| malformed(line, "unreadable seat number"))?;
    let tail = rest[colon + 1..].trim();
    // The stack is the last parenthesized dollar group, so names containing
    // " ($" still parse.
    let open = match tail.rfind(" ($") {
        Some(i) => i,
        None => return Ok(None), // e.g. "Seat #3 is the button" variants
    };
    let player = tail[..open].trim().to_string();
    let inner = &tail[open + 2..];
    let close = inner
        .find(')')
        .ok_or_else(|| malformed(line, "unclosed stack"))?;
    let stack_text = inner[..close].trim_end_matches(" in chips").trim();
    let stack_cents = parse_money(stack_text).ok_or_else(|| malformed(line, "unreadable stack"))?;
    if player.is_empty() {
        return Err(malformed(line, "empty player name"));
    }
    Ok(Some(Seat {
        player,
        seat: number,
        stack_cents,
    }))
}

enum Marker {
    HoleCards,
    Street(StreetName),
    Showdown,
    Summary,
    Unknown,
}

fn street_marker(line: &str) -> Option<Marker> {
    if !line.starts_with("*** ") {
        return None;
    }
    if line.starts_with("*** HOLE CARDS ***") {
        Some(Marker::HoleCards)
    } else if line.starts_with("*** FLOP ***") {
        Some(Marker::Street(StreetName::Flop))
    } else if line.starts_with("*** TURN ***") {
        Some(Marker::Street(StreetName::Turn))
    } else if line.starts_with("*** RIVER ***") {
        Some(Marker::Street(StreetName::River))
    } else if line.starts_with("*** SHOW DOWN ***") {
        Some(Marker::Showdown)
    } else if line.starts_with("*** SUMMARY ***") {
        Some(Marker::Summary)
    } else {
        // FIRST/SECOND run markers and similar exotica: fail loudly rather
        // than fold their actions into the previous street.
        Some(Marker::Unknown)
    }
}

/// The newly dealt cards are the last bracket group: turn and river markers
/// repeat the running board first.
fn last_bracket_cards(line: usize, text: &str) -> Result<Vec<Card>> {
    let open = text
        .rfind('[')
        .ok_or_else(|| malformed(line, "street marker without cards"))?;
    let close = text[open..]
        .find(']')
        .map(|i| open + i)
        .ok_or_else(|| malformed(line, "unclosed card group"))?;
    text[open + 1..close]
        .split_whitespace()
        .map(|tok| {
            tok.parse::<Card>()
                .map_err(|e| malformed(line, &format!("bad card {tok}: {e}")))
        })
        .collect()
}

fn parse_collected(line: usize, text: &str) -> Result<Option<(String, u64)>> {
    // "NAME collected $12.50 from pot" (also "from main pot" in split pots).
    let Some(idx) = text.find(" collected ") else {
        return Ok(None);
    };
    let rest = &text[idx + " collected ".len()..];
    if !rest.contains("from") {
        return Ok(None);
    }
    let amount_tok = rest.split_whitespace().next().unwrap_or("");
    let amount = money(line, amount_tok)?;
    Ok(Some((text[..idx].trim().to_string(), amount)))
}

/// Splits "NAME: rest" when NAME is a seated player. Names may themselves
/// contain ": ", so the longest seated-player prefix wins.
fn split_actor<'a>(line: &'a str, seats: &[Seat]) -> Option<(&'a str, &'a str)> {
    let mut best: Option<(&str, &str)> = None;
    for seat in seats {
        let prefix_len = seat.player.len();
        if line.len() > prefix_len + 1
            && line.starts_with(seat.player.as_str())
            && line[prefix_len..].starts_with(':')
        {
            let rest = line[prefix_len + 1..].trim_start();
            if best.map(|(p, _)| p.len() < prefix_len).unwrap_or(true) {
                best = Some((&line[..prefix_len], rest));
            }
        }
    }
    best
}

enum Classified {
    Action(ActionRecord),
    Reveal(Reveal),
    Noise,
}

fn classify_action(line: usize, player: &str, rest: &str, section: Section) -> Result<Classified> {
    let action = |kind, amount_cents| {
        Ok(Classified::Action(ActionRecord {
            player: player.to_string(),
            kind,
            amount_cents,
        }))
    };
    if rest == "folds" || rest.starts_with("folds ") {
        return action(ActionKind::Fold, 0);
    }
    if rest == "checks" {
        return action(ActionKind::Check, 0);
    }
    if let Some(tail) = rest.strip_prefix("calls ") {
        let amount = money_head(line, tail)?;
        return action(ActionKind::Call, amount);
    }
    if let Some(tail) = rest.strip_prefix("bets ") {
        let amount = money_head(line, tail)?;
        return action(ActionKind::Bet, amount);
    }
    if let Some(tail) = rest.strip_prefix("raises ") {
        let to = tail
            .find(" to ")
            .ok_or_else(|| malformed(line, "raise without target"))?;
        let amount = money_head(line, &tail[to + 4..])?;
        return action(ActionKind::Raise, amount);
    }
    if rest.starts_with("posts ") {
        // Small blind, big blind, both, or an ante: all forced chips. The
        // amount is the first money token ("... $0.50 and is all-in" puts
        // trailing words after it).
        let amount = rest
            .split_whitespace()
            .find_map(parse_money)
            .ok_or_else(|| malformed(line, "post without amount"))?;
        return action(ActionKind::PostBlind, amount);
    }
    if let Some(tail) = rest.strip_prefix("shows [") {
        if section == Section::Showdown {
            let close = tail
                .find(']')
                .ok_or_else(|| malformed(line, "unclosed show group"))?;
            let cards: Vec<Card> = tail[..close]
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<Card>()
                        .map_err(|e| malformed(line, &format!("bad card {tok}: {e}")))
                })
                .collect::<Result<_>>()?;
            let [a, b] = cards[..] else {
                return Err(malformed(line, "show is not two cards"));
            };
            return Ok(Classified::Reveal(Reveal {
                player: player.to_string(),
                cards: [a, b],
            }));
        }
        // Pre-showdown exposures ("shows [Ah]" when folding to a bet) do not
        // establish a full starting hand.
        return Ok(Classified::Noise);
    }
    const NOISE: [&str; 12] = [
        "said,",
        "mucks",
        "doesn't show",
        "sits out",
        "is sitting out",
        "has timed out",
        "is disconnected",
        "is connected",
        "leaves the table",
        "joins the table",
        "was removed from the table",
        "has returned",
    ];
    if NOISE.iter().any(|p| rest.starts_with(p)) {
        return Ok(Classified::Noise);
    }
    let verb = rest.split_whitespace().next().unwrap_or("").to_string();
    Err(ParseError::UnknownActionVerb { line, verb })
}

fn parse_pot_line(line: usize, rest: &str) -> Result<(u64, u64)> {
    // "Total pot $1.50 | Rake $0.07", possibly with main/side pot detail
    // between the total and the separator.
    let bar = rest
        .find('|')
        .ok_or_else(|| malformed(line, "pot summary without rake"))?;
    let pot_tok = rest[..bar].split_whitespace().next().unwrap_or("");
    let pot = money(line, pot_tok)?;
    let rake_part = rest[bar + 1..].trim();
    let rake_tok = rake_part
        .strip_prefix("Rake ")
        .ok_or_else(|| malformed(line, "missing rake"))?
        .split_whitespace()
        .next()
        .unwrap_or("");
    let rake = money(line, rake_tok)?;
    Ok((pot, rake))
}

fn money_head(line: usize, text: &str) -> Result<u64> {
    let tok = text.split_whitespace().next().unwrap_or("");
    money(line, tok)
}

fn money(line: usize, token: &str) -> Result<u64> {
    parse_money(token).ok_or_else(|| malformed(line, &format!("unreadable amount {token:?}")))
}

/// "$1,234.56" or "1234.5" or "$50" as integer cents.
pub fn parse_money(token: &str) -> Option<u64> {
    let cleaned: String = token
        .trim()
        .strip_prefix('$')
        .unwrap_or(token.trim())
        .replace(',', "");
    if cleaned.is_empty() {
        return None;
    }
    let (dollars, cents) = match cleaned.split_once('.') {
        None => (cleaned.as_str(), ""),
        Some((d, c)) => (d, c),
    };
    if !dollars.chars().all(|c| c.is_ascii_digit()) || dollars.is_empty() {
        return None;
    }
    if !cents.chars().all(|c| c.is_ascii_digit()) || cents.len() > 2 {
        return None;
    }
    let mut value: u64 = dollars.parse::<u64>().ok()?.checked_mul(100)?;
    let frac: u64 = match cents.len() {
        0 => 0,
        1 => cents.parse::<u64>().ok()? * 10,
        _ => cents.parse::<u64>().ok()?,
    };
    value = value.checked_add(frac)?;
    Some(value)
}

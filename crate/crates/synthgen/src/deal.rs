use handeval::Card;
use rand::Rng;

/// Cards a hand consumes: two per player and five for the board.
pub const DEAL_SIZE: usize = 9;

/// Draws nine distinct cards uniformly from a 52-card deck by running the
/// first nine steps of a Fisher-Yates shuffle. Order is the deal order:
/// hero's two, villain's two, then flop, turn, river.
pub fn deal(rng: &mut impl Rng) -> [Card; DEAL_SIZE] {
    let mut deck: [u8; 52] = std::array::from_fn(|i| i as u8);
    let mut out = [Card::from_index(0); DEAL_SIZE];
    for (i, slot) in out.iter_mut().enumerate() {
        let j = rng.gen_range(i..52);
        deck.swap(i, j);
        *slot = Card::from_index(deck[i] as usize);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn nine_cards_are_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let cards = deal(&mut rng);
            let mut seen = std::collections::BTreeSet::new();
            for card in cards {
                assert!(seen.insert(card.index()));
            }
        }
    }
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use synthgen::{deal, DEAL_SIZE};

#[test]
fn hero_cards_are_uniform_over_the_deck() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 100_000u32;
    let mut counts = [0u64; 52];
    for _ in 0..n {
        let cards = deal(&mut rng);
        counts[cards[0].index()] += 1;
        counts[cards[1].index()] += 1;
    }
    // Each card reaches the first two slots with chance 2/52; the bounds are
    // three binomial standard deviations around that at this sample size.
    for (index, &count) in counts.iter().enumerate() {
        let freq = count as f64 / n as f64;
        assert!(
            (0.03663..=0.04029).contains(&freq),
            "card {index} landed at {freq}"
        );
    }
}

proptest! {
    #[test]
    fn any_seed_deals_nine_distinct_cards(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cards = deal(&mut rng);
        let distinct: BTreeSet<usize> = cards.iter().map(|c| c.index()).collect();
        prop_assert_eq!(distinct.len(), DEAL_SIZE);
    }
}

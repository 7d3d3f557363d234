//! Shared inputs for the criterion benchmarks.

use fza_core::random::{random_enfa, random_nfa, RandomConfig};
use fza_core::{Enfa, Nfa};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

pub fn config(states: usize) -> RandomConfig {
    RandomConfig {
        max_states: states,
        ..RandomConfig::default()
    }
}

/// A batch of random NFAs with up to `states` states.
pub fn nfas(states: usize, count: usize) -> Vec<Nfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| random_nfa(&mut rng, &config(states)))
        .collect()
}

/// A batch of random ε-NFAs with up to `states` states.
pub fn enfas(states: usize, count: usize) -> Vec<Enfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| random_enfa(&mut rng, &config(states)))
        .collect()
}

/// All strings over `{a, b}` of exactly `len` symbols, in lexicographic order.
pub fn strings(len: usize) -> Vec<Vec<String>> {
    fza_core::oracle::strings_up_to(&["a".to_owned(), "b".to_owned()], len)
        .into_iter()
        .filter(|s| s.len() == len)
        .collect()
}

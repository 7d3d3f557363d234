#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use fza_core::random::{random_crisp_nfa, random_enfa, random_nfa, RandomConfig};
use fza_core::{CrispNfa, DistSet, Enfa, FuzzySet, Machine, Nfa};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 20_100_615;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load(name: &str) -> Machine {
    fza_core::format::parse(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(stream);
    rng
}

pub fn small_config() -> RandomConfig {
    RandomConfig {
        max_states: 4,
        symbols: 2,
        epsilon_density: 0.3,
        ..RandomConfig::default()
    }
}

pub fn nfa_corpus(n: usize) -> Vec<Nfa> {
    let mut rng = rng(1);
    (0..n)
        .map(|_| random_nfa(&mut rng, &small_config()))
        .collect()
}

pub fn enfa_corpus(n: usize) -> Vec<Enfa> {
    let mut rng = rng(2);
    (0..n)
        .map(|_| random_enfa(&mut rng, &small_config()))
        .collect()
}

pub fn crisp_corpus(n: usize) -> Vec<CrispNfa> {
    let mut rng = rng(3);
    (0..n)
        .map(|_| random_crisp_nfa(&mut rng, 5, 2, 0.35))
        .collect()
}

pub fn words(alphabet: &[String], max_len: usize) -> Vec<Vec<String>> {
    fza_core::oracle::strings_up_to(alphabet, max_len)
}

pub fn fs(pairs: &[(&str, &str)]) -> FuzzySet {
    FuzzySet::parse_pairs(pairs.iter().copied()).unwrap()
}

pub fn ds(members: &[&[(&str, &str)]]) -> DistSet {
    members.iter().map(|m| fs(m)).collect()
}

/// Textbook subset simulation of a crisp NFA.
pub fn crisp_accepts(m: &CrispNfa, input: &[String]) -> bool {
    let mut current: BTreeSet<&String> = BTreeSet::from([&m.initial]);
    for a in input {
        let mut next = BTreeSet::new();
        for q in current {
            if let Some(targets) = m.delta.get(&(q.clone(), a.clone())) {
                next.extend(targets.iter());
            }
        }
        current = next;
    }
    current.iter().any(|q| m.accepting.contains(*q))
}

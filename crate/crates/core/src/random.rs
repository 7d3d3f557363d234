//! Random machine generators for property tests and benchmarks.
//!
//! Degrees are drawn from a grid `{1/n, 2/n, …, 1}` (tenths by default) so
//! that generated machines share values and exercise deduplication.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::automata::{CrispNfa, Dfa, Enfa, MachineParts, Nfa, Transition};
use crate::fuzzy_set::FuzzySet;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomConfig {
    /// The state count is drawn from `1..=max_states`.
    pub max_states: usize,
    pub symbols: usize,
    /// Alternatives per nondeterministic cell are drawn from `0..=max_alternatives`.
    pub max_alternatives: usize,
    /// Probability that a state appears in a generated distribution.
    pub support_density: f64,
    /// Probability that a state has ε-moves at all.
    pub epsilon_density: f64,
    /// Probability that a state has a positive final degree.
    pub final_density: f64,
    /// Degrees are multiples of `1/grid`.
    pub grid: u64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            max_states: 4,
            symbols: 2,
            max_alternatives: 2,
            support_density: 0.4,
            epsilon_density: 0.3,
            final_density: 0.5,
            grid: 10,
        }
    }
}

/// A positive degree from `{1/grid, …, 1}`.
pub fn grid_value<R: Rng + ?Sized>(rng: &mut R, grid: u64) -> Value {
    Value::new(rng.gen_range(1..=grid.max(1)), grid.max(1)).expect("grid value")
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

fn symbol_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let c = char::from(b'a' + (i % 26) as u8);
            if i < 26 {
                c.to_string()
            } else {
                format!("{c}{}", i / 26)
            }
        })
        .collect()
}

fn random_dist<R: Rng + ?Sized>(
    rng: &mut R,
    states: &[String],
    cfg: &RandomConfig,
    density: f64,
) -> FuzzySet {
    let mut pairs = Vec::new();
    for q in states {
        if rng.gen_bool(density) {
            pairs.push((q.clone(), grid_value(rng, cfg.grid)));
        }
    }
    FuzzySet::from_pairs(pairs).expect("distinct generated names")
}

fn random_parts<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomConfig) -> MachineParts {
    let states = state_names(rng.gen_range(1..=cfg.max_states.max(1)));
    let alphabet = symbol_names(cfg.symbols);
    let final_set = random_dist(rng, &states, cfg, cfg.final_density);
    let mut transitions = Vec::new();
    for q in &states {
        for a in &alphabet {
            for _ in 0..rng.gen_range(0..=cfg.max_alternatives) {
                transitions.push(Transition::new(
                    q.clone(),
                    a.clone(),
                    random_dist(rng, &states, cfg, cfg.support_density),
                ));
            }
        }
    }
    MachineParts {
        initial: states[0].clone(),
        states,
        alphabet,
        final_set,
        transitions,
    }
}

pub fn random_nfa<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomConfig) -> Nfa {
    Nfa::new(random_parts(rng, cfg)).expect("generated machine is valid")
}

pub fn random_enfa<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomConfig) -> Enfa {
    let mut parts = random_parts(rng, cfg);
    for q in parts.states.clone() {
        if rng.gen_bool(cfg.epsilon_density) {
            for _ in 0..rng.gen_range(1..=cfg.max_alternatives.max(1)) {
                let dist = random_dist(rng, &parts.states, cfg, cfg.support_density);
                parts.transitions.push(Transition::epsilon(q.clone(), dist));
            }
        }
    }
    Enfa::new(parts).expect("generated machine is valid")
}

pub fn random_dfa<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomConfig) -> Dfa {
    let mut parts = random_parts(rng, cfg);
    let mut seen = BTreeSet::new();
    parts
        .transitions
        .retain(|t| seen.insert((t.from.clone(), t.label.clone())));
    Dfa::new(parts).expect("generated machine is valid")
}

/// A crisp NFA where each `(state, symbol)` has each state as a successor
/// with probability `density`.
pub fn random_crisp_nfa<R: Rng + ?Sized>(
    rng: &mut R,
    max_states: usize,
    symbols: usize,
    density: f64,
) -> CrispNfa {
    let states = state_names(rng.gen_range(1..=max_states.max(1)));
    let alphabet = symbol_names(symbols);
    let mut delta = BTreeMap::new();
    for q in &states {
        for a in &alphabet {
            let targets: BTreeSet<String> = states
                .iter()
                .filter(|_| rng.gen_bool(density))
                .cloned()
                .collect();
            delta.insert((q.clone(), a.clone()), targets);
        }
    }
    let accepting = states
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();
    CrispNfa {
        initial: states[0].clone(),
        states,
        alphabet,
        delta,
        accepting,
    }
}

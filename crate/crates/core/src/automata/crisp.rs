use std::collections::{BTreeMap, BTreeSet};

use super::{Label, MachineParts, Nfa, Transition};
use crate::error::Result;
use crate::fuzzy_set::FuzzySet;
use crate::value::Value;

/// An ordinary nondeterministic finite automaton without ε-moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispNfa {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    /// Missing `(state, symbol)` keys mean no successors.
    pub delta: BTreeMap<(String, String), BTreeSet<String>>,
    pub initial: String,
    pub accepting: BTreeSet<String>,
}

impl Nfa {
    /// Embeds a crisp NFA so that its nondeterminism survives: every
    /// successor `p` of `(q, a)` becomes its own alternative `1/p`.
    pub fn from_crisp(crisp: &CrispNfa) -> Result<Nfa> {
        let final_set =
            FuzzySet::from_pairs(crisp.accepting.iter().map(|q| (q.clone(), Value::ONE)))?;
        let transitions = crisp
            .delta
            .iter()
            .flat_map(|((from, symbol), targets)| {
                targets.iter().map(move |p| Transition {
                    from: from.clone(),
                    label: Label::Symbol(symbol.clone()),
                    dist: FuzzySet::singleton(p.clone(), Value::ONE),
                })
            })
            .collect();
        Nfa::new(MachineParts {
            states: crisp.states.clone(),
            alphabet: crisp.alphabet.clone(),
            initial: crisp.initial.clone(),
            final_set,
            transitions,
        })
    }
}

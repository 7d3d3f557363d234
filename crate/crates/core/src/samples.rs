//! Small hand-written machines used in documentation, tests and benchmarks.
//!
//! [`nfa`] has five states `q0..q4` over `{a, b}` with final set
//! `0.5/q2 + 0.9/q4`; [`enfa`] adds three ε-moves to it, and [`dfa`] is the
//! determinization of [`nfa`].

use crate::automata::{Dfa, Enfa, MachineParts, Nfa, Transition};
use crate::fuzzy_set::FuzzySet;

fn dist(pairs: &[(&str, &str)]) -> FuzzySet {
    FuzzySet::parse_pairs(pairs.iter().copied()).expect("sample literal")
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn nfa_parts() -> MachineParts {
    MachineParts {
        states: names(&["q0", "q1", "q2", "q3", "q4"]),
        alphabet: names(&["a", "b"]),
        initial: "q0".into(),
        final_set: dist(&[("q2", "0.5"), ("q4", "0.9")]),
        transitions: vec![
            Transition::new("q0", "a", dist(&[("q1", "0.9"), ("q2", "0.2")])),
            Transition::new("q0", "a", dist(&[("q2", "0.2"), ("q3", "0.9")])),
            Transition::new("q1", "b", dist(&[("q1", "0.1"), ("q4", "0.7")])),
            Transition::new("q1", "b", dist(&[("q2", "0.7"), ("q4", "0.1")])),
            Transition::new("q2", "a", dist(&[("q4", "0.5")])),
            Transition::new("q3", "b", dist(&[("q2", "0.7"), ("q4", "0.1")])),
            Transition::new("q3", "b", dist(&[("q3", "0.1"), ("q4", "0.7")])),
        ],
    }
}

pub fn enfa_parts() -> MachineParts {
    let mut parts = nfa_parts();
    parts.transitions.extend([
        Transition::epsilon("q0", dist(&[("q2", "0.7")])),
        Transition::epsilon("q1", dist(&[("q4", "0.8")])),
        Transition::epsilon("q3", dist(&[("q4", "0.5")])),
    ]);
    parts
}

pub fn dfa_parts() -> MachineParts {
    let mut parts = nfa_parts();
    parts.transitions = vec![
        Transition::new(
            "q0",
            "a",
            dist(&[("q1", "0.9"), ("q2", "0.2"), ("q3", "0.9")]),
        ),
        Transition::new(
            "q1",
            "b",
            dist(&[("q1", "0.1"), ("q2", "0.7"), ("q4", "0.7")]),
        ),
        Transition::new("q2", "a", dist(&[("q4", "0.5")])),
        Transition::new(
            "q3",
            "b",
            dist(&[("q2", "0.7"), ("q3", "0.1"), ("q4", "0.7")]),
        ),
    ];
    parts
}

pub fn nfa() -> Nfa {
    Nfa::new(nfa_parts()).expect("sample nfa")
}

pub fn enfa() -> Enfa {
    Enfa::new(enfa_parts()).expect("sample enfa")
}

pub fn dfa() -> Dfa {
    Dfa::new(dfa_parts()).expect("sample dfa")
}

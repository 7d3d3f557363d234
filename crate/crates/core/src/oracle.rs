//! Brute-force run semantics and bounded language comparison.
//!
//! The run oracle does not reuse the set-based recurrences from
//! [`semantics`](crate::semantics). It walks every explicit run
//! `q0 →μ1 p1 →μ2 … →μn pn`, folds the degrees along it with `min`, closes
//! with `F(pn)`, and takes the `max` over all runs. Agreement between the two
//! is the main correctness check of the library.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::automata::{Enfa, Machine, Nfa};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semantics::Reached;
use crate::value::Value;

/// How the ε-oracle bounds a contiguous chain of ε-steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonChains {
    /// Each chain visits pairwise distinct states. Degrees never increase
    /// along a run, so a revisit can never improve on the shorter chain.
    Simple,
    /// Chains of at most this many ε-steps, revisits allowed.
    AtMost(usize),
}

struct RunSearch<'a> {
    symbols: &'a [usize],
    chains: EpsilonChains,
    explored: u64,
    limits: &'a Limits,
}

impl RunSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        if self.explored > self.limits.max_runs {
            return Err(Error::ResourceLimit {
                what: "oracle runs",
                limit: self.limits.max_runs,
            });
        }
        Ok(())
    }

    fn nfa(&mut self, nfa: &Nfa, pos: usize, state: usize, along: Value) -> Result<Value> {
        self.tick()?;
        let sig = nfa.signature();
        let Some(&a) = self.symbols.get(pos) else {
            let name = &nfa.states()[state];
            return Ok(along.meet(nfa.final_set().get(name)));
        };
        let mut best = Value::ZERO;
        for mu in nfa.delta_at(state, a) {
            for (p, degree) in mu.iter() {
                let p = sig.state_id(p)?;
                best = best.join(self.nfa(nfa, pos + 1, p, along.meet(degree))?);
            }
        }
        Ok(best)
    }

    fn enfa(
        &mut self,
        enfa: &Enfa,
        pos: usize,
        state: usize,
        along: Value,
        chain: &mut Vec<bool>,
        chain_len: usize,
    ) -> Result<Value> {
        self.tick()?;
        let sig = enfa.signature();
        let mut best = Value::ZERO;
        if pos == self.symbols.len() {
            best = along.meet(enfa.final_set().get(&enfa.states()[state]));
        }
        for mu in enfa.eps_at(state) {
            for (p, degree) in mu.iter() {
                let p = sig.state_id(p)?;
                let allowed = match self.chains {
                    EpsilonChains::Simple => !chain[p],
                    EpsilonChains::AtMost(k) => chain_len < k,
                };
                if !allowed {
                    continue;
                }
                let was = std::mem::replace(&mut chain[p], true);
                let got = self.enfa(enfa, pos, p, along.meet(degree), chain, chain_len + 1)?;
                chain[p] = was;
                best = best.join(got);
            }
        }
        if let Some(&a) = self.symbols.get(pos) {
            for mu in enfa.delta_at(state, a) {
                for (p, degree) in mu.iter() {
                    let p = sig.state_id(p)?;
                    let mut fresh = vec![false; enfa.states().len()];
                    fresh[p] = true;
                    let got = self.enfa(enfa, pos + 1, p, along.meet(degree), &mut fresh, 0)?;
                    best = best.join(got);
                }
            }
        }
        Ok(best)
    }
}

/// Max over all runs of the min of the degrees along the run and `F` at its
/// end. The empty string yields `F(q0)`.
pub fn nfa_run_degree<S: AsRef<str>>(nfa: &Nfa, input: &[S], limits: &Limits) -> Result<Value> {
    let sig = nfa.signature();
    let symbols = sig.symbol_ids(input)?;
    let q0 = sig.state_id(nfa.initial())?;
    let mut search = RunSearch {
        symbols: &symbols,
        chains: EpsilonChains::Simple,
        explored: 0,
        limits,
    };
    search.nfa(nfa, 0, q0, Value::ONE)
}

/// Like [`nfa_run_degree`], with any number of ε-steps allowed before,
/// between and after the symbol steps; each ε-chain visits distinct states.
pub fn enfa_run_degree<S: AsRef<str>>(enfa: &Enfa, input: &[S], limits: &Limits) -> Result<Value> {
    enfa_run_degree_with(enfa, input, EpsilonChains::Simple, limits)
}

pub fn enfa_run_degree_with<S: AsRef<str>>(
    enfa: &Enfa,
    input: &[S],
    chains: EpsilonChains,
    limits: &Limits,
) -> Result<Value> {
    let sig = enfa.signature();
    let symbols = sig.symbol_ids(input)?;
    let q0 = sig.state_id(enfa.initial())?;
    let mut chain = vec![false; enfa.states().len()];
    chain[q0] = true;
    let mut search = RunSearch {
        symbols: &symbols,
        chains,
        explored: 0,
        limits,
    };
    search.enfa(enfa, 0, q0, Value::ONE, &mut chain, 0)
}

/// Run-oracle degree for any machine type.
pub fn run_degree<S: AsRef<str>>(machine: &Machine, input: &[S], limits: &Limits) -> Result<Value> {
    match machine {
        Machine::Dfa(m) => nfa_run_degree(&m.to_nfa(), input, limits),
        Machine::Nfa(m) => nfa_run_degree(m, input, limits),
        Machine::Enfa(m) => enfa_run_degree(m, input, limits),
    }
}

/// The alphabet in the order used for enumeration: tokens sorted
/// lexicographically.
pub fn enumeration_order(alphabet: &[String]) -> Vec<String> {
    let mut symbols = alphabet.to_vec();
    symbols.sort();
    symbols
}

fn count_strings(symbols: usize, max_len: usize, limits: &Limits) -> Result<u64> {
    let too_many = || Error::ResourceLimit {
        what: "enumerated strings",
        limit: limits.max_strings,
    };
    let mut total: u64 = 0;
    let mut level: u64 = 1;
    for len in 0..=max_len {
        if len > 0 {
            level = level.checked_mul(symbols as u64).ok_or_else(too_many)?;
        }
        total = total.checked_add(level).ok_or_else(too_many)?;
        if total > limits.max_strings {
            return Err(too_many());
        }
        if level == 0 {
            break;
        }
    }
    Ok(total)
}

/// Every string over `alphabet` of length at most `max_len`, shortest first
/// and lexicographic within a length.
pub fn strings_up_to(alphabet: &[String], max_len: usize) -> Vec<Vec<String>> {
    let symbols = enumeration_order(alphabet);
    let mut out = vec![Vec::new()];
    let mut level_start = 0;
    for _ in 0..max_len {
        let level_end = out.len();
        for i in level_start..level_end {
            for a in &symbols {
                let mut s = out[i].clone();
                s.push(a.clone());
                out.push(s);
            }
        }
        level_start = level_end;
        if symbols.is_empty() {
            break;
        }
    }
    out
}

/// Breadth-first walk over `Σ^{≤ max_len}` in length-lexicographic order,
/// extending each prefix's reached set by one symbol at a time.
fn walk<F>(machines: &[&Machine], max_len: usize, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&[String], &[Value]) -> ControlFlow<()>,
{
    let symbols = enumeration_order(machines[0].alphabet());
    count_strings(symbols.len(), max_len, limits)?;
    let evaluators = machines
        .iter()
        .map(|m| m.evaluator(*limits))
        .collect::<Result<Vec<_>>>()?;
    let degrees = |reached: &[Reached]| -> Vec<Value> {
        evaluators
            .iter()
            .zip(reached)
            .map(|(ev, r)| ev.degree_of(r))
            .collect()
    };

    let start: Vec<Reached> = evaluators.iter().map(|ev| ev.start()).collect();
    if visit(&[], &degrees(&start)).is_break() {
        return Ok(());
    }
    let mut level: Vec<(Vec<String>, Vec<Reached>)> = vec![(Vec::new(), start)];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * symbols.len());
        for (prefix, reached) in &level {
            for a in &symbols {
                let stepped = evaluators
                    .iter()
                    .zip(reached)
                    .map(|(ev, r)| ev.step(r, a))
                    .collect::<Result<Vec<_>>>()?;
                let mut s = prefix.clone();
                s.push(a.clone());
                if visit(&s, &degrees(&stepped)).is_break() {
                    return Ok(());
                }
                next.push((s, stepped));
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(())
}

/// One row of a language table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub input: Vec<String>,
    pub degree: Value,
}

/// `L(M)` tabulated over every string of length at most `max_len`, zeros
/// included, in length-lexicographic order.
pub fn enumerate_language(
    machine: &Machine,
    max_len: usize,
    limits: &Limits,
) -> Result<Vec<Entry>> {
    let mut rows = Vec::new();
    walk(&[machine], max_len, limits, |s, d| {
        rows.push(Entry {
            input: s.to_vec(),
            degree: d[0],
        });
        ControlFlow::Continue(())
    })?;
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: Vec<String>,
    pub left: Value,
    pub right: Value,
}

/// Outcome of comparing two languages on all strings up to `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub bound: usize,
    /// The length-lexicographically least string on which the degrees
    /// differ, if any.
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares `left` and `right` on every string of length at most `max_len`.
pub fn equiv_up_to(
    left: &Machine,
    right: &Machine,
    max_len: usize,
    limits: &Limits,
) -> Result<Verdict> {
    let (l, r) = (
        enumeration_order(left.alphabet()),
        enumeration_order(right.alphabet()),
    );
    if l != r {
        return Err(Error::AlphabetMismatch { left: l, right: r });
    }
    let mut counterexample = None;
    walk(&[left, right], max_len, limits, |s, d| {
        if d[0] != d[1] {
            counterexample = Some(Counterexample {
                input: s.to_vec(),
                left: d[0],
                right: d[1],
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(Verdict {
        bound: max_len,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{samples, transforms, FuzzySet, MachineParts, Transition};

    fn v(s: &str) -> Value {
        s.parse().unwrap()
    }

    const EMPTY: [&str; 0] = [];

    #[test]
    fn nfa_oracle_on_sample() {
        let m = samples::nfa();
        let lim = Limits::default();
        assert_eq!(nfa_run_degree(&m, &["a", "b"], &lim).unwrap(), v("0.7"));
        assert_eq!(nfa_run_degree(&m, &EMPTY, &lim).unwrap(), Value::ZERO);
        assert_eq!(nfa_run_degree(&m, &["a", "a"], &lim).unwrap(), v("0.2"));
        assert!(matches!(
            nfa_run_degree(&m, &["z"], &lim),
            Err(Error::UnknownSymbol(_))
        ));
    }

    #[test]
    fn enfa_oracle_on_sample() {
        let m = samples::enfa();
        let lim = Limits::default();
        assert_eq!(enfa_run_degree(&m, &EMPTY, &lim).unwrap(), v("0.5"));
        assert_eq!(enfa_run_degree(&m, &["a"], &lim).unwrap(), v("0.8"));
        assert_eq!(enfa_run_degree(&m, &["b"], &lim).unwrap(), Value::ZERO);
    }

    #[test]
    fn run_cap() {
        let lim = Limits {
            max_runs: 2,
            ..Limits::default()
        };
        assert!(matches!(
            nfa_run_degree(&samples::nfa(), &["a", "b"], &lim),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn language_tables() {
        let lim = Limits::default();
        let table = enumerate_language(&Machine::Nfa(samples::nfa()), 1, &lim).unwrap();
        let rows: Vec<_> = table
            .iter()
            .map(|e| (e.input.join(" "), e.degree))
            .collect();
        assert_eq!(
            rows,
            [
                (String::new(), Value::ZERO),
                ("a".into(), v("0.2")),
                ("b".into(), Value::ZERO)
            ]
        );
        let table = enumerate_language(&Machine::Enfa(samples::enfa()), 1, &lim).unwrap();
        let degrees: Vec<_> = table.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, [v("0.5"), v("0.8"), Value::ZERO]);
        let table = enumerate_language(&Machine::Dfa(samples::dfa()), 0, &lim).unwrap();
        assert_eq!(table.len(), 1);
        assert!(table[0].input.is_empty());
    }

    #[test]
    fn enumeration_is_length_lexicographic() {
        let alphabet = vec!["b".to_string(), "a".to_string()];
        let strings = strings_up_to(&alphabet, 2);
        let flat: Vec<String> = strings.iter().map(|s| s.join("")).collect();
        assert_eq!(flat, ["", "a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(strings_up_to(&[], 3), vec![Vec::<String>::new()]);
    }

    #[test]
    fn string_cap() {
        let lim = Limits {
            max_strings: 10,
            ..Limits::default()
        };
        assert!(enumerate_language(&Machine::Nfa(samples::nfa()), 3, &lim).is_err());
        assert!(enumerate_language(&Machine::Nfa(samples::nfa()), 2, &lim).is_ok());
    }

    #[test]
    fn equivalences_of_sample_conversions() {
        let lim = Limits::default();
        let nfa = Machine::Nfa(samples::nfa());
        let dfa = Machine::Dfa(transforms::determinize(&samples::nfa()));
        assert!(equiv_up_to(&nfa, &dfa, 5, &lim).unwrap().is_equivalent());
        let enfa = Machine::Enfa(samples::enfa());
        let nfa2 = Machine::Nfa(transforms::eliminate_epsilon(&samples::enfa()).unwrap());
        assert!(equiv_up_to(&enfa, &nfa2, 4, &lim).unwrap().is_equivalent());
        assert!(equiv_up_to(&enfa, &enfa, 3, &lim).unwrap().is_equivalent());
    }

    fn with_final(pairs: &[(&str, &str)]) -> Nfa {
        let mut parts = samples::nfa_parts();
        parts.final_set = FuzzySet::parse_pairs(pairs.iter().copied()).unwrap();
        Nfa::new(parts).unwrap()
    }

    fn oracle_counterexample(left: &Nfa, right: &Nfa, max_len: usize) -> Option<Counterexample> {
        let lim = Limits::default();
        strings_up_to(left.alphabet(), max_len)
            .into_iter()
            .find_map(|s| {
                let l = nfa_run_degree(left, &s, &lim).unwrap();
                let r = nfa_run_degree(right, &s, &lim).unwrap();
                (l != r).then_some(Counterexample {
                    input: s,
                    left: l,
                    right: r,
                })
            })
    }

    #[test]
    fn least_counterexample_matches_oracle() {
        let original = samples::nfa();
        for changed in [
            with_final(&[("q2", "0.6"), ("q4", "0.9")]),
            with_final(&[("q2", "0.5"), ("q4", "0.6")]),
        ] {
            let expected = oracle_counterexample(&original, &changed, 5);
            let verdict = equiv_up_to(
                &Machine::Nfa(original.clone()),
                &Machine::Nfa(changed),
                5,
                &Limits::default(),
            )
            .unwrap();
            assert_eq!(verdict.counterexample, expected);
        }
    }

    #[test]
    fn raising_a_dominated_final_degree_is_invisible() {
        // every run ending in q2 above 0.5 has a sibling run ending in q4 at 0.7
        let changed = with_final(&[("q2", "0.6"), ("q4", "0.9")]);
        let verdict = equiv_up_to(
            &Machine::Nfa(samples::nfa()),
            &Machine::Nfa(changed),
            6,
            &Limits::default(),
        )
        .unwrap();
        assert!(verdict.is_equivalent());
    }

    #[test]
    fn lowering_the_q4_degree_shows_at_ab() {
        let changed = with_final(&[("q2", "0.5"), ("q4", "0.6")]);
        let verdict = equiv_up_to(
            &Machine::Nfa(samples::nfa()),
            &Machine::Nfa(changed),
            3,
            &Limits::default(),
        )
        .unwrap();
        let cx = verdict.counterexample.unwrap();
        assert_eq!(cx.input, ["a", "b"]);
        assert_eq!(cx.left.to_string(), "0.7");
        assert_eq!(cx.right.to_string(), "0.6");
    }

    #[test]
    fn alphabet_mismatch() {
        let mut parts = samples::nfa_parts();
        parts.alphabet.push("c".into());
        let other = Machine::Nfa(Nfa::new(parts).unwrap());
        assert!(matches!(
            equiv_up_to(&Machine::Nfa(samples::nfa()), &other, 2, &Limits::default()),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn bounded_chains_agree_with_simple_chains() {
        let parts = MachineParts {
            states: vec!["x".into(), "y".into()],
            alphabet: vec!["a".into()],
            initial: "x".into(),
            final_set: FuzzySet::parse_pairs([("y", "0.6")]).unwrap(),
            transitions: vec![
                Transition::epsilon("x", FuzzySet::parse_pairs([("y", "0.8")]).unwrap()),
                Transition::epsilon("y", FuzzySet::parse_pairs([("x", "0.9")]).unwrap()),
                Transition::new("x", "a", FuzzySet::parse_pairs([("x", "0.7")]).unwrap()),
            ],
        };
        let m = Enfa::new(parts).unwrap();
        let lim = Limits::default();
        let values = m.values().len();
        for s in strings_up_to(m.alphabet(), 3) {
            let simple = enfa_run_degree(&m, &s, &lim).unwrap();
            let bounded =
                enfa_run_degree_with(&m, &s, EpsilonChains::AtMost(2 * values), &lim).unwrap();
            assert_eq!(simple, bounded);
            assert_eq!(simple, m.degree(&s).unwrap());
        }
    }
}

//! Language-preserving conversions between the machine types.
//!
//! None of these change the state set: determinization collapses each set of
//! alternatives into its pointwise union, and ε-elimination replaces δ by δ̂
//! on single symbols while folding ε-reachability into the final set.

use crate::automata::{Dfa, DistSet, Enfa, Nfa};
use crate::error::Result;
use crate::fuzzy_set::FuzzySet;
use crate::limits::Limits;

/// `δ'(q, a) = ∪_{μ ∈ δ(q, a)} μ`, or Φ when `δ(q, a)` is empty.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let delta = (0..nfa.states().len())
        .map(|q| {
            (0..nfa.alphabet().len())
                .map(|a| nfa.delta_at(q, a).union_all())
                .collect()
        })
        .collect();
    Dfa::from_raw(nfa.signature().clone(), delta)
}

/// `δ'(q, a) = δ̂(q, a)` and `F'(q) = height[(∪_{μ ∈ Δ_ε(q)} μ) ∩ F]`.
pub fn eliminate_epsilon(enfa: &Enfa) -> Result<Nfa> {
    eliminate_epsilon_with(enfa, &Limits::default())
}

pub fn eliminate_epsilon_with(enfa: &Enfa, limits: &Limits) -> Result<Nfa> {
    let ev = enfa.evaluator(*limits)?;
    let mut delta = Vec::with_capacity(enfa.states().len());
    let mut final_pairs = Vec::with_capacity(enfa.states().len());
    for name in enfa.states() {
        // δ̂(q, a) is one step from δ̂(q, ε) = Δ_ε(q)
        let closure = ev.closure(name)?;
        let row = (0..enfa.alphabet().len())
            .map(|a| ev.step(closure, a))
            .collect::<Result<Vec<_>>>()?;
        delta.push(row);
        let reach = closure.union_all();
        final_pairs.push((name.clone(), reach.intersect(enfa.final_set()).height()));
    }
    let final_set = FuzzySet::from_pairs(final_pairs)?;
    Ok(Nfa::from_raw(enfa.signature().clone(), delta).with_final_set(final_set))
}

/// ε-elimination followed by determinization.
pub fn compile(enfa: &Enfa) -> Result<Dfa> {
    compile_with(enfa, &Limits::default())
}

pub fn compile_with(enfa: &Enfa, limits: &Limits) -> Result<Dfa> {
    Ok(determinize(&eliminate_epsilon_with(enfa, limits)?))
}

/// Keeps only the members of `set` not contained in another member.
///
/// The pointwise union of the set is unchanged, so no language degree
/// changes either.
pub fn prune_dominated(set: &DistSet) -> DistSet {
    let members: Vec<&FuzzySet> = set.iter().collect();
    let mut out = set.clone();
    out.retain(|mu| {
        !members
            .iter()
            .any(|other| *other != mu && mu.is_subset_of(other))
    });
    out
}

/// Applies [`prune_dominated`] to every transition of `nfa`.
pub fn prune_nfa(nfa: &Nfa) -> Nfa {
    nfa.map_cells(prune_dominated)
}

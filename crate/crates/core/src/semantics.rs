//! Extended transition functions and language degrees.
//!
//! All three machine types share the same max-min reading: following a
//! transition scales the target distribution by the degree of the state it
//! leaves from, alternatives are collected in a [`DistSet`], and the degree
//! of a string is the best `height(μ ∩ F)` over the distributions reached.
//!
//! Steps only visit `p ∈ supp(μ)`; any other `p` contributes `0 · μ_p = Φ`,
//! which is never stored.

use crate::automata::{Dfa, DistSet, Enfa, Machine, Nfa};
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzySet;
use crate::limits::Limits;
use crate::value::Value;

/// `∨ { height(μ ∩ F) | μ ∈ set }`, 0 for the empty set.
pub fn set_degree(set: &DistSet, final_set: &FuzzySet) -> Value {
    set.iter()
        .map(|mu| mu.intersect(final_set).height())
        .max()
        .unwrap_or(Value::ZERO)
}

fn check_size(set: &DistSet, limits: &Limits) -> Result<()> {
    if set.len() > limits.max_set_size {
        return Err(Error::ResourceLimit {
            what: "distribution set size",
            limit: limits.max_set_size as u64,
        });
    }
    Ok(())
}

impl Dfa {
    /// `∪_{p ∈ supp μ} μ(p) · δ(p, a)`
    pub(crate) fn step(&self, mu: &FuzzySet, a: usize) -> FuzzySet {
        let sig = self.signature();
        let mut out = FuzzySet::empty();
        for (p, degree) in mu.iter() {
            let p = sig.state_id(p).expect("validated support");
            out.union_with(&self.delta_at(p, a).scale(degree));
        }
        out
    }

    /// `δ(q, s)`, starting from `1/q`.
    pub fn extended_delta<S: AsRef<str>>(&self, q: &str, input: &[S]) -> Result<FuzzySet> {
        let sig = self.signature();
        sig.state_id(q)?;
        let symbols = sig.symbol_ids(input)?;
        let mut mu = FuzzySet::singleton(q, Value::ONE);
        for a in symbols {
            mu = self.step(&mu, a);
        }
        Ok(mu)
    }

    /// `height(δ(q0, s) ∩ F)`
    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        let mu = self.extended_delta(self.initial(), input)?;
        Ok(mu.intersect(self.final_set()).height())
    }
}

impl Nfa {
    /// `{ μ(p) · μ_p | μ ∈ set, p ∈ supp μ, μ_p ∈ δ(p, a) }`
    pub(crate) fn step(&self, set: &DistSet, a: usize, limits: &Limits) -> Result<DistSet> {
        let sig = self.signature();
        let mut out = DistSet::new();
        for mu in set {
            for (p, degree) in mu.iter() {
                let p = sig.state_id(p).expect("validated support");
                for next in self.delta_at(p, a) {
                    out.insert(next.scale(degree));
                }
            }
            check_size(&out, limits)?;
        }
        Ok(out)
    }

    /// `δ(q, s)`, starting from `{1/q}`.
    pub fn extended_delta<S: AsRef<str>>(&self, q: &str, input: &[S]) -> Result<DistSet> {
        self.extended_delta_with(q, input, &Limits::default())
    }

    pub fn extended_delta_with<S: AsRef<str>>(
        &self,
        q: &str,
        input: &[S],
        limits: &Limits,
    ) -> Result<DistSet> {
        let sig = self.signature();
        sig.state_id(q)?;
        let symbols = sig.symbol_ids(input)?;
        let mut set = DistSet::singleton(FuzzySet::singleton(q, Value::ONE));
        for a in symbols {
            set = self.step(&set, a, limits)?;
        }
        Ok(set)
    }

    /// `∨ { height(μ ∩ F) | μ ∈ δ(q0, s) }`
    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        let set = self.extended_delta(self.initial(), input)?;
        Ok(set_degree(&set, self.final_set()))
    }
}

impl Enfa {
    /// Precomputes every state's ε-closure so that many strings can be
    /// evaluated against the same machine.
    pub fn evaluator(&self, limits: Limits) -> Result<EnfaEvaluator<'_>> {
        EnfaEvaluator::new(self, limits)
    }

    /// `Δ_ε(q)`
    pub fn epsilon_closure(&self, q: &str) -> Result<DistSet> {
        let id = self.signature().state_id(q)?;
        closure_of_state(self, id, &Limits::default())
    }

    /// `Δ_ε(μ) = {μ} ∪ { μ(q) · η | q ∈ supp μ, η ∈ Δ_ε(q) }`
    pub fn epsilon_closure_of(&self, mu: &FuzzySet) -> Result<DistSet> {
        let sig = self.signature();
        for q in mu.support() {
            sig.state_id(q)?;
        }
        self.evaluator(Limits::default())?.closure_of(mu)
    }

    /// `δ̂(q, s)`
    pub fn extended_delta<S: AsRef<str>>(&self, q: &str, input: &[S]) -> Result<DistSet> {
        self.evaluator(Limits::default())?.extended_delta(q, input)
    }

    /// `∨ { height(μ ∩ F) | μ ∈ δ̂(q0, s) }`
    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        self.evaluator(Limits::default())?.degree(input)
    }
}

/// Least fixpoint of `S ↦ S ∪ { μ(p) · η | μ ∈ S, p ∈ supp μ, η ∈ {1/p} ∪ δ(p, ε) }`
/// starting from `{1/q} ∪ δ(q, ε)`.
///
/// The worklist visits each member once; the result does not depend on the
/// visiting order since every member's successors are eventually added.
fn closure_of_state(enfa: &Enfa, q: usize, limits: &Limits) -> Result<DistSet> {
    let sig = enfa.signature();
    let mut closure = DistSet::new();
    let mut work = Vec::new();
    let seed = FuzzySet::singleton(enfa.states()[q].clone(), Value::ONE);
    for mu in std::iter::once(&seed).chain(enfa.eps_at(q)) {
        if closure.insert(mu.clone()) {
            work.push(mu.clone());
        }
    }
    while let Some(mu) = work.pop() {
        for (p, degree) in mu.iter() {
            let pid = sig.state_id(p).expect("validated support");
            let stay = FuzzySet::singleton(p, degree);
            let moves = enfa.eps_at(pid).iter().map(|eta| eta.scale(degree));
            for next in std::iter::once(stay).chain(moves) {
                if closure.insert(next.clone()) {
                    work.push(next);
                }
            }
        }
        check_size(&closure, limits)?;
    }
    Ok(closure)
}

/// ε-closures of every state of an [`Enfa`], computed once.
#[derive(Debug, Clone)]
pub struct EnfaEvaluator<'m> {
    enfa: &'m Enfa,
    closures: Vec<DistSet>,
    limits: Limits,
}

impl<'m> EnfaEvaluator<'m> {
    pub fn new(enfa: &'m Enfa, limits: Limits) -> Result<Self> {
        let closures = (0..enfa.states().len())
            .map(|q| closure_of_state(enfa, q, &limits))
            .collect::<Result<_>>()?;
        Ok(EnfaEvaluator {
            enfa,
            closures,
            limits,
        })
    }

    pub fn machine(&self) -> &'m Enfa {
        self.enfa
    }

    /// `Δ_ε(q)`
    pub fn closure(&self, q: &str) -> Result<&DistSet> {
        Ok(&self.closures[self.enfa.signature().state_id(q)?])
    }

    /// `Δ_ε(μ)`; empty for μ = Φ.
    pub fn closure_of(&self, mu: &FuzzySet) -> Result<DistSet> {
        let mut out = DistSet::new();
        self.close_into(mu, &mut out)?;
        Ok(out)
    }

    fn close_into(&self, mu: &FuzzySet, out: &mut DistSet) -> Result<()> {
        let sig = self.enfa.signature();
        out.insert(mu.clone());
        for (q, degree) in mu.iter() {
            for eta in &self.closures[sig.state_id(q)?] {
                out.insert(eta.scale(degree));
            }
        }
        check_size(out, &self.limits)
    }

    /// `∪ { Δ_ε(μ(p) · μ_p) | μ ∈ set, p ∈ supp μ, μ_p ∈ δ(p, a) }`
    pub(crate) fn step(&self, set: &DistSet, a: usize) -> Result<DistSet> {
        let sig = self.enfa.signature();
        let mut out = DistSet::new();
        for mu in set {
            for (p, degree) in mu.iter() {
                let p = sig.state_id(p).expect("validated support");
                for next in self.enfa.delta_at(p, a) {
                    self.close_into(&next.scale(degree), &mut out)?;
                }
            }
        }
        Ok(out)
    }

    /// `δ̂(q, ε) = Δ_ε(q)`
    pub(crate) fn start(&self, q: usize) -> DistSet {
        self.closures[q].clone()
    }

    /// `δ̂(q, s)`
    pub fn extended_delta<S: AsRef<str>>(&self, q: &str, input: &[S]) -> Result<DistSet> {
        let sig = self.enfa.signature();
        let q = sig.state_id(q)?;
        let symbols = sig.symbol_ids(input)?;
        let mut set = self.start(q);
        for a in symbols {
            set = self.step(&set, a)?;
        }
        Ok(set)
    }

    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        let set = self.extended_delta(self.enfa.initial(), input)?;
        Ok(set_degree(&set, self.enfa.final_set()))
    }
}

/// What a machine has reached after reading a prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reached {
    /// A deterministic machine reaches a single distribution.
    Distribution(FuzzySet),
    /// A nondeterministic machine reaches a set of alternatives.
    Alternatives(DistSet),
}

impl Reached {
    pub fn degree(&self, final_set: &FuzzySet) -> Value {
        match self {
            Reached::Distribution(mu) => mu.intersect(final_set).height(),
            Reached::Alternatives(set) => set_degree(set, final_set),
        }
    }

    /// Pointwise union of everything reached.
    pub fn union_all(&self) -> FuzzySet {
        match self {
            Reached::Distribution(mu) => mu.clone(),
            Reached::Alternatives(set) => set.union_all(),
        }
    }
}

/// The reached set after every prefix of `input`, and the final degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalTrace {
    pub input: Vec<String>,
    /// `prefixes[i]` is what the machine reached after `input[..i]`.
    pub prefixes: Vec<Reached>,
    pub degree: Value,
}

#[derive(Debug, Clone)]
enum Engine<'m> {
    Dfa(&'m Dfa),
    Nfa(&'m Nfa),
    Enfa(EnfaEvaluator<'m>),
}

/// Incremental evaluation of any machine from its initial state.
#[derive(Debug, Clone)]
pub struct Evaluator<'m> {
    machine: &'m Machine,
    engine: Engine<'m>,
    limits: Limits,
}

impl<'m> Evaluator<'m> {
    pub fn new(machine: &'m Machine, limits: Limits) -> Result<Self> {
        let engine = match machine {
            Machine::Dfa(m) => Engine::Dfa(m),
            Machine::Nfa(m) => Engine::Nfa(m),
            Machine::Enfa(m) => Engine::Enfa(EnfaEvaluator::new(m, limits)?),
        };
        Ok(Evaluator {
            machine,
            engine,
            limits,
        })
    }

    pub fn machine(&self) -> &'m Machine {
        self.machine
    }

    /// What is reached on the empty string.
    pub fn start(&self) -> Reached {
        let sig = self.machine.signature();
        let q0 = self.machine.initial();
        match &self.engine {
            Engine::Dfa(_) => Reached::Distribution(FuzzySet::singleton(q0, Value::ONE)),
            Engine::Nfa(_) => {
                Reached::Alternatives(DistSet::singleton(FuzzySet::singleton(q0, Value::ONE)))
            }
            Engine::Enfa(ev) => {
                Reached::Alternatives(ev.start(sig.state_id(q0).expect("validated initial")))
            }
        }
    }

    /// Extends a prefix by one symbol.
    pub fn step(&self, reached: &Reached, symbol: &str) -> Result<Reached> {
        let a = self.machine.signature().symbol_id(symbol)?;
        self.step_id(reached, a)
    }

    pub(crate) fn step_id(&self, reached: &Reached, a: usize) -> Result<Reached> {
        Ok(match (&self.engine, reached) {
            (Engine::Dfa(m), Reached::Distribution(mu)) => Reached::Distribution(m.step(mu, a)),
            (Engine::Nfa(m), Reached::Alternatives(set)) => {
                Reached::Alternatives(m.step(set, a, &self.limits)?)
            }
            (Engine::Enfa(ev), Reached::Alternatives(set)) => {
                Reached::Alternatives(ev.step(set, a)?)
            }
            _ => panic!("reached value does not belong to this machine kind"),
        })
    }

    pub fn degree_of(&self, reached: &Reached) -> Value {
        reached.degree(self.machine.final_set())
    }

    pub fn trace<S: AsRef<str>>(&self, input: &[S]) -> Result<EvalTrace> {
        let symbols = self.machine.signature().symbol_ids(input)?;
        let mut prefixes = vec![self.start()];
        for a in symbols {
            let next = self.step_id(prefixes.last().expect("non-empty"), a)?;
            prefixes.push(next);
        }
        let degree = self.degree_of(prefixes.last().expect("non-empty"));
        Ok(EvalTrace {
            input: input.iter().map(|s| s.as_ref().to_owned()).collect(),
            prefixes,
            degree,
        })
    }

    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        let symbols = self.machine.signature().symbol_ids(input)?;
        let mut reached = self.start();
        for a in symbols {
            reached = self.step_id(&reached, a)?;
        }
        Ok(self.degree_of(&reached))
    }
}

impl Machine {
    pub fn evaluator(&self, limits: Limits) -> Result<Evaluator<'_>> {
        Evaluator::new(self, limits)
    }

    /// Language degree of `input` under the machine's own semantics.
    pub fn degree<S: AsRef<str>>(&self, input: &[S]) -> Result<Value> {
        match self {
            Machine::Dfa(m) => m.degree(input),
            Machine::Nfa(m) => m.degree(input),
            Machine::Enfa(m) => m.degree(input),
        }
    }

    pub fn trace<S: AsRef<str>>(&self, input: &[S]) -> Result<EvalTrace> {
        self.evaluator(Limits::default())?.trace(input)
    }
}

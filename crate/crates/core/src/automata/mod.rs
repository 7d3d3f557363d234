//! The three machine types and their validated constructors.
//!
//! * [`Dfa`]: every `(state, symbol)` yields exactly one possibility
//!   distribution (Φ allowed).
//! * [`Nfa`]: every `(state, symbol)` yields a [`DistSet`] of alternatives.
//! * [`Enfa`]: an [`Nfa`] that may also move on ε.
//!
//! Machines are immutable once built. States and symbols keep their
//! declaration order; equality ignores that order.

mod crisp;
mod dist_set;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub use crisp::CrispNfa;
pub use dist_set::DistSet;

use crate::error::{Error, Result};
use crate::fuzzy_set::{validate_name, FuzzySet};
use crate::value::Value;

/// Token reserved for ε in files and transition labels.
pub const EPSILON_TOKEN: &str = "eps";

/// Transition label: an alphabet symbol or ε.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Symbol(String),
    Epsilon,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Symbol(s) => f.write_str(s),
            Label::Epsilon => f.write_str(EPSILON_TOKEN),
        }
    }
}

/// One transition record `from --label--> dist`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub from: String,
    pub label: Label,
    pub dist: FuzzySet,
}

impl Transition {
    pub fn new(from: impl Into<String>, symbol: impl Into<String>, dist: FuzzySet) -> Self {
        Transition {
            from: from.into(),
            label: Label::Symbol(symbol.into()),
            dist,
        }
    }

    pub fn epsilon(from: impl Into<String>, dist: FuzzySet) -> Self {
        Transition {
            from: from.into(),
            label: Label::Epsilon,
            dist,
        }
    }
}

/// Unvalidated components of a machine.
///
/// Omitted `(state, label)` pairs default to Φ (for a [`Dfa`]) or to the
/// empty set of alternatives.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MachineParts {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub initial: String,
    pub final_set: FuzzySet,
    pub transitions: Vec<Transition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Dfa,
    Nfa,
    Enfa,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Dfa => "dfa",
            Kind::Nfa => "nfa",
            Kind::Enfa => "enfa",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// State set, alphabet, initial state and final fuzzy set shared by all
/// machine types.
#[derive(Debug, Clone)]
pub(crate) struct Signature {
    states: Vec<String>,
    alphabet: Vec<String>,
    initial: String,
    final_set: FuzzySet,
    state_index: HashMap<String, usize>,
    symbol_index: HashMap<String, usize>,
}

impl Signature {
    fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        initial: String,
        final_set: FuzzySet,
    ) -> Result<Self> {
        let mut state_index = HashMap::with_capacity(states.len());
        for (i, q) in states.iter().enumerate() {
            validate_name(q)?;
            if state_index.insert(q.clone(), i).is_some() {
                return Err(Error::DuplicateState(q.clone()));
            }
        }
        let mut symbol_index = HashMap::with_capacity(alphabet.len());
        for (i, a) in alphabet.iter().enumerate() {
            validate_name(a)?;
            if a == EPSILON_TOKEN {
                return Err(Error::ReservedSymbol(a.clone()));
            }
            if symbol_index.insert(a.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(a.clone()));
            }
        }
        if !state_index.contains_key(&initial) {
            return Err(Error::UnknownInitial(initial));
        }
        let sig = Signature {
            states,
            alphabet,
            initial,
            final_set,
            state_index,
            symbol_index,
        };
        sig.check_support(&sig.final_set)?;
        Ok(sig)
    }

    fn check_support(&self, dist: &FuzzySet) -> Result<()> {
        match dist.support().find(|q| !self.state_index.contains_key(*q)) {
            Some(q) => Err(Error::UnknownState(q.to_owned())),
            None => Ok(()),
        }
    }

    pub(crate) fn state_id(&self, q: &str) -> Result<usize> {
        self.state_index
            .get(q)
            .copied()
            .ok_or_else(|| Error::UnknownState(q.to_owned()))
    }

    pub(crate) fn symbol_id(&self, a: &str) -> Result<usize> {
        self.symbol_index
            .get(a)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(a.to_owned()))
    }

    /// Resolves a token string to symbol indices.
    pub(crate) fn symbol_ids<S: AsRef<str>>(&self, input: &[S]) -> Result<Vec<usize>> {
        input.iter().map(|a| self.symbol_id(a.as_ref())).collect()
    }

    /// `(from, symbol index)` for a symbol label, `(from, None)` for ε.
    fn locate(&self, t: &Transition) -> Result<(usize, Option<usize>)> {
        let from = self.state_id(&t.from)?;
        self.check_support(&t.dist)?;
        let symbol = match &t.label {
            Label::Symbol(a) => Some(self.symbol_id(a)?),
            Label::Epsilon => None,
        };
        Ok((from, symbol))
    }

    fn same_as(&self, other: &Signature) -> bool {
        fn set(v: &[String]) -> BTreeSet<&str> {
            v.iter().map(String::as_str).collect()
        }
        set(&self.states) == set(&other.states)
            && set(&self.alphabet) == set(&other.alphabet)
            && self.initial == other.initial
            && self.final_set == other.final_set
    }

    fn collect_values(&self, out: &mut BTreeSet<Value>) {
        out.insert(Value::ZERO);
        out.insert(Value::ONE);
        out.extend(self.final_set.values());
    }
}

macro_rules! signature_accessors {
    ($ty:ty) => {
        impl $ty {
            /// Declared states, in declaration order.
            pub fn states(&self) -> &[String] {
                &self.sig.states
            }

            /// Declared symbols, in declaration order.
            pub fn alphabet(&self) -> &[String] {
                &self.sig.alphabet
            }

            pub fn initial(&self) -> &str {
                &self.sig.initial
            }

            /// The fuzzy set of final states.
            pub fn final_set(&self) -> &FuzzySet {
                &self.sig.final_set
            }

            pub(crate) fn signature(&self) -> &Signature {
                &self.sig
            }
        }
    };
}

/// Deterministic fuzzy automaton.
#[derive(Debug, Clone)]
pub struct Dfa {
    sig: Signature,
    /// `delta[state][symbol]`
    delta: Vec<Vec<FuzzySet>>,
}

signature_accessors!(Dfa);

impl Dfa {
    pub fn new(parts: MachineParts) -> Result<Dfa> {
        let sig = Signature::new(parts.states, parts.alphabet, parts.initial, parts.final_set)?;
        let mut delta = vec![vec![FuzzySet::empty(); sig.alphabet.len()]; sig.states.len()];
        let mut seen = vec![vec![false; sig.alphabet.len()]; sig.states.len()];
        for t in parts.transitions {
            let (from, symbol) = sig.locate(&t)?;
            let a = symbol.ok_or(Error::EpsilonNotAllowed)?;
            if std::mem::replace(&mut seen[from][a], true) {
                return Err(Error::NonDeterministic {
                    state: t.from,
                    symbol: t.label.to_string(),
                });
            }
            delta[from][a] = t.dist;
        }
        Ok(Dfa { sig, delta })
    }

    /// `δ(q, a)`; Φ when no transition was given.
    pub fn transition(&self, q: &str, a: &str) -> Result<&FuzzySet> {
        Ok(&self.delta[self.sig.state_id(q)?][self.sig.symbol_id(a)?])
    }

    pub(crate) fn delta_at(&self, q: usize, a: usize) -> &FuzzySet {
        &self.delta[q][a]
    }

    /// The same machine viewed as an [`Nfa`]: `δ'(q, a) = {δ(q, a)}`, which
    /// is the empty set when `δ(q, a) = Φ`.
    pub fn to_nfa(&self) -> Nfa {
        let delta = self
            .delta
            .iter()
            .map(|row| row.iter().cloned().map(DistSet::singleton).collect())
            .collect();
        Nfa {
            sig: self.sig.clone(),
            delta,
        }
    }

    /// Every degree appearing in δ or F, plus 0 and 1.
    pub fn values(&self) -> BTreeSet<Value> {
        let mut out = BTreeSet::new();
        self.sig.collect_values(&mut out);
        for dist in self.delta.iter().flatten() {
            out.extend(dist.values());
        }
        out
    }

    pub(crate) fn from_raw(sig: Signature, delta: Vec<Vec<FuzzySet>>) -> Dfa {
        Dfa { sig, delta }
    }
}

impl PartialEq for Dfa {
    fn eq(&self, other: &Self) -> bool {
        self.sig.same_as(&other.sig)
            && self.sig.states.iter().all(|q| {
                self.sig
                    .alphabet
                    .iter()
                    .all(|a| self.transition(q, a).ok() == other.transition(q, a).ok())
            })
    }
}

impl Eq for Dfa {}

/// Nondeterministic fuzzy automaton.
#[derive(Debug, Clone)]
pub struct Nfa {
    sig: Signature,
    delta: Vec<Vec<DistSet>>,
}

signature_accessors!(Nfa);

impl Nfa {
    pub fn new(parts: MachineParts) -> Result<Nfa> {
        let sig = Signature::new(parts.states, parts.alphabet, parts.initial, parts.final_set)?;
        let mut delta = vec![vec![DistSet::new(); sig.alphabet.len()]; sig.states.len()];
        for t in parts.transitions {
            let (from, symbol) = sig.locate(&t)?;
            let a = symbol.ok_or(Error::EpsilonNotAllowed)?;
            delta[from][a].insert(t.dist);
        }
        Ok(Nfa { sig, delta })
    }

    /// `δ(q, a)`; empty when no transition was given.
    pub fn transition(&self, q: &str, a: &str) -> Result<&DistSet> {
        Ok(&self.delta[self.sig.state_id(q)?][self.sig.symbol_id(a)?])
    }

    pub(crate) fn delta_at(&self, q: usize, a: usize) -> &DistSet {
        &self.delta[q][a]
    }

    /// The same machine with no ε-moves.
    pub fn to_enfa(&self) -> Enfa {
        Enfa {
            sig: self.sig.clone(),
            delta: self.delta.clone(),
            eps: vec![DistSet::new(); self.sig.states.len()],
        }
    }

    pub fn values(&self) -> BTreeSet<Value> {
        let mut out = BTreeSet::new();
        self.sig.collect_values(&mut out);
        for set in self.delta.iter().flatten() {
            for dist in set {
                out.extend(dist.values());
            }
        }
        out
    }

    pub(crate) fn from_raw(sig: Signature, delta: Vec<Vec<DistSet>>) -> Nfa {
        Nfa { sig, delta }
    }

    pub(crate) fn map_cells(&self, f: impl Fn(&DistSet) -> DistSet) -> Nfa {
        let delta = self
            .delta
            .iter()
            .map(|row| row.iter().map(&f).collect())
            .collect();
        Nfa {
            sig: self.sig.clone(),
            delta,
        }
    }

    pub(crate) fn with_final_set(mut self, final_set: FuzzySet) -> Nfa {
        self.sig.final_set = final_set;
        self
    }
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.sig.same_as(&other.sig)
            && self.sig.states.iter().all(|q| {
                self.sig
                    .alphabet
                    .iter()
                    .all(|a| self.transition(q, a).ok() == other.transition(q, a).ok())
            })
    }
}

impl Eq for Nfa {}

/// Nondeterministic fuzzy automaton with ε-moves.
#[derive(Debug, Clone)]
pub struct Enfa {
    sig: Signature,
    delta: Vec<Vec<DistSet>>,
    eps: Vec<DistSet>,
}

signature_accessors!(Enfa);

impl Enfa {
    pub fn new(parts: MachineParts) -> Result<Enfa> {
        let sig = Signature::new(parts.states, parts.alphabet, parts.initial, parts.final_set)?;
        let mut delta = vec![vec![DistSet::new(); sig.alphabet.len()]; sig.states.len()];
        let mut eps = vec![DistSet::new(); sig.states.len()];
        for t in parts.transitions {
            match sig.locate(&t)? {
                (from, Some(a)) => delta[from][a].insert(t.dist),
                (from, None) => eps[from].insert(t.dist),
            };
        }
        Ok(Enfa { sig, delta, eps })
    }

    /// `δ(q, a)` for a symbol.
    pub fn transition(&self, q: &str, a: &str) -> Result<&DistSet> {
        Ok(&self.delta[self.sig.state_id(q)?][self.sig.symbol_id(a)?])
    }

    /// `δ(q, ε)`.
    pub fn epsilon_transition(&self, q: &str) -> Result<&DistSet> {
        Ok(&self.eps[self.sig.state_id(q)?])
    }

    pub(crate) fn delta_at(&self, q: usize, a: usize) -> &DistSet {
        &self.delta[q][a]
    }

    pub(crate) fn eps_at(&self, q: usize) -> &DistSet {
        &self.eps[q]
    }

    /// True when no state has an ε-move.
    pub fn is_epsilon_free(&self) -> bool {
        self.eps.iter().all(DistSet::is_empty)
    }

    pub fn values(&self) -> BTreeSet<Value> {
        let mut out = BTreeSet::new();
        self.sig.collect_values(&mut out);
        for set in self.delta.iter().flatten().chain(&self.eps) {
            for dist in set {
                out.extend(dist.values());
            }
        }
        out
    }
}

impl PartialEq for Enfa {
    fn eq(&self, other: &Self) -> bool {
        self.sig.same_as(&other.sig)
            && self.sig.states.iter().all(|q| {
                self.epsilon_transition(q).ok() == other.epsilon_transition(q).ok()
                    && self
                        .sig
                        .alphabet
                        .iter()
                        .all(|a| self.transition(q, a).ok() == other.transition(q, a).ok())
            })
    }
}

impl Eq for Enfa {}

/// Any of the three machine types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Dfa(Dfa),
    Nfa(Nfa),
    Enfa(Enfa),
}

impl Machine {
    pub fn kind(&self) -> Kind {
        match self {
            Machine::Dfa(_) => Kind::Dfa,
            Machine::Nfa(_) => Kind::Nfa,
            Machine::Enfa(_) => Kind::Enfa,
        }
    }

    pub(crate) fn signature(&self) -> &Signature {
        match self {
            Machine::Dfa(m) => m.signature(),
            Machine::Nfa(m) => m.signature(),
            Machine::Enfa(m) => m.signature(),
        }
    }

    pub fn states(&self) -> &[String] {
        &self.signature().states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.signature().alphabet
    }

    pub fn initial(&self) -> &str {
        &self.signature().initial
    }

    pub fn final_set(&self) -> &FuzzySet {
        &self.signature().final_set
    }

    /// A finite superset of every degree any evaluation can produce.
    pub fn values(&self) -> BTreeSet<Value> {
        match self {
            Machine::Dfa(m) => m.values(),
            Machine::Nfa(m) => m.values(),
            Machine::Enfa(m) => m.values(),
        }
    }

    pub fn into_dfa(self) -> Result<Dfa> {
        match self {
            Machine::Dfa(m) => Ok(m),
            other => Err(kind_mismatch(Kind::Dfa, other.kind())),
        }
    }

    pub fn into_nfa(self) -> Result<Nfa> {
        match self {
            Machine::Nfa(m) => Ok(m),
            other => Err(kind_mismatch(Kind::Nfa, other.kind())),
        }
    }

    pub fn into_enfa(self) -> Result<Enfa> {
        match self {
            Machine::Enfa(m) => Ok(m),
            other => Err(kind_mismatch(Kind::Enfa, other.kind())),
        }
    }
}

fn kind_mismatch(expected: Kind, found: Kind) -> Error {
    Error::KindMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

impl From<Dfa> for Machine {
    fn from(m: Dfa) -> Self {
        Machine::Dfa(m)
    }
}

impl From<Nfa> for Machine {
    fn from(m: Nfa) -> Self {
        Machine::Nfa(m)
    }
}

impl From<Enfa> for Machine {
    fn from(m: Enfa) -> Self {
        Machine::Enfa(m)
    }
}

//! Max-min fuzzy automata with exact rational degrees.
//!
//! Three machine types are provided: deterministic ([`Dfa`]), nondeterministic
//! ([`Nfa`]), and nondeterministic with ε-moves ([`Enfa`]). A
//! nondeterministic transition yields a *set* of possibility distributions
//! rather than one, and the language degree of a string is the best
//! `height(μ ∩ F)` over the distributions reached.
//!
//! All three accept the same class of fuzzy languages, and
//! [`transforms`] converts between them without changing the state set:
//!
//! ```
//! use fza_core::{samples, transforms, Value};
//!
//! let nfa = samples::nfa();
//! let dfa = transforms::determinize(&nfa);
//! let ab = ["a", "b"];
//! assert_eq!(nfa.degree(&ab).unwrap(), "0.7".parse::<Value>().unwrap());
//! assert_eq!(dfa.degree(&ab).unwrap(), nfa.degree(&ab).unwrap());
//! ```
//!
//! The [`oracle`] module re-derives every degree by enumerating explicit
//! runs, independently of the set-based recurrences in [`semantics`].

pub mod automata;
mod error;
pub mod format;
mod fuzzy_set;
mod limits;
pub mod oracle;
pub mod random;
pub mod samples;
pub mod semantics;
pub mod transforms;
mod value;

pub use automata::{
    CrispNfa, Dfa, DistSet, Enfa, Kind, Label, Machine, MachineParts, Nfa, Transition,
    EPSILON_TOKEN,
};
pub use error::{Error, Result};
pub use fuzzy_set::{validate_name, FuzzySet};
pub use limits::Limits;
pub use oracle::{Counterexample, Verdict};
pub use semantics::{EnfaEvaluator, EvalTrace, Evaluator, Reached};
pub use value::Value;

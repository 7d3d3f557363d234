//! The `.fza.json` machine format.
//!
//! ```json
//! {
//!   "format": 1,
//!   "kind": "nfa",
//!   "states": ["q0", "q1"],
//!   "alphabet": ["a"],
//!   "initial": "q0",
//!   "final": { "q1": "0.5" },
//!   "transitions": [
//!     { "from": "q0", "symbol": "a", "dist": { "q1": "7/10" } }
//!   ]
//! }
//! ```
//!
//! Degrees are string literals (decimal or `num/den`) so that they survive
//! the trip exactly. The symbol `"eps"` marks an ε-move and is only accepted
//! in an `enfa` document. Omitted `(from, symbol)` pairs mean Φ or no
//! alternatives. An `nfa`/`enfa` document lists one record per alternative.
//!
//! [`serialize`] writes the canonical form: states and alphabet sorted,
//! records sorted by `(from, symbol)` and then by distribution, degrees in
//! canonical literal form, Φ records omitted.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::automata::{
    Dfa, DistSet, Enfa, Kind, Label, Machine, MachineParts, Nfa, Transition, EPSILON_TOKEN,
};
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzySet;

/// Schema version written to and required in the `format` field.
pub const FORMAT_VERSION: u64 = 1;

/// Conventional file extension.
pub const FILE_EXTENSION: &str = ".fza.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum DocKind {
    Dfa,
    Nfa,
    Enfa,
}

/// A distribution as written in a document: element → value literal, kept in
/// file order so that repeated keys can be reported.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct DistLiteral(Vec<(String, String)>);

impl Serialize for DistLiteral {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for DistLiteral {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct LiteralVisitor;

        impl<'de> Visitor<'de> for LiteralVisitor {
            type Value = DistLiteral;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping state names to value literals")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<DistLiteral, A::Error> {
                let mut entries: Vec<(String, String)> = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    if entries.iter().any(|(seen, _)| *seen == k) {
                        return Err(serde::de::Error::custom(format!("duplicate element `{k}`")));
                    }
                    entries.push((k, v));
                }
                Ok(DistLiteral(entries))
            }
        }

        deserializer.deserialize_map(LiteralVisitor)
    }
}

impl DistLiteral {
    fn from_set(set: &FuzzySet) -> Self {
        DistLiteral(
            set.iter()
                .map(|(k, v)| (k.to_owned(), v.to_string()))
                .collect(),
        )
    }

    fn to_set(&self) -> Result<FuzzySet> {
        FuzzySet::parse_pairs(self.0.iter().map(|(k, v)| (k.as_str(), v.as_str())))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    from: String,
    symbol: String,
    dist: DistLiteral,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: u64,
    kind: DocKind,
    states: Vec<String>,
    alphabet: Vec<String>,
    initial: String,
    #[serde(rename = "final", default)]
    final_set: DistLiteral,
    #[serde(default)]
    transitions: Vec<Record>,
}

fn syntax_error(e: serde_json::Error) -> Error {
    let message = e.to_string();
    // serde_json appends " at line L column C"; the position is reported separately
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_owned(),
        None => message,
    };
    Error::Syntax {
        line: e.line().max(1),
        column: e.column().max(1),
        message,
    }
}

/// Parses and validates a machine document.
pub fn parse(text: &str) -> Result<Machine> {
    let doc: Document = serde_json::from_str(text).map_err(syntax_error)?;
    if doc.format != FORMAT_VERSION {
        return Err(Error::FormatVersion(doc.format));
    }
    let mut transitions = Vec::with_capacity(doc.transitions.len());
    for record in doc.transitions {
        let label = if record.symbol == EPSILON_TOKEN {
            if doc.kind != DocKind::Enfa {
                return Err(Error::EpsilonNotAllowed);
            }
            Label::Epsilon
        } else {
            Label::Symbol(record.symbol)
        };
        transitions.push(Transition {
            from: record.from,
            label,
            dist: record.dist.to_set()?,
        });
    }
    let parts = MachineParts {
        states: doc.states,
        alphabet: doc.alphabet,
        initial: doc.initial,
        final_set: doc.final_set.to_set()?,
        transitions,
    };
    Ok(match doc.kind {
        DocKind::Dfa => Machine::Dfa(Dfa::new(parts)?),
        DocKind::Nfa => Machine::Nfa(Nfa::new(parts)?),
        DocKind::Enfa => Machine::Enfa(Enfa::new(parts)?),
    })
}

fn sorted(names: &[String]) -> Vec<String> {
    let mut v = names.to_vec();
    v.sort();
    v
}

fn push_set(records: &mut Vec<Record>, from: &str, symbol: &str, set: &DistSet) {
    records.extend(set.iter().map(|dist| Record {
        from: from.to_owned(),
        symbol: symbol.to_owned(),
        dist: DistLiteral::from_set(dist),
    }));
}

fn document(machine: &Machine) -> Document {
    let states = sorted(machine.states());
    let alphabet = sorted(machine.alphabet());
    let mut labels: Vec<&str> = alphabet.iter().map(String::as_str).collect();
    if machine.kind() == Kind::Enfa {
        labels.push(EPSILON_TOKEN);
        labels.sort();
    }
    let mut transitions = Vec::new();
    for q in &states {
        for &a in &labels {
            match machine {
                Machine::Dfa(m) => {
                    let dist = m.transition(q, a).expect("declared names");
                    if !dist.is_empty() {
                        push_set(&mut transitions, q, a, &DistSet::singleton(dist.clone()));
                    }
                }
                Machine::Nfa(m) => push_set(
                    &mut transitions,
                    q,
                    a,
                    m.transition(q, a).expect("declared names"),
                ),
                Machine::Enfa(m) => {
                    let set = if a == EPSILON_TOKEN {
                        m.epsilon_transition(q)
                    } else {
                        m.transition(q, a)
                    };
                    push_set(&mut transitions, q, a, set.expect("declared names"));
                }
            }
        }
    }
    Document {
        format: FORMAT_VERSION,
        kind: match machine.kind() {
            Kind::Dfa => DocKind::Dfa,
            Kind::Nfa => DocKind::Nfa,
            Kind::Enfa => DocKind::Enfa,
        },
        states,
        alphabet,
        initial: machine.initial().to_owned(),
        final_set: DistLiteral::from_set(machine.final_set()),
        transitions,
    }
}

/// Canonical text of `machine`, ending in a newline. Equal machines always
/// produce identical bytes.
pub fn serialize(machine: &Machine) -> String {
    let mut text = serde_json::to_string_pretty(&document(machine)).expect("plain data");
    text.push('\n');
    text
}

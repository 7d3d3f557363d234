use thiserror::Error;

/// Errors raised while building, evaluating, transforming, or (de)serializing
/// fuzzy automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid value literal `{0}`")]
    InvalidValue(String),
    #[error("value `{0}` lies outside [0, 1]")]
    ValueOutOfRange(String),
    #[error("invalid name `{0}`: names must be non-empty and contain no whitespace")]
    InvalidName(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("`{0}` is reserved for the empty string and cannot be an alphabet symbol")]
    ReservedSymbol(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("initial state `{0}` is not a declared state")]
    UnknownInitial(String),
    #[error("deterministic machine has more than one transition for ({state}, {symbol})")]
    NonDeterministic { state: String, symbol: String },
    #[error("ε-transitions are only allowed in an enfa")]
    EpsilonNotAllowed,
    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0}")]
    FormatVersion(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Sparse fuzzy subsets of a finite universe of named elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::value::Value;

/// Checks that `name` is a usable element, state, or symbol token.
pub fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_owned()));
    }
    Ok(())
}

/// A fuzzy set with only its positive memberships stored.
///
/// Absent elements have membership 0, so the empty map is the empty fuzzy
/// set Φ and equality of the maps is equality of the fuzzy sets. The derived
/// ordering is the canonical order used inside [`DistSet`](crate::DistSet).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzySet {
    entries: BTreeMap<String, Value>,
}

impl FuzzySet {
    /// The empty fuzzy set Φ.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `value/name`, or Φ when `value` is zero.
    pub fn singleton(name: impl Into<String>, value: Value) -> Self {
        let mut set = Self::empty();
        if !value.is_zero() {
            set.entries.insert(name.into(), value);
        }
        set
    }

    /// Builds a fuzzy set from `(element, value)` pairs. Zero memberships are
    /// dropped; repeated elements and malformed names are rejected.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Value)>,
        S: Into<String>,
    {
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = BTreeMap::new();
        for (name, value) in pairs {
            let name = name.into();
            validate_name(&name)?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateElement(name));
            }
            if !value.is_zero() {
                entries.insert(name, value);
            }
        }
        Ok(FuzzySet { entries })
    }

    /// Like [`from_pairs`](Self::from_pairs) but with value literals.
    pub fn parse_pairs<'a, I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(name, lit)| Ok((name, lit.parse::<Value>()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(pairs)
    }

    /// Membership of `name`; 0 when absent.
    pub fn get(&self, name: &str) -> Value {
        self.entries.get(name).copied().unwrap_or(Value::ZERO)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Elements with positive membership, in sorted order.
    pub fn support(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Value)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn values(&self) -> impl Iterator<Item = Value> + '_ {
        self.entries.values().copied()
    }

    /// Supremum of the memberships; 0 for Φ.
    pub fn height(&self) -> Value {
        self.values().max().unwrap_or(Value::ZERO)
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &FuzzySet) -> FuzzySet {
        let mut entries = self.entries.clone();
        for (name, &value) in &other.entries {
            entries
                .entry(name.clone())
                .and_modify(|v| *v = v.join(value))
                .or_insert(value);
        }
        FuzzySet { entries }
    }

    /// In-place pointwise maximum.
    pub fn union_with(&mut self, other: &FuzzySet) {
        for (name, &value) in &other.entries {
            match self.entries.get_mut(name) {
                Some(v) => *v = v.join(value),
                None => {
                    self.entries.insert(name.clone(), value);
                }
            }
        }
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &FuzzySet) -> FuzzySet {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let entries = small
            .entries
            .iter()
            .filter_map(|(name, &value)| {
                large
                    .entries
                    .get(name)
                    .map(|&w| (name.clone(), value.meet(w)))
            })
            .collect();
        FuzzySet { entries }
    }

    /// Scale product `λ · A`, i.e. `λ ∧ A(x)` at every `x`.
    pub fn scale(&self, lambda: Value) -> FuzzySet {
        if lambda.is_zero() {
            return FuzzySet::empty();
        }
        let entries = self
            .entries
            .iter()
            .map(|(name, &value)| (name.clone(), lambda.meet(value)))
            .collect();
        FuzzySet { entries }
    }

    /// `self ⊆ other`, pointwise.
    pub fn is_subset_of(&self, other: &FuzzySet) -> bool {
        self.entries
            .iter()
            .all(|(name, &value)| value <= other.get(name))
    }
}

impl fmt::Display for FuzzySet {
    /// Zadeh notation, e.g. `0.5/q2 + 0.9/q4`; Φ for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("Φ");
        }
        for (i, (name, value)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{value}/{name}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

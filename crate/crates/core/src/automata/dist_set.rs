use std::collections::BTreeSet;
use std::fmt;

use crate::fuzzy_set::FuzzySet;

/// A finite set of possibility distributions, the nondeterministic
/// alternatives of one transition.
///
/// Φ is never stored: it contributes nothing to any language degree, so
/// inserting it is a no-op. Members are kept in canonical order, which makes
/// equality and iteration order independent of insertion order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistSet {
    members: BTreeSet<FuzzySet>,
}

impl DistSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(dist: FuzzySet) -> Self {
        let mut set = Self::new();
        set.insert(dist);
        set
    }

    /// Inserts `dist` unless it is Φ or already present. Returns whether the
    /// set changed.
    pub fn insert(&mut self, dist: FuzzySet) -> bool {
        if dist.is_empty() {
            return false;
        }
        self.members.insert(dist)
    }

    pub fn contains(&self, dist: &FuzzySet) -> bool {
        self.members.contains(dist)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FuzzySet> + '_ {
        self.members.iter()
    }

    /// Pointwise union of every member; Φ for the empty set.
    pub fn union_all(&self) -> FuzzySet {
        let mut acc = FuzzySet::empty();
        for dist in &self.members {
            acc.union_with(dist);
        }
        acc
    }

    /// Set union with another `DistSet`.
    pub fn extend_from(&mut self, other: &DistSet) {
        self.members.extend(other.members.iter().cloned());
    }

    pub(crate) fn retain(&mut self, f: impl FnMut(&FuzzySet) -> bool) {
        self.members.retain(f);
    }
}

impl FromIterator<FuzzySet> for DistSet {
    fn from_iter<I: IntoIterator<Item = FuzzySet>>(iter: I) -> Self {
        let mut set = DistSet::new();
        set.extend(iter);
        set
    }
}

impl Extend<FuzzySet> for DistSet {
    fn extend<I: IntoIterator<Item = FuzzySet>>(&mut self, iter: I) {
        for dist in iter {
            self.insert(dist);
        }
    }
}

impl IntoIterator for DistSet {
    type Item = FuzzySet;
    type IntoIter = std::collections::btree_set::IntoIter<FuzzySet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a> IntoIterator for &'a DistSet {
    type Item = &'a FuzzySet;
    type IntoIter = std::collections::btree_set::Iter<'a, FuzzySet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for DistSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (i, dist) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{dist}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for DistSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(pairs: &[(&str, &str)]) -> FuzzySet {
        FuzzySet::parse_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn drops_phi_and_duplicates() {
        let mut s = DistSet::new();
        assert!(!s.insert(FuzzySet::empty()));
        assert!(s.insert(fs(&[("q1", "0.9")])));
        assert!(!s.insert(fs(&[("q1", "9/10")])));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn order_independent() {
        let a = fs(&[("q1", "0.9"), ("q2", "0.2")]);
        let b = fs(&[("q2", "0.2"), ("q3", "0.9")]);
        let x: DistSet = [a.clone(), b.clone()].into_iter().collect();
        let y: DistSet = [b, a].into_iter().collect();
        assert_eq!(x, y);
        assert_eq!(x.to_string(), "{0.9/q1 + 0.2/q2, 0.2/q2 + 0.9/q3}");
        assert_eq!(
            x.union_all(),
            fs(&[("q1", "0.9"), ("q2", "0.2"), ("q3", "0.9")])
        );
        assert!(DistSet::new().union_all().is_empty());
        assert_eq!(DistSet::new().to_string(), "∅");
    }
}

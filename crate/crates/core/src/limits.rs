/// Caps on the exponential parts of the library. Exceeding one yields
/// [`Error::ResourceLimit`](crate::Error::ResourceLimit) instead of a
/// truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest [`DistSet`](crate::DistSet) any evaluation or transformation
    /// may build.
    pub max_set_size: usize,
    /// Runs the brute-force oracle may explore for a single string.
    pub max_runs: u64,
    /// Strings a language enumeration may visit.
    pub max_strings: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_set_size: 1 << 20,
            max_runs: 10_000_000,
            max_strings: 10_000_000,
        }
    }
}

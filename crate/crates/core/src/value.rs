//! Exact membership degrees.
//!
//! A [`Value`] is a rational number in `[0, 1]` kept in lowest terms. Max-min
//! evaluation only ever selects among the degrees it is given, so no
//! arithmetic beyond comparison is needed and equality is always exact.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A membership degree in the closed unit interval.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(Ratio<u64>);

impl Value {
    pub const ZERO: Value = Value(Ratio::new_raw(0, 1));
    pub const ONE: Value = Value(Ratio::new_raw(1, 1));

    /// Builds `numerator / denominator`, reducing to lowest terms.
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidValue(format!("{numerator}/{denominator}")));
        }
        if numerator > denominator {
            return Err(Error::ValueOutOfRange(format!("{numerator}/{denominator}")));
        }
        Ok(Value(Ratio::new(numerator, denominator)))
    }

    pub fn numerator(self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.numerator() == 0
    }

    pub fn is_one(self) -> bool {
        self == Value::ONE
    }

    /// `self ∧ other`
    pub fn meet(self, other: Value) -> Value {
        self.min(other)
    }

    /// `self ∨ other`
    pub fn join(self, other: Value) -> Value {
        self.max(other)
    }

    /// Number of decimal places needed to write the value exactly, if the
    /// denominator has the form `2^a · 5^b`.
    fn decimal_places(self) -> Option<u32> {
        let mut den = self.denominator();
        let (mut twos, mut fives) = (0u32, 0u32);
        while den.is_multiple_of(2) {
            den /= 2;
            twos += 1;
        }
        while den.is_multiple_of(5) {
            den /= 5;
            fives += 1;
        }
        (den == 1).then_some(twos.max(fives))
    }
}

impl Default for Value {
    fn default() -> Self {
        Value::ZERO
    }
}

fn parse_digits(s: &str, literal: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidValue(literal.to_owned()));
    }
    s.parse::<u64>()
        .map_err(|_| Error::InvalidValue(literal.to_owned()))
}

impl FromStr for Value {
    type Err = Error;

    /// Accepts decimal literals (`0`, `1`, `0.7`, `1.00`) and fractions (`7/10`).
    fn from_str(literal: &str) -> Result<Self> {
        let s = literal.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_digits(num.trim(), literal)?;
            let den = parse_digits(den.trim(), literal)?;
            if den == 0 {
                return Err(Error::InvalidValue(literal.to_owned()));
            }
            if num > den {
                return Err(Error::ValueOutOfRange(literal.to_owned()));
            }
            return Value::new(num, den);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        let int = parse_digits(int_part, literal)?;
        if s.contains('.') && frac_part.is_empty() {
            return Err(Error::InvalidValue(literal.to_owned()));
        }
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.len() > 18 {
            return Err(Error::InvalidValue(literal.to_owned()));
        }
        let frac = if frac_part.is_empty() {
            0
        } else {
            parse_digits(frac_part, literal)?
        };
        let den = 10u64.pow(frac_part.len() as u32);
        let num = int
            .checked_mul(den)
            .and_then(|n| n.checked_add(frac))
            .ok_or_else(|| Error::ValueOutOfRange(literal.to_owned()))?;
        if num > den {
            return Err(Error::ValueOutOfRange(literal.to_owned()));
        }
        Value::new(num, den)
    }
}

impl fmt::Display for Value {
    /// Canonical literal: the shortest exact decimal when one exists,
    /// `num/den` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = (self.numerator(), self.denominator());
        if den == 1 {
            return write!(f, "{num}");
        }
        match self.decimal_places() {
            Some(places) => {
                // long division terminates after `places` digits
                let mut out = String::from("0.");
                let mut rem = u128::from(num);
                let den = u128::from(den);
                for _ in 0..places {
                    rem *= 10;
                    out.push(char::from(b'0' + (rem / den) as u8));
                    rem %= den;
                }
                debug_assert_eq!(rem, 0);
                f.write_str(&out)
            }
            None => write!(f, "{num}/{den}"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Value {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Value {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let literal = <std::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        literal.parse().map_err(serde::de::Error::custom)
    }
}

impl TryFrom<&str> for Value {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        s.parse()
    }
}

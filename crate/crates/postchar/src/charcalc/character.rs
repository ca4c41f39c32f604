//! The postulation character: a finitely supported integer function on
//! indices 0, 1, 2, ... recording the negated N-th difference of a
//! subscheme's postulation function.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which N-th difference a character records: curves in `P^3` use the third,
/// subschemes of `P^4` the fourth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    P3,
    P4,
}

impl Ambient {
    pub fn dim(self) -> u8 {
        match self {
            Ambient::P3 => 3,
            Ambient::P4 => 4,
        }
    }
}

/// A finitely supported character. Trailing zeros are trimmed on
/// construction; the empty sequence is the character of the empty scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    values: Vec<i64>,
    ambient: Ambient,
}

/// Outcome of the admissibility check: the least degree `s` of a
/// hypersurface containing the scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Admissible {
    pub s: usize,
}

impl Character {
    pub fn new(mut values: Vec<i64>, ambient: Ambient) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        Character { values, ambient }
    }

    pub fn p3(values: Vec<i64>) -> Self {
        Character::new(values, Ambient::P3)
    }

    pub fn p4(values: Vec<i64>) -> Self {
        Character::new(values, Ambient::P4)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Value at index `n`; zero beyond the stored support.
    pub fn get(&self, n: usize) -> i64 {
        self.values.get(n).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest index with a nonzero value.
    pub fn q(&self) -> Option<usize> {
        if self.values.is_empty() {
            None
        } else {
            Some(self.values.len() - 1)
        }
    }

    /// Same values viewed in the other ambient space.
    pub fn retag(&self, ambient: Ambient) -> Self {
        Character {
            values: self.values.clone(),
            ambient,
        }
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Power moment `sum n^k * gamma(n)`.
    pub fn moment(&self, k: u32) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(n, &v)| (n as i64).pow(k) * v)
            .sum()
    }

    pub fn require_ambient(&self, ambient: Ambient) -> Result<(), Error> {
        if self.ambient != ambient {
            return Err(Error::AmbientMismatch {
                expected: ambient.dim(),
                got: self.ambient.dim(),
            });
        }
        Ok(())
    }

    /// Admissibility: `gamma(n) = -1` for `0 <= n < s`, `gamma(s) >= 0`, and
    /// the values sum to zero. Returns `s`. The empty character is
    /// admissible with `s = 0`.
    pub fn validate_admissible(&self) -> Result<Admissible, Error> {
        if self.values.is_empty() {
            return Ok(Admissible { s: 0 });
        }
        let s = match self.values.iter().position(|&v| v >= 0) {
            Some(i) => i,
            None => return Err(Error::NoNonnegative),
        };
        for (index, &value) in self.values[..s].iter().enumerate() {
            if value != -1 {
                return Err(Error::PrefixValue { index, value });
            }
        }
        let sum = self.sum();
        if sum != 0 {
            return Err(Error::SumNonzero { sum });
        }
        Ok(Admissible { s })
    }

    pub fn is_admissible(&self) -> bool {
        self.validate_admissible().is_ok()
    }

    /// First index carrying a nonnegative value (the `s` of an admissible
    /// character), without running the full validation.
    pub fn first_nonnegative(&self) -> Option<usize> {
        if self.values.is_empty() {
            Some(0)
        } else {
            self.values.iter().position(|&v| v >= 0)
        }
    }

    /// Positive in the sense of codimension-2 ACM characters:
    /// no negative value at or after the first nonnegative index.
    pub fn is_positive(&self) -> bool {
        match self.first_nonnegative() {
            None => false,
            Some(s) => self.values[s..].iter().all(|&v| v >= 0),
        }
    }

    /// Checks positivity and reports the offending index on failure.
    pub fn validate_positive(&self) -> Result<(), Error> {
        let s = self.first_nonnegative().ok_or(Error::NoNonnegative)?;
        for (i, &value) in self.values.iter().enumerate().skip(s) {
            if value < 0 {
                return Err(Error::NotPositive { index: i, value });
            }
        }
        Ok(())
    }

    /// Connected: the set of indices with strictly positive value is a
    /// (possibly empty) interval.
    pub fn is_connected(&self) -> bool {
        let mut in_run = false;
        let mut run_done = false;
        for &v in &self.values {
            if v > 0 {
                if run_done {
                    return false;
                }
                in_run = true;
            } else if in_run {
                in_run = false;
                run_done = true;
            }
        }
        true
    }

    /// Symmetry `gamma(n) = gamma(q - n)`; `q` must be the top of the
    /// support.
    pub fn validate_symmetric(&self, q: usize) -> Result<(), Error> {
        if self.values.len() != q + 1 {
            return Err(Error::NotSymmetric {
                index: self.values.len().saturating_sub(1),
                mirror: q,
            });
        }
        for n in 0..=q / 2 {
            if self.values[n] != self.values[q - n] {
                return Err(Error::NotSymmetric {
                    index: n,
                    mirror: q - n,
                });
            }
        }
        Ok(())
    }

    /// The "first half" of a symmetric character: `delta(n) = gamma(n)` for
    /// `n < q/2`, half the middle value at `n = q/2` when `q` is even, zero
    /// beyond. The result is tagged for `P^3` since it is read as the
    /// character of a hyperplane-section curve.
    pub fn delta_split(&self, q: usize) -> Result<Character, Error> {
        self.validate_symmetric(q)?;
        let half = q / 2;
        let mut delta = Vec::with_capacity(half + 1);
        for n in 0..=half {
            if 2 * n == q {
                let middle = self.values[n];
                if middle % 2 != 0 {
                    return Err(Error::OddMiddle {
                        index: n,
                        value: middle,
                    });
                }
                delta.push(middle / 2);
            } else {
                delta.push(self.values[n]);
            }
        }
        Ok(Character::new(delta, Ambient::P3))
    }

    /// Inverse of [`delta_split`]: `gamma(n) = delta(n) + delta(q - n)`.
    /// Requires `delta` positive admissible with support within `q/2`.
    pub fn gamma_from_delta(delta: &Character, q: usize) -> Result<Character, Error> {
        delta.validate_admissible()?;
        delta.validate_positive()?;
        if let Some(r) = delta.q() {
            if 2 * r > q {
                return Err(Error::DeltaSupport { r, q });
            }
        }
        Ok(Self::mirror_merge(delta, q))
    }

    /// Unchecked reflected sum `gamma(n) = delta(n) + delta(q - n)`. Also
    /// meaningful when the support of `delta` passes `q/2` (the character of
    /// an `mH - K` curve on a surface with character `delta`, for small
    /// twists), so geometry routines call this directly.
    pub(crate) fn mirror_merge(delta: &Character, q: usize) -> Character {
        let mut values = vec![0i64; q + 1];
        for (n, slot) in values.iter_mut().enumerate() {
            *slot = delta.get(n) + delta.get(q - n);
        }
        Character::new(values, Ambient::P4)
    }

    pub fn parse(input: &str, ambient: Ambient) -> Result<Character, Error> {
        let cleaned = input.trim().trim_start_matches('(').trim_end_matches(')');
        let mut values = Vec::new();
        for tok in cleaned.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse::<i64>().map_err(|_| Error::ParseCharacter {
                input: input.to_string(),
            })?;
            values.push(v);
        }
        Ok(Character::new(values, ambient))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Character {
    type Err = Error;

    /// Parses in the default `P^4` tagging; use [`Character::parse`] to
    /// choose the ambient space.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Character::parse(s, Ambient::P4)
    }
}

// Characters serialize as a bare JSON array of values. Deserialization also
// accepts the `{"gamma": [...]}` file form.
impl Serialize for Character {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CharVisitor;

        impl<'de> Visitor<'de> for CharVisitor {
            type Value = Character;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integers or an object with a `gamma` array")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Character, A::Error> {
                let mut values = Vec::new();
                while let Some(v) = seq.next_element::<i64>()? {
                    values.push(v);
                }
                Ok(Character::p4(values))
            }

            fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<Character, A::Error> {
                let mut gamma: Option<Vec<i64>> = None;
                while let Some(key) = map.next_key::<String>()? {
                    if key == "gamma" {
                        gamma = Some(map.next_value()?);
                    } else {
                        let _: de::IgnoredAny = map.next_value()?;
                    }
                }
                gamma
                    .map(Character::p4)
                    .ok_or_else(|| de::Error::missing_field("gamma"))
            }
        }

        deserializer.deserialize_any(CharVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let c = Character::p4(vec![-1, 2, -1, 0, 0]);
        assert_eq!(c.values(), &[-1, 2, -1]);
        assert_eq!(c.q(), Some(2));
    }

    #[test]
    fn admissible_line() {
        let c = Character::p4(vec![-1, 2, -1]);
        assert_eq!(c.validate_admissible().unwrap().s, 1);
    }

    #[test]
    fn admissible_with_zero_at_s() {
        // s picks the first index whose value is >= 0, even when it is 0.
        let c = Character::p4(vec![-1, -1, 0, 2]);
        assert_eq!(c.validate_admissible().unwrap().s, 2);
    }

    #[test]
    fn rejects_minus_two_in_prefix() {
        let c = Character::p4(vec![-1, -2, 3]);
        assert_eq!(
            c.validate_admissible(),
            Err(Error::PrefixValue { index: 1, value: -2 })
        );
    }

    #[test]
    fn rejects_nonzero_sum() {
        let c = Character::p3(vec![-1, 2]);
        assert_eq!(c.validate_admissible(), Err(Error::SumNonzero { sum: 1 }));
    }

    #[test]
    fn empty_character_is_admissible() {
        let c = Character::p4(vec![]);
        assert_eq!(c.validate_admissible().unwrap().s, 0);
        assert!(c.is_positive());
        assert!(c.is_connected());
    }

    #[test]
    fn positivity_and_connectedness() {
        assert!(Character::p4(vec![-1, -1, -1, 3]).is_positive());
        assert!(Character::p4(vec![-1, -1, -1, 3]).is_connected());
        let gap = Character::p4(vec![-1, -1, 1, 0, 1]);
        assert!(gap.is_positive());
        assert!(!gap.is_connected());
        let neg = Character::p4(vec![-1, 1, -1, 1]);
        assert!(!neg.is_positive());
    }

    #[test]
    fn split_halves_the_middle_value() {
        let line = Character::p4(vec![-1, 2, -1]);
        let delta = line.delta_split(2).unwrap();
        assert_eq!(delta.values(), &[-1, 1]);
        assert_eq!(delta.ambient(), Ambient::P3);
    }

    #[test]
    fn split_rejects_odd_middle() {
        let c = Character::p4(vec![-1, 3, -1]);
        assert_eq!(
            c.delta_split(2),
            Err(Error::OddMiddle { index: 1, value: 3 })
        );
    }

    #[test]
    fn merge_round_trips() {
        let delta = Character::p3(vec![-1, -1, -1, 3]);
        let gamma = Character::gamma_from_delta(&delta, 6).unwrap();
        assert_eq!(gamma.values(), &[-1, -1, -1, 6, -1, -1, -1]);
        assert_eq!(gamma.delta_split(6).unwrap().values(), delta.values());
    }

    #[test]
    fn merge_rejects_wide_delta() {
        let delta = Character::p3(vec![-1, -1, 0, 2]);
        assert_eq!(
            Character::gamma_from_delta(&delta, 4),
            Err(Error::DeltaSupport { r: 3, q: 4 })
        );
    }

    #[test]
    fn merge_castelnuovo_at_q6() {
        let delta = Character::p3(vec![-1, -1, 0, 2]);
        let gamma = Character::gamma_from_delta(&delta, 6).unwrap();
        assert_eq!(gamma.values(), &[-1, -1, 0, 4, 0, -1, -1]);
    }

    #[test]
    fn parse_accepts_commas_and_spaces() {
        let a = Character::parse("-1,-1,-1,6,-1,-1,-1", Ambient::P4).unwrap();
        let b = Character::parse("-1 -1 -1 6 -1 -1 -1", Ambient::P4).unwrap();
        assert_eq!(a, b);
        assert!(Character::parse("-1,x", Ambient::P4).is_err());
    }

    #[test]
    fn serde_accepts_both_json_forms() {
        let bare: Character = serde_json::from_str("[-1,2,-1]").unwrap();
        let wrapped: Character = serde_json::from_str(r#"{"gamma":[-1,2,-1]}"#).unwrap();
        assert_eq!(bare, wrapped);
        assert_eq!(serde_json::to_string(&bare).unwrap(), "[-1,2,-1]");
    }
}

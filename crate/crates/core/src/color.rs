use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported dimension; colors `0..=MAX_DIM` fit in a `u32` mask.
pub const MAX_DIM: usize = 30;

/// A set of vertex colors, stored as a bitmask over `0..=MAX_DIM`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All colors `0..=d`.
    pub fn full(d: usize) -> Self {
        debug_assert!(d <= MAX_DIM);
        ColorSet(((1u64 << (d + 1)) - 1) as u32)
    }

    pub fn singleton(c: usize) -> Self {
        ColorSet(1 << c)
    }

    pub fn pair(p: usize, q: usize) -> Self {
        ColorSet((1 << p) | (1 << q))
    }

    pub fn contains(self, c: usize) -> bool {
        c < 32 && self.0 & (1 << c) != 0
    }

    pub fn insert(&mut self, c: usize) {
        self.0 |= 1 << c;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn difference(self, other: ColorSet) -> Self {
        ColorSet(self.0 & !other.0)
    }

    /// Largest color present, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |c| bits & (1 << c) != 0)
    }

    /// Errors unless every color lies in `0..=d`.
    pub fn check_within(self, d: usize) -> Result<()> {
        match self.max() {
            Some(m) if m > d => Err(Error::ColorOutOfRange {
                color: m as i64,
                max: d,
            }),
            _ => Ok(()),
        }
    }

    /// Returns the two colors of a two-element set.
    pub fn as_pair(self) -> Result<(usize, usize)> {
        if self.len() != 2 {
            return Err(Error::BadArity {
                expected: 2,
                found: self.len(),
            });
        }
        let mut it = self.iter();
        Ok((it.next().unwrap(), it.next().unwrap()))
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ColorSet(cur))
        })
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Parses comma-separated colors such as `"0,2"`; the empty string is the empty set.
impl FromStr for ColorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = ColorSet::EMPTY;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c: i64 = part
                .parse()
                .map_err(|_| Error::BadColors(format!("cannot parse color {part:?}")))?;
            if c < 0 || c as usize > MAX_DIM {
                return Err(Error::ColorOutOfRange {
                    color: c,
                    max: MAX_DIM,
                });
            }
            set.insert(c as usize);
        }
        Ok(set)
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&c) = v.iter().find(|&&c| c > MAX_DIM) {
            return Err(serde::de::Error::custom(format!("color {c} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s: ColorSet = "0,2,3".parse().unwrap();
        let subs: Vec<u32> = s.subsets().map(ColorSet::bits).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|&b| b & !s.bits() == 0));
        assert_eq!(ColorSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn parse_and_display() {
        let s: ColorSet = "{1, 3}".parse().unwrap();
        assert_eq!(s, ColorSet::pair(1, 3));
        assert_eq!(s.to_string(), "{1,3}");
        assert!("0,x".parse::<ColorSet>().is_err());
        assert!("-1".parse::<ColorSet>().is_err());
    }

    #[test]
    fn pair_arity() {
        assert!(ColorSet::singleton(2).as_pair().is_err());
        assert_eq!(ColorSet::pair(4, 1).as_pair().unwrap(), (1, 4));
        assert_eq!(ColorSet::full(3).max(), Some(3));
    }
}

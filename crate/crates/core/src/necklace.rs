//! Cyclic color orders up to rotation and reflection.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cyclic permutation `ε` of the colors `0..=d`, in canonical form: rotated
/// so that `ε_0 = 0` and reflected so that `ε_1 < ε_d`.
///
/// The ε-genus depends only on the set of cyclically adjacent color pairs, so
/// rotations and reflections of the same order give the same value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Necklace(Vec<u8>);

impl Necklace {
    /// Canonicalizes any cyclic order of `0..=d`.
    pub fn new(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &c in order {
            if c >= n || seen[c] {
                return Err(Error::InvalidNecklace(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
            seen[c] = true;
        }
        if n < 3 {
            return Err(Error::InvalidNecklace("need at least three colors".into()));
        }
        let start = order.iter().position(|&c| c == 0).unwrap();
        let mut rotated: Vec<u8> = (0..n).map(|i| order[(start + i) % n] as u8).collect();
        if rotated[1] > rotated[n - 1] {
            rotated[1..].reverse();
        }
        Ok(Necklace(rotated))
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&c| c as usize)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i % self.0.len()] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The dimension `d` (one less than the number of colors).
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// Cyclically adjacent pairs `(ε_i, ε_{i+1})`, indices mod `d + 1`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i] as usize, self.0[(i + 1) % n] as usize))
    }
}

impl TryFrom<Vec<usize>> for Necklace {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Necklace::new(&v)
    }
}

impl From<Necklace> for Vec<usize> {
    fn from(n: Necklace) -> Self {
        n.0.into_iter().map(usize::from).collect()
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(" "))
    }
}

/// Every necklace on `0..=d`, each once; there are `d!/2` of them.
pub fn necklaces(d: usize) -> Result<Vec<Necklace>> {
    if d < 3 {
        return Err(Error::DimensionTooLow { found: d, min: 3 });
    }
    let mut out: Vec<Necklace> = (1..=d as u8)
        .permutations(d)
        .filter(|p| p[0] < p[d - 1])
        .map(|p| {
            let mut v = Vec::with_capacity(d + 1);
            v.push(0);
            v.extend(p);
            Necklace(v)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Brute force: canonicalize every permutation of 0..=d and dedupe.
    fn brute(d: usize) -> BTreeSet<Necklace> {
        (0..=d)
            .permutations(d + 1)
            .map(|p| Necklace::new(&p).unwrap())
            .collect()
    }

    #[test]
    fn counts_match_enumeration() {
        assert_eq!(necklaces(3).unwrap().len(), 3);
        assert_eq!(necklaces(4).unwrap().len(), 12);
        for d in 3..=6 {
            let fast: BTreeSet<Necklace> = necklaces(d).unwrap().into_iter().collect();
            assert_eq!(fast, brute(d), "d = {d}");
        }
    }

    #[test]
    fn reflection_is_identified() {
        let a = Necklace::new(&[0, 2, 1, 3]).unwrap();
        let b = Necklace::new(&[0, 3, 1, 2]).unwrap();
        let c = Necklace::new(&[1, 3, 0, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "(0 2 1 3)");
    }

    #[test]
    fn invalid_orders() {
        assert!(Necklace::new(&[0, 1, 1, 3]).is_err());
        assert!(Necklace::new(&[0, 1]).is_err());
        assert!(matches!(necklaces(2), Err(Error::DimensionTooLow { .. })));
        let parsed: Necklace = serde_json::from_str("[2, 0, 1, 3]").unwrap();
        assert_eq!(parsed.to_string(), "(0 1 3 2)");
        assert_eq!(serde_json::to_string(&parsed).unwrap(), "[0,1,3,2]");
    }
}

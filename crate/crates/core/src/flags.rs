//! f-, h- and flag vectors, Euler characteristic, Γ_S and the exact
//! face-number identities for balanced manifolds.
//!
//! Flag numbers are indexed by color bitmasks over the complex's palette. The
//! number usually written `f^{ij}_{d-2}` is `f_{[d] \ {i,j}}` and is exposed as
//! [`FlagVectors::f_complement_pair`].

use serde::{Deserialize, Serialize};

use crate::color::ColorSet;
use crate::complex::ColoredComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagVectors {
    pub dimension: usize,
    /// `flag_f[mask]` is the number of faces with color set exactly `mask`.
    pub flag_f: Vec<u64>,
    pub flag_h: Vec<i64>,
    /// `(f_{-1}, f_0, ..., f_d)`.
    pub f: Vec<u64>,
    /// `(h_0, ..., h_{d+1})`.
    pub h: Vec<i64>,
    pub euler: i64,
}

/// `Γ_S = f_{pq} - f_p - f_q` for a color pair `S = {p, q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaValue {
    pub set: ColorSet,
    pub value: i64,
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl FlagVectors {
    /// Computes every flag number from the face index.
    pub fn compute(cx: &ColoredComplex) -> Self {
        let d = cx.d();
        let n = cx.palette();
        let mut flag_f = vec![0u64; 1 << n];
        flag_f[0] = 1;
        for k in 0..cx.rank() {
            for s in cx.faces(k) {
                flag_f[cx.colors_of(s).bits() as usize] += 1;
            }
        }
        // Möbius inversion over the subset lattice.
        let mut flag_h: Vec<i64> = flag_f.iter().map(|&x| x as i64).collect();
        for bit in 0..n {
            for mask in 0..flag_h.len() {
                if mask & (1 << bit) != 0 {
                    flag_h[mask] -= flag_h[mask ^ (1 << bit)];
                }
            }
        }
        let f = cx.f_vector();
        let h = (0..=d + 1)
            .map(|i| {
                (0..=i)
                    .map(|j| {
                        let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                        sign * (binomial((d + 1 - j) as u64, (i - j) as u64) * f[j]) as i64
                    })
                    .sum()
            })
            .collect();
        let euler = f[1..]
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        FlagVectors {
            dimension: d,
            flag_f,
            flag_h,
            f,
            h,
            euler,
        }
    }

    fn universe(&self) -> ColorSet {
        ColorSet::from_bits((self.flag_f.len() - 1) as u32)
    }

    fn check(&self, s: ColorSet) -> Result<usize> {
        if s.is_subset(self.universe()) {
            Ok(s.bits() as usize)
        } else {
            Err(Error::ColorOutOfRange {
                color: s.max().unwrap_or(0) as i64,
                max: self.flag_f.len().trailing_zeros() as usize - 1,
            })
        }
    }

    /// Flag f-number `f_S`.
    pub fn flag_f(&self, s: ColorSet) -> Result<u64> {
        Ok(self.flag_f[self.check(s)?])
    }

    /// Flag h-number `h_T`.
    pub fn flag_h(&self, t: ColorSet) -> Result<i64> {
        Ok(self.flag_h[self.check(t)?])
    }

    /// `f_{[d] \ {i,j}}`, the number of (d-2)-faces missing colors i and j.
    pub fn f_complement_pair(&self, i: usize, j: usize) -> u64 {
        let s = ColorSet::full(self.dimension).difference(ColorSet::pair(i, j));
        self.flag_f[s.bits() as usize]
    }

    /// `f_{{i,j}}`.
    pub fn f_pair(&self, i: usize, j: usize) -> u64 {
        self.flag_f[ColorSet::pair(i, j).bits() as usize]
    }

    pub fn f_single(&self, i: usize) -> u64 {
        self.flag_f[1 << i]
    }

    /// `f_i` for `-1 <= i <= d`.
    pub fn f_i(&self, i: isize) -> u64 {
        self.f[(i + 1) as usize]
    }

    pub fn gamma(&self, s: ColorSet) -> Result<GammaValue> {
        self.check(s)?;
        let (p, q) = s.as_pair()?;
        Ok(GammaValue {
            set: s,
            value: self.f_pair(p, q) as i64 - self.f_single(p) as i64 - self.f_single(q) as i64,
        })
    }

    /// Γ_S for every color pair, in lexicographic pair order.
    pub fn gammas(&self) -> Vec<GammaValue> {
        let d = self.dimension;
        let mut out = Vec::new();
        for p in 0..=d {
            for q in p + 1..=d {
                out.push(self.gamma(ColorSet::pair(p, q)).expect("valid pair"));
            }
        }
        out
    }

    /// `χ(S^d) = 1 + (-1)^d`.
    pub fn sphere_euler(&self) -> i64 {
        if self.dimension % 2 == 0 {
            2
        } else {
            0
        }
    }

    /// Dehn-Sommerville relation for triangulated 3- and 4-manifolds:
    /// `f_3 = f_1 - f_0` or `f_4 = 2 f_1 - 6 f_0 + 6 χ`.
    pub fn dehn_sommerville(&self) -> Result<bool> {
        let f = |i| self.f_i(i) as i64;
        match self.dimension {
            3 => Ok(f(3) == f(1) - f(0)),
            4 => Ok(f(4) == 2 * f(1) - 6 * f(0) + 6 * self.euler),
            d => Err(Error::UnsupportedDimension(format!(
                "Dehn-Sommerville check is implemented for d = 3, 4 (got {d})"
            ))),
        }
    }

    /// `h_{[d]-S} - h_S = (-1)^{|S|} (χ - χ(S^d))` for balanced semi-Eulerian complexes.
    pub fn swartz(&self, s: ColorSet) -> Result<bool> {
        let idx = self.check(s)?;
        let comp = ColorSet::full(self.dimension).difference(s).bits() as usize;
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        Ok(self.flag_h[comp] - self.flag_h[idx] == sign * (self.euler - self.sphere_euler()))
    }
}

pub fn flag_f(cx: &ColoredComplex, s: ColorSet) -> Result<u64> {
    FlagVectors::compute(cx).flag_f(s)
}

pub fn flag_h(cx: &ColoredComplex, t: ColorSet) -> Result<i64> {
    FlagVectors::compute(cx).flag_h(t)
}

pub fn f_vector(cx: &ColoredComplex) -> Vec<u64> {
    cx.f_vector()
}

pub fn h_vector(cx: &ColoredComplex) -> Vec<i64> {
    FlagVectors::compute(cx).h
}

pub fn euler(cx: &ColoredComplex) -> i64 {
    FlagVectors::compute(cx).euler
}

pub fn gamma(cx: &ColoredComplex, s: ColorSet) -> Result<GammaValue> {
    FlagVectors::compute(cx).gamma(s)
}

pub fn dehn_sommerville_check(cx: &ColoredComplex) -> Result<bool> {
    FlagVectors::compute(cx).dehn_sommerville()
}

pub fn swartz_check(cx: &ColoredComplex, s: ColorSet) -> Result<bool> {
    FlagVectors::compute(cx).swartz(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{connected_sum, octahedral_sphere, FacetHandle};

    fn set(s: &str) -> ColorSet {
        s.parse().unwrap()
    }

    #[test]
    fn octahedral_three_sphere() {
        let o3 = octahedral_sphere(3);
        let fv = FlagVectors::compute(&o3);
        assert_eq!(fv.flag_f(set("0,2")).unwrap(), 4);
        assert_eq!(fv.flag_f(ColorSet::EMPTY).unwrap(), 1);
        assert_eq!(fv.flag_h(ColorSet::EMPTY).unwrap(), 1);
        assert_eq!(fv.h, vec![1, 4, 6, 4, 1]);
        assert_eq!(fv.euler, 0);
        for g in fv.gammas() {
            assert_eq!(g.value, 0);
            assert_eq!(fv.flag_h(g.set).unwrap(), 1);
        }
        assert!(fv.dehn_sommerville().unwrap());
    }

    #[test]
    fn octahedral_four_sphere_identities() {
        let fv = FlagVectors::compute(&octahedral_sphere(4));
        assert_eq!(fv.f, vec![1, 10, 40, 80, 80, 32]);
        assert_eq!(fv.euler, 2);
        assert!(fv.dehn_sommerville().unwrap());
        for s in ColorSet::full(4).subsets() {
            assert!(fv.swartz(s).unwrap(), "S = {s}");
        }
        assert_eq!(fv.flag_h(set("1,3")).unwrap(), 1);
    }

    #[test]
    fn connected_sum_flags() {
        let o3 = octahedral_sphere(3);
        let s = connected_sum(&o3, FacetHandle(0), &o3, FacetHandle(0)).unwrap();
        let fv = FlagVectors::compute(&s);
        assert_eq!(fv.flag_f(set("0,2")).unwrap(), 7);
        assert!(fv.gammas().iter().all(|g| g.value == 1));
        let s3 = connected_sum(&s, FacetHandle(3), &o3, FacetHandle(9)).unwrap();
        let fv3 = FlagVectors::compute(&s3);
        assert!(fv3.gammas().iter().all(|g| g.value == 2));
    }

    #[test]
    fn errors() {
        let fv = FlagVectors::compute(&octahedral_sphere(3));
        assert!(matches!(fv.flag_f(set("0,4")), Err(Error::ColorOutOfRange { color: 4, max: 3 })));
        assert!(matches!(fv.gamma(set("0,1,2")), Err(Error::BadArity { .. })));
        let fv2 = FlagVectors::compute(&octahedral_sphere(2));
        assert!(matches!(fv2.dehn_sommerville(), Err(Error::UnsupportedDimension(_))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(30, 15), 155117520);
    }
}

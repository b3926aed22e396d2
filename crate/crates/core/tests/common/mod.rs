//! Brute-force reference computations that only look at labelled facets and
//! vertex colors. They share no code with the library.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use balanced_genus::ColoredComplex;

pub struct Plain {
    pub d: usize,
    pub facets: Vec<Vec<String>>,
    pub colors: HashMap<String, usize>,
}

impl Plain {
    pub fn from_complex(cx: &ColoredComplex) -> Self {
        let facets = cx.labelled_facets();
        let colors = cx
            .coloring()
            .into_iter()
            .map(|(l, c)| (l, c as usize))
            .collect();
        Plain {
            d: facets[0].len() - 1,
            facets,
            colors,
        }
    }

    fn mask(&self, labels: &[String]) -> u32 {
        labels.iter().map(|l| 1u32 << self.colors[l]).sum()
    }

    /// Number of faces with each exact color set, by subset enumeration.
    pub fn flag_f(&self) -> HashMap<u32, u64> {
        let mut seen: HashSet<Vec<String>> = HashSet::new();
        for f in &self.facets {
            for bits in 0u32..(1 << f.len()) {
                let mut face: Vec<String> = (0..f.len())
                    .filter(|i| bits & (1 << i) != 0)
                    .map(|i| f[i].clone())
                    .collect();
                face.sort();
                seen.insert(face);
            }
        }
        let mut counts = HashMap::new();
        for face in &seen {
            *counts.entry(self.mask(face)).or_insert(0) += 1;
        }
        counts
    }

    pub fn f_of(&self, flag: &HashMap<u32, u64>, colors: &[usize]) -> u64 {
        let m: u32 = colors.iter().map(|&c| 1u32 << c).sum();
        flag.get(&m).copied().unwrap_or(0)
    }

    /// `f_{[d] ∖ {i, j}}`.
    pub fn f_without(&self, flag: &HashMap<u32, u64>, i: usize, j: usize) -> u64 {
        let full = (1u32 << (self.d + 1)) - 1;
        flag.get(&(full & !(1 << i) & !(1 << j))).copied().unwrap_or(0)
    }

    /// `h_S = Σ_{T ⊆ S} (-1)^{|S∖T|} f_T`.
    pub fn flag_h(&self, flag: &HashMap<u32, u64>, s: u32) -> i64 {
        let mut total = 0i64;
        let mut t = s;
        loop {
            let sign = if (s & !t).count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * flag.get(&t).copied().unwrap_or(0) as i64;
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        total
    }

    /// `f_{-1}, f_0, ..., f_d`.
    pub fn f_vector(&self, flag: &HashMap<u32, u64>) -> Vec<u64> {
        let mut f = vec![0u64; self.d + 2];
        for (m, c) in flag {
            f[m.count_ones() as usize] += c;
        }
        f
    }

    pub fn euler(&self, flag: &HashMap<u32, u64>) -> i64 {
        self.f_vector(flag)
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Dual graph edges `(facet, facet, color)` from shared ridges.
    pub fn dual_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut ridges: HashMap<Vec<String>, Vec<(usize, usize)>> = HashMap::new();
        for (k, f) in self.facets.iter().enumerate() {
            for drop in 0..f.len() {
                let mut r: Vec<String> = f.clone();
                let gone = r.remove(drop);
                r.sort();
                ridges.entry(r).or_default().push((k, self.colors[&gone]));
            }
        }
        let mut edges = Vec::new();
        for (_, owners) in ridges {
            assert_eq!(owners.len(), 2, "ridge condition");
            assert_eq!(owners[0].1, owners[1].1);
            edges.push((owners[0].0, owners[1].0, owners[0].1));
        }
        edges
    }

    /// Components of the subgraph of `{i, j}`-colored dual edges.
    pub fn bicolored_cycles(&self, edges: &[(usize, usize, usize)], i: usize, j: usize) -> u64 {
        let n = self.facets.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n as u64;
        for &(a, b, c) in edges {
            if c == i || c == j {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    comps -= 1;
                }
            }
        }
        comps
    }
}

/// Cyclic orders of `0..=d` up to rotation and reflection, as sequences
/// starting with 0 whose second entry is smaller than the last.
pub fn necklace_orders(d: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            if prefix[1] < prefix[prefix.len() - 1] {
                out.push(prefix.clone());
            }
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                prefix.push(c);
                extend(prefix, used, out);
                prefix.pop();
                used[c] = false;
            }
        }
    }
    let mut used = vec![false; d + 1];
    used[0] = true;
    let mut out = Vec::new();
    extend(&mut vec![0], &mut used, &mut out);
    out
}

/// Twice the ε-genus from the Euler characteristic of the embedded surface.
pub fn twice_rho_embedding(p: &Plain, order: &[usize]) -> (i64, i64) {
    let edges = p.dual_edges();
    let v = p.facets.len() as i64;
    let e = edges.len() as i64;
    let f: i64 = (0..order.len())
        .map(|k| p.bicolored_cycles(&edges, order[k], order[(k + 1) % order.len()]) as i64)
        .sum();
    let chi = v - e + f;
    (2 - chi, chi)
}

/// Twice the ε-genus from flag numbers: `4ρ = 4 - (1-d) f_d - 2 Σ f_{[d]∖{ε_k, ε_{k+1}}}`.
pub fn twice_rho_flags(p: &Plain, flag: &HashMap<u32, u64>, order: &[usize]) -> i64 {
    let d = p.d as i64;
    let fd = p.facets.len() as i64;
    let sum: i64 = (0..order.len())
        .map(|k| p.f_without(flag, order[k], order[(k + 1) % order.len()]) as i64)
        .sum();
    let four = 4 - (1 - d) * fd - 2 * sum;
    assert_eq!(four % 2, 0);
    four / 2
}

/// Closed forms for 3- and 4-manifolds, times two.
pub fn twice_rho_closed(p: &Plain, flag: &HashMap<u32, u64>, order: &[usize]) -> Option<i64> {
    match p.d {
        3 => {
            let (a, b) = (order[0], order[2]);
            let v = 1 + p.f_of(flag, &[a, b]) as i64
                - p.f_of(flag, &[a]) as i64
                - p.f_of(flag, &[b]) as i64;
            Some(2 * v)
        }
        4 => {
            let f = p.f_vector(flag);
            let chi = p.euler(flag);
            let s: i64 = (0..5)
                .map(|k| p.f_of(flag, &[order[k], order[(k + 1) % 5]]) as i64)
                .sum();
            Some(2 * (1 + 2 * chi + f[2] as i64 - s - 2 * f[1] as i64))
        }
        _ => None,
    }
}

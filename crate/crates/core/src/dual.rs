//! The edge-colored dual graph of a balanced pseudomanifold and the face
//! counts of its regular embeddings.

use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::complex::{ColoredComplex, Simplex};
use crate::error::{Error, Result};
use crate::flags::FlagVectors;
use crate::graph::{two_colorable, UnionFind};
use crate::half::HalfInt;
use crate::necklace::Necklace;

/// Facets as nodes; two facets sharing a ridge are joined by an edge whose
/// color is the one color missing from the ridge. Every node has exactly one
/// edge of each color.
#[derive(Clone, Debug)]
pub struct DualGraph {
    d: usize,
    /// `adj[node][color]` is the neighbour across the ridge missing `color`.
    adj: Vec<Vec<u32>>,
    node_labels: Vec<Vec<String>>,
}

impl DualGraph {
    pub fn build(cx: &ColoredComplex) -> Result<Self> {
        let report = cx.validation();
        if !report.ridge_condition || !report.balanced || cx.rank() < 2 {
            return Err(Error::PreconditionFailed(format!(
                "dual graph needs a balanced complex whose ridges each lie in two facets ({})",
                report.failure_summary()
            )));
        }
        let d = cx.d();
        if cx.used_colors().len() != d + 1 {
            return Err(Error::PreconditionFailed(
                "dual graph needs every facet to carry all d+1 colors".into(),
            ));
        }
        let n = cx.facet_count();
        let mut adj = vec![vec![u32::MAX; d + 1]; n];
        let mut open: HashMap<Simplex, u32> = HashMap::with_capacity(n * (d + 1) / 2);
        for (i, f) in cx.facets().iter().enumerate() {
            for &v in f.vertices() {
                let c = cx.color(v);
                let ridge = Simplex::from_sorted(f.vertices().iter().copied().filter(|&w| w != v).collect());
                match open.remove(&ridge) {
                    Some(j) => {
                        adj[i][c] = j;
                        adj[j as usize][c] = i as u32;
                    }
                    None => {
                        open.insert(ridge, i as u32);
                    }
                }
            }
        }
        debug_assert!(open.is_empty());
        let node_labels = cx.facets().iter().map(|f| cx.simplex_labels(f)).collect();
        Ok(DualGraph { d, adj, node_labels })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() * (self.d + 1) / 2
    }

    pub fn neighbor(&self, node: usize, color: usize) -> usize {
        self.adj[node][color] as usize
    }

    pub fn node_label(&self, node: usize) -> &[String] {
        &self.node_labels[node]
    }

    /// Edges `(a, b, color)` with `a < b`, ordered by `a` then color.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(move |(_, &b)| (b as usize) > a)
                .map(move |(c, &b)| (a, b as usize, c))
        })
    }

    /// Bipartite iff the underlying complex is orientable.
    pub fn is_bipartite(&self) -> bool {
        two_colorable(self.node_count(), |v| self.adj[v].iter().map(|&w| w as usize))
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == j || i > self.d || j > self.d {
            return Err(Error::BadColors(format!(
                "need two distinct colors in 0..={}, got {i} and {j}",
                self.d
            )));
        }
        Ok(())
    }

    /// Component id of every node in the subgraph of colors `i` and `j`.
    pub fn bicolored_components(&self, i: usize, j: usize) -> Result<Vec<usize>> {
        self.check_pair(i, j)?;
        let mut uf = UnionFind::new(self.node_count());
        for v in 0..self.node_count() {
            uf.union(v, self.neighbor(v, i));
            uf.union(v, self.neighbor(v, j));
        }
        let mut ids = HashMap::new();
        Ok((0..self.node_count())
            .map(|v| {
                let r = uf.find(v);
                let n = ids.len();
                *ids.entry(r).or_insert(n)
            })
            .collect())
    }

    /// Number of {i,j}-bicolored cycles.
    pub fn bicolored_cycle_count(&self, i: usize, j: usize) -> Result<u64> {
        self.check_pair(i, j)?;
        let mut uf = UnionFind::new(self.node_count());
        for v in 0..self.node_count() {
            uf.union(v, self.neighbor(v, i));
            uf.union(v, self.neighbor(v, j));
        }
        Ok(uf.count() as u64)
    }

    /// Bicolored cycle counts for every color pair, keyed `(i, j)` with `i < j`.
    pub fn all_cycle_counts(&self) -> HashMap<(usize, usize), u64> {
        let mut out = HashMap::new();
        for i in 0..=self.d {
            for j in i + 1..=self.d {
                out.insert((i, j), self.bicolored_cycle_count(i, j).unwrap());
            }
        }
        out
    }

    /// Graphviz DOT text. Output depends only on the graph.
    pub fn to_dot(&self, options: &DotOptions) -> Result<String> {
        if let Some((i, j)) = options.pair {
            self.check_pair(i, j)?;
        }
        let mut out = String::new();
        writeln!(out, "graph dual {{").unwrap();
        writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
        for (v, labels) in self.node_labels.iter().enumerate() {
            writeln!(out, "  n{v} [label=\"{}\"];", escape(&labels.join(" "))).unwrap();
        }
        for (a, b, c) in self.edges() {
            if let Some((i, j)) = options.pair {
                if c != i && c != j {
                    continue;
                }
            }
            writeln!(
                out,
                "  n{a} -- n{b} [color=\"{}\", label=\"{c}\"];",
                PALETTE[c % PALETTE.len()]
            )
            .unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }
}

const PALETTE: [&str; 10] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray",
];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Emit only the edges of these two colors.
    pub pair: Option<(usize, usize)>,
}

pub fn dual_graph(cx: &ColoredComplex) -> Result<DualGraph> {
    DualGraph::build(cx)
}

pub fn export_dot(g: &DualGraph, options: &DotOptions) -> Result<String> {
    g.to_dot(options)
}

/// Cell counts of the regular embedding for one necklace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSummary {
    pub necklace: Necklace,
    /// `(ε_i, ε_{i+1}, C_{ε_i ε_{i+1}})` for each cyclically adjacent pair.
    pub pair_cycles: Vec<(usize, usize, u64)>,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    /// `V - E + F`.
    pub euler: i64,
    /// `Σ f^{ε_i ε_{i+1}}_{d-2} + (1 - d) f_d / 2`, from flag numbers alone.
    pub euler_from_flags: i64,
    pub orientable: bool,
    /// `1 - χ/2`: the genus of the surface if orientable, half of it otherwise.
    pub rho: HalfInt,
    /// Genus of the embedding surface (non-orientable genus when not orientable).
    pub surface_genus: i64,
}

impl EmbeddingSummary {
    pub fn compute(g: &DualGraph, flags: &FlagVectors, necklace: &Necklace) -> Result<Self> {
        let d = g.dimension();
        if necklace.dimension() != d {
            return Err(Error::DimensionMismatch(format!(
                "necklace {necklace} has {} colors, complex has {}",
                necklace.len(),
                d + 1
            )));
        }
        let mut pair_cycles = Vec::with_capacity(d + 1);
        let mut faces = 0;
        let mut flag_sum: i64 = 0;
        for (a, b) in necklace.pairs() {
            let c = g.bicolored_cycle_count(a, b)?;
            faces += c;
            flag_sum += flags.f_complement_pair(a, b) as i64;
            pair_cycles.push((a, b, c));
        }
        let v = g.node_count() as u64;
        let e = g.edge_count() as u64;
        let euler = v as i64 - e as i64 + faces as i64;
        let scaled = 2 * flag_sum + (1 - d as i64) * flags.f_i(d as isize) as i64;
        if scaled % 2 != 0 {
            return Err(Error::CrossCheckFailed(format!(
                "flag-number Euler characteristic {scaled}/2 is not an integer"
            )));
        }
        let orientable = g.is_bipartite();
        Ok(EmbeddingSummary {
            necklace: necklace.clone(),
            pair_cycles,
            vertices: v,
            edges: e,
            faces,
            euler,
            euler_from_flags: scaled / 2,
            orientable,
            rho: HalfInt::from_twice(2 - euler),
            surface_genus: if orientable { (2 - euler) / 2 } else { 2 - euler },
        })
    }

    /// The two Euler characteristic routes agree.
    pub fn consistent(&self) -> bool {
        self.euler == self.euler_from_flags
    }
}

/// Embedding summary for one necklace; needs `d >= 3`.
pub fn embedding_summary(cx: &ColoredComplex, necklace: &Necklace) -> Result<EmbeddingSummary> {
    if cx.dim() < 3 {
        return Err(Error::DimensionTooLow {
            found: cx.dim().max(0) as usize,
            min: 3,
        });
    }
    let g = DualGraph::build(cx)?;
    EmbeddingSummary::compute(&g, &FlagVectors::compute(cx), necklace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{connected_sum, octahedral_sphere, FacetHandle};
    use crate::necklace::necklaces;

    #[test]
    fn hypercube_dual() {
        let o3 = octahedral_sphere(3);
        let g = DualGraph::build(&o3).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (16, 32));
        assert_eq!(g.edges().count(), 32);
        assert!(g.is_bipartite());
        for v in 0..16 {
            for c in 0..4 {
                let w = g.neighbor(v, c);
                assert_ne!(w, v);
                assert_eq!(g.neighbor(w, c), v);
            }
        }
        for (i, j) in [(0, 1), (0, 3), (2, 3)] {
            assert_eq!(g.bicolored_cycle_count(i, j).unwrap(), 4);
        }
        assert!(matches!(g.bicolored_cycle_count(1, 1), Err(Error::BadColors(_))));
        assert!(matches!(g.bicolored_cycle_count(1, 4), Err(Error::BadColors(_))));
    }

    #[test]
    fn connected_sum_dual() {
        let o3 = octahedral_sphere(3);
        let s = connected_sum(&o3, FacetHandle(1), &o3, FacetHandle(2)).unwrap();
        let g = DualGraph::build(&s).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (30, 60));
        assert!(g.is_bipartite());
        assert_eq!(g.bicolored_cycle_count(0, 2).unwrap(), 7);
        let o4 = octahedral_sphere(4);
        assert_eq!(DualGraph::build(&o4).unwrap().bicolored_cycle_count(1, 3).unwrap(), 8);
    }

    #[test]
    fn embedding_euler_characteristics() {
        let o3 = octahedral_sphere(3);
        for n in necklaces(3).unwrap() {
            let e = embedding_summary(&o3, &n).unwrap();
            assert_eq!(e.euler, 0);
            assert!(e.consistent());
            assert_eq!(e.rho, HalfInt::from_int(1));
        }
        let o4 = octahedral_sphere(4);
        for n in necklaces(4).unwrap() {
            assert_eq!(embedding_summary(&o4, &n).unwrap().euler, -8);
        }
        let s = connected_sum(&o3, FacetHandle(0), &o3, FacetHandle(0)).unwrap();
        for n in necklaces(3).unwrap() {
            let e = embedding_summary(&s, &n).unwrap();
            assert_eq!(e.euler, -2);
            assert_eq!(e.surface_genus, 2);
        }
        let o2 = octahedral_sphere(2);
        let n = Necklace::new(&[0, 1, 2]).unwrap();
        assert!(matches!(embedding_summary(&o2, &n), Err(Error::DimensionTooLow { .. })));
    }

    #[test]
    fn dot_is_deterministic_and_filters_pairs() {
        let o3 = octahedral_sphere(3);
        let g = DualGraph::build(&o3).unwrap();
        let a = g.to_dot(&DotOptions::default()).unwrap();
        let b = DualGraph::build(&o3).unwrap().to_dot(&DotOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches(" -- ").count(), 32);
        assert_eq!(a.matches("[label=").count(), 16);
        let p = g.to_dot(&DotOptions { pair: Some((0, 1)) }).unwrap();
        assert_eq!(p.matches(" -- ").count(), 16);
        assert!(p.contains("color=\"red\"") && p.contains("color=\"blue\""));
        assert!(!p.contains("darkgreen"));
    }

    #[test]
    fn rejects_complexes_with_boundary() {
        let col = [("a", 0), ("b", 1), ("c", 2), ("d", 3), ("e", 3)]
            .iter()
            .map(|(l, c)| (l.to_string(), *c as i64))
            .collect();
        let cx = crate::complex::build_complex(&[vec!["a", "b", "c", "d"], vec!["a", "b", "c", "e"]], &col)
            .unwrap();
        assert!(matches!(DualGraph::build(&cx), Err(Error::PreconditionFailed(_))));
    }
}

//! Edge-path group presentations `G_T` and two-sided bounds on the rank of
//! the fundamental group.
//!
//! For a spanning tree `T` of the graph of `Δ`, `G_T` is generated by the
//! edges of `Δ` (oriented from the lower vertex id to the higher) subject to
//! `e = 1` for `e ∈ T` and `(a,b)(b,c) = (a,c)` for every triangle `abc`.
//! The lower bound is the minimal number of generators of the
//! abelianization; the upper bound counts generators that survive a sequence
//! of sound simplifications.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::color::ColorSet;
use crate::complex::{ColoredComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::snf::{AbelianGroup, RelationMatrix};

type Edge = (u32, u32);

fn edge_of(a: VertexId, b: VertexId) -> Edge {
    if a.0 < b.0 {
        (a.0, b.0)
    } else {
        (b.0, a.0)
    }
}

fn graph_edges(cx: &ColoredComplex) -> Vec<Edge> {
    if cx.rank() < 2 {
        return Vec::new();
    }
    cx.faces(1)
        .iter()
        .map(|e| edge_of(e.vertices()[0], e.vertices()[1]))
        .collect()
}

fn in_selection(cx: &ColoredComplex, s: Option<ColorSet>, (a, b): Edge) -> bool {
    s.is_some_and(|s| {
        s.contains(cx.color(VertexId(a))) && s.contains(cx.color(VertexId(b)))
    })
}

fn check_pair(cx: &ColoredComplex, s: Option<ColorSet>) -> Result<()> {
    if let Some(s) = s {
        s.as_pair()?;
        s.check_within(cx.palette().saturating_sub(1))?;
    }
    Ok(())
}

/// A spanning tree of the graph of `Δ`, rooted at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<Edge>,
    /// `Some(S)` when the tree restricted to `Δ_S` spans `Δ_S`.
    pub extends: Option<ColorSet>,
    parent: Vec<Option<u32>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    fn from_order(cx: &ColoredComplex, s: Option<ColorSet>, order: &[Edge]) -> Result<Self> {
        let n = cx.vertex_count();
        let mut uf = UnionFind::new(n);
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut selected_done = false;
        let mut extends = None;
        for (k, &e) in order.iter().enumerate() {
            let inside = in_selection(cx, s, e);
            if !inside && !selected_done {
                selected_done = true;
                extends = spans_selection(cx, s, &mut uf);
            }
            if uf.union(e.0 as usize, e.1 as usize) {
                edges.push(e);
            }
            if k + 1 == order.len() && !selected_done {
                extends = spans_selection(cx, s, &mut uf);
            }
        }
        if uf.count() != 1 {
            return Err(Error::Disconnected(format!(
                "graph has {} components",
                uf.count()
            )));
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = Some(v);
                    depth[w as usize] = depth[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(SpanningTree {
            edges,
            extends,
            parent,
            depth,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, a: VertexId, b: VertexId) -> bool {
        let (x, y) = edge_of(a, b);
        self.parent[x as usize] == Some(y) || self.parent[y as usize] == Some(x)
    }

    /// Tree edges as label pairs.
    pub fn labelled_edges(&self, cx: &ColoredComplex) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                (
                    cx.label(VertexId(a)).to_string(),
                    cx.label(VertexId(b)).to_string(),
                )
            })
            .collect()
    }

    /// Vertices of the unique cycle in `T ∪ {uv}`, starting at `u`, ending at `v`.
    pub fn fundamental_cycle(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let (mut a, mut b) = (u.0, v.0);
        let mut left = vec![a];
        let mut right = vec![b];
        while self.depth[a as usize] > self.depth[b as usize] {
            a = self.parent[a as usize].unwrap();
            left.push(a);
        }
        while self.depth[b as usize] > self.depth[a as usize] {
            b = self.parent[b as usize].unwrap();
            right.push(b);
        }
        while a != b {
            a = self.parent[a as usize].unwrap();
            b = self.parent[b as usize].unwrap();
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left.into_iter().map(VertexId).collect()
    }
}

fn spans_selection(
    cx: &ColoredComplex,
    s: Option<ColorSet>,
    uf: &mut UnionFind,
) -> Option<ColorSet> {
    let s = s?;
    let mut roots = cx
        .vertices()
        .filter(|&v| s.contains(cx.color(v)))
        .map(|v| uf.find(v.index()));
    let first = roots.next()?;
    roots.all(|r| r == first).then_some(s)
}

/// A BFS-ordered spanning tree; edges of `Δ_S` are taken first when `S` is
/// given, so the tree extends a spanning tree of `Δ_S` whenever `Δ_S` is
/// connected.
pub fn spanning_tree(cx: &ColoredComplex, s: Option<ColorSet>) -> Result<SpanningTree> {
    check_pair(cx, s)?;
    let (inside, outside): (Vec<Edge>, Vec<Edge>) = graph_edges(cx)
        .into_iter()
        .partition(|&e| in_selection(cx, s, e));
    let order: Vec<Edge> = inside.into_iter().chain(outside).collect();
    SpanningTree::from_order(cx, s, &order)
}

/// Like [`spanning_tree`], but edges are shuffled by a seeded generator
/// before Kruskal's algorithm.
pub fn random_spanning_tree(
    cx: &ColoredComplex,
    s: Option<ColorSet>,
    seed: u64,
) -> Result<SpanningTree> {
    check_pair(cx, s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut inside, mut outside): (Vec<Edge>, Vec<Edge>) = graph_edges(cx)
        .into_iter()
        .partition(|&e| in_selection(cx, s, e));
    inside.shuffle(&mut rng);
    outside.shuffle(&mut rng);
    let order: Vec<Edge> = inside.into_iter().chain(outside).collect();
    SpanningTree::from_order(cx, s, &order)
}

/// `G_T` with tree edges already deleted: each generator is a non-tree edge
/// and each relator is the word `(a,b)(b,c)(a,c)^{-1}` of a triangle.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<(VertexId, VertexId)>,
    /// Letters are `(generator, ±1)`.
    pub relators: Vec<Vec<(usize, i8)>>,
    /// Number of triangles, i.e. relations before tree edges are removed.
    pub triangle_count: usize,
}

impl Presentation {
    pub fn new(cx: &ColoredComplex, tree: &SpanningTree) -> Self {
        let mut index: HashMap<Edge, usize> = HashMap::new();
        let mut generators = Vec::new();
        for (a, b) in graph_edges(cx) {
            if !tree.contains(VertexId(a), VertexId(b)) {
                index.insert((a, b), generators.len());
                generators.push((VertexId(a), VertexId(b)));
            }
        }
        let triangles: &[_] = if cx.rank() >= 3 { cx.faces(2) } else { &[] };
        let relators = triangles
            .iter()
            .map(|t| {
                let [a, b, c] = [t.vertices()[0].0, t.vertices()[1].0, t.vertices()[2].0];
                [((a, b), 1i8), ((b, c), 1), ((a, c), -1)]
                    .into_iter()
                    .filter_map(|(e, s)| index.get(&e).map(|&g| (g, s)))
                    .collect()
            })
            .collect();
        Presentation {
            generators,
            relators,
            triangle_count: triangles.len(),
        }
    }

    pub fn generator_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let e = edge_of(a, b);
        self.generators
            .iter()
            .position(|&(x, y)| (x.0, y.0) == e)
    }

    pub fn abelianization(&self) -> AbelianGroup {
        let mut m = RelationMatrix::new(self.generators.len());
        for r in &self.relators {
            m.push(r.iter().map(|&(g, s)| (g, s as i64)));
        }
        m.abelian_group()
    }
}

/// Generator classes under deduced equalities `g_x = g_y^{±1}` and `g_x = 1`.
struct Classes {
    parent: Vec<usize>,
    sign: Vec<i8>,
    trivial: Vec<bool>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes {
            parent: (0..n).collect(),
            sign: vec![1; n],
            trivial: vec![false; n],
        }
    }

    /// `(r, s)` with `g_x = g_r^s`.
    fn find(&mut self, x: usize) -> (usize, i8) {
        if self.parent[x] == x {
            return (x, 1);
        }
        let (r, s) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.sign[x] *= s;
        (r, self.sign[x])
    }

    fn kill(&mut self, x: usize) -> bool {
        let (r, _) = self.find(x);
        !std::mem::replace(&mut self.trivial[r], true)
    }

    /// Records `g_x = g_y^t`.
    fn identify(&mut self, x: usize, y: usize, t: i8) -> bool {
        let (rx, sx) = self.find(x);
        let (ry, sy) = self.find(y);
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.sign[rx] = sx * sy * t;
        self.trivial[ry] |= self.trivial[rx];
        true
    }

    /// The relator over class representatives, trivial classes deleted.
    fn word(&mut self, relator: &[(usize, i8)]) -> Word {
        let mut out = Word::with_capacity(relator.len());
        for &(g, s) in relator {
            let (r, t) = self.find(g);
            if !self.trivial[r] {
                out.push((r, s * t));
            }
        }
        reduce(out)
    }

    fn surviving(&mut self, gens: impl Iterator<Item = usize>) -> usize {
        let mut roots = HashSet::new();
        for g in gens {
            let (r, _) = self.find(g);
            if !self.trivial[r] {
                roots.insert(r);
            }
        }
        roots.len()
    }
}

type Word = Vec<(usize, i8)>;

/// Longest word substituted for an eliminated generator.
const MAX_SUBSTITUTION: usize = 16;

fn reduce(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for letter in word {
        if out.last().is_some_and(|&(g, s)| g == letter.0 && s == -letter.1) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    let (mut lo, mut hi) = (0, out.len());
    while hi - lo >= 2 && out[lo].0 == out[hi - 1].0 && out[lo].1 == -out[hi - 1].1 {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

fn inverse(word: &[(usize, i8)]) -> Word {
    word.iter().rev().map(|&(g, s)| (g, -s)).collect()
}

/// Tietze elimination: while some relator of length at most `max_len + 1`
/// contains a generator exactly once, solve for that generator, substitute it
/// everywhere and drop the relator. Returns the number of generators removed.
fn tietze_eliminate(mut relators: Vec<Word>, max_len: usize) -> usize {
    let mut removed = 0;
    loop {
        relators.sort_by_key(Vec::len);
        let pick = relators.iter().enumerate().find_map(|(i, r)| {
            if r.len() > max_len + 1 {
                return None;
            }
            (0..r.len())
                .find(|&k| r.iter().filter(|l| l.0 == r[k].0).count() == 1)
                .map(|k| (i, k))
        });
        let Some((i, k)) = pick else { break };
        let r = relators.swap_remove(i);
        let (g, s) = r[k];
        let rest: Word = r[k + 1..].iter().chain(&r[..k]).copied().collect();
        // g^s · rest = 1
        let value = if s == 1 { inverse(&rest) } else { rest };
        let value_inv = inverse(&value);
        relators = relators
            .into_iter()
            .map(|w| {
                let expanded: Word = w
                    .into_iter()
                    .flat_map(|l| match l {
                        (x, 1) if x == g => value.clone(),
                        (x, _) if x == g => value_inv.clone(),
                        other => vec![other],
                    })
                    .collect();
                reduce(expanded)
            })
            .filter(|w| !w.is_empty())
            .collect();
        removed += 1;
    }
    removed
}

/// Bounds `lower ≤ m(Δ) ≤ upper` on the minimal number of generators of `π_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBounds {
    pub lower: usize,
    pub upper: usize,
    pub set: Option<ColorSet>,
    pub tree_extends_selection: bool,
    pub generators: usize,
    pub relations: usize,
    /// Generators whose fundamental cycle lies in the closed star of a vertex.
    pub trivialized_by_links: usize,
    /// Generators left after identifying equal generators and Tietze
    /// elimination.
    pub surviving: usize,
    /// Surviving classes among edges of `Δ_S`, when `Δ_S` generates.
    pub pair_bound: Option<usize>,
    /// A vertex whose link contains `Δ_S`, which forces `m = 0`.
    pub link_witness: Option<String>,
    pub homology: AbelianGroup,
}

/// Closed-star membership test for cycles of the graph.
struct StarOracle {
    triangles: HashSet<[u32; 3]>,
    adjacency: Vec<Vec<u32>>,
}

impl StarOracle {
    fn new(cx: &ColoredComplex) -> Self {
        let mut adjacency = vec![Vec::new(); cx.vertex_count()];
        for (a, b) in graph_edges(cx) {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        let triangles = if cx.rank() >= 3 {
            cx.faces(2)
                .iter()
                .map(|t| [t.vertices()[0].0, t.vertices()[1].0, t.vertices()[2].0])
                .collect()
        } else {
            HashSet::new()
        };
        StarOracle {
            triangles,
            adjacency,
        }
    }

    fn edge_in_star(&self, w: u32, a: u32, b: u32) -> bool {
        if w == a || w == b {
            return true;
        }
        let mut t = [w, a, b];
        t.sort_unstable();
        self.triangles.contains(&t)
    }

    /// A vertex whose closed star contains the closed edge path through `cycle`.
    fn cone_point(&self, cycle: &[VertexId]) -> Option<u32> {
        let first = cycle[0].0;
        std::iter::once(first)
            .chain(self.adjacency[first as usize].iter().copied())
            .find(|&w| {
                (0..cycle.len()).all(|i| {
                    let a = cycle[i].0;
                    let b = cycle[(i + 1) % cycle.len()].0;
                    self.edge_in_star(w, a, b)
                })
            })
    }
}

/// Computes rank bounds for `π_1(Δ)` using the tree from [`spanning_tree`].
pub fn rank_bounds(cx: &ColoredComplex, s: Option<ColorSet>) -> Result<RankBounds> {
    let tree = spanning_tree(cx, s)?;
    rank_bounds_with_tree(cx, s, &tree)
}

/// Computes rank bounds for `π_1(Δ)` relative to a given spanning tree.
///
/// The pair bound and the link witness rely on `Δ` being a balanced normal
/// pseudomanifold and are skipped otherwise.
pub fn rank_bounds_with_tree(
    cx: &ColoredComplex,
    s: Option<ColorSet>,
    tree: &SpanningTree,
) -> Result<RankBounds> {
    check_pair(cx, s)?;
    let pres = Presentation::new(cx, tree);
    let homology = pres.abelianization();
    let lower = homology.min_generators();

    let oracle = StarOracle::new(cx);
    let mut classes = Classes::new(pres.generators.len());
    let mut trivialized_by_links = 0;
    for (g, &(u, v)) in pres.generators.iter().enumerate() {
        let cycle = tree.fundamental_cycle(u, v);
        if oracle.cone_point(&cycle).is_some() {
            classes.kill(g);
            trivialized_by_links += 1;
        }
    }
    loop {
        let mut changed = false;
        for r in &pres.relators {
            let w = classes.word(r);
            match w.as_slice() {
                [(y, _)] => changed |= classes.kill(*y),
                [(y, s1), (z, s2)] if y != z => changed |= classes.identify(*y, *z, -s1 * s2),
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let live = classes.surviving(0..pres.generators.len());
    let residual: Vec<Word> = pres
        .relators
        .iter()
        .map(|r| classes.word(r))
        .filter(|w| !w.is_empty())
        .collect();
    let surviving = live - tietze_eliminate(residual, MAX_SUBSTITUTION);

    let structured = s.is_some() && cx.validation().is_balanced_normal_pseudomanifold();
    let pair_bound = match s {
        Some(_) if structured && tree.extends.is_some() => {
            let inside: Vec<usize> = (0..pres.generators.len())
                .filter(|&g| {
                    let (a, b) = pres.generators[g];
                    in_selection(cx, s, (a.0, b.0))
                })
                .collect();
            Some(classes.surviving(inside.into_iter()))
        }
        _ => None,
    };
    let link_witness = match s {
        Some(s) if structured => selection_in_link(cx, s, &oracle),
        _ => None,
    };
    let mut upper = surviving.min(pair_bound.unwrap_or(usize::MAX));
    if link_witness.is_some() {
        upper = 0;
    }
    if lower > upper {
        return Err(Error::CrossCheckFailed(format!(
            "rank lower bound {lower} exceeds upper bound {upper}"
        )));
    }
    Ok(RankBounds {
        lower,
        upper,
        set: s,
        tree_extends_selection: tree.extends.is_some(),
        generators: pres.generators.len(),
        relations: pres.triangle_count,
        trivialized_by_links,
        surviving,
        pair_bound,
        link_witness,
        homology,
    })
}

fn selection_in_link(cx: &ColoredComplex, s: ColorSet, oracle: &StarOracle) -> Option<String> {
    let selected: Vec<Edge> = graph_edges(cx)
        .into_iter()
        .filter(|&e| in_selection(cx, Some(s), e))
        .collect();
    let vertices: Vec<u32> = cx
        .vertices()
        .filter(|&v| s.contains(cx.color(v)))
        .map(|v| v.0)
        .collect();
    cx.vertices()
        .filter(|&u| !s.contains(cx.color(u)))
        .find(|&u| {
            vertices
                .iter()
                .all(|x| oracle.adjacency[u.index()].contains(x))
                && selected.iter().all(|&(a, b)| oracle.edge_in_star(u.0, a, b))
        })
        .map(|u| cx.label(u).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::constructors::{connected_sum, octahedral_sphere, FacetHandle};

    fn hexagon() -> ColoredComplex {
        let labels = ["v0", "v1", "v2", "v3", "v4", "v5"];
        let facets: Vec<Vec<&str>> = (0..6).map(|i| vec![labels[i], labels[(i + 1) % 6]]).collect();
        let coloring = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.to_string(), (i % 2) as i64))
            .collect();
        build_complex(&facets, &coloring).unwrap()
    }

    #[test]
    fn hexagon_has_rank_one() {
        let b = rank_bounds(&hexagon(), None).unwrap();
        assert_eq!((b.lower, b.upper), (1, 1));
        assert_eq!(b.generators, 1);
        assert_eq!(b.relations, 0);
        assert_eq!(b.homology.free_rank, 1);
    }

    #[test]
    fn octahedral_three_sphere_presentation() {
        let o3 = octahedral_sphere(3);
        let tree = spanning_tree(&o3, None).unwrap();
        assert_eq!(tree.edge_count(), 7);
        let pres = Presentation::new(&o3, &tree);
        assert_eq!(pres.generators.len(), 17);
        assert_eq!(pres.triangle_count, 32);
        let b = rank_bounds(&o3, None).unwrap();
        assert_eq!((b.lower, b.upper), (0, 0));
    }

    #[test]
    fn filled_triangle_is_simply_connected() {
        let coloring = [("x", 0), ("y", 1), ("z", 2)]
            .iter()
            .map(|(l, c)| (l.to_string(), *c))
            .collect();
        let cx = build_complex(&[vec!["x", "y", "z"]], &coloring).unwrap();
        let b = rank_bounds(&cx, None).unwrap();
        assert_eq!((b.generators, b.lower, b.upper), (1, 0, 0));
    }

    #[test]
    fn tree_extends_selection() {
        let o3 = octahedral_sphere(3);
        let s = ColorSet::pair(0, 2);
        let tree = spanning_tree(&o3, Some(s)).unwrap();
        assert_eq!(tree.extends, Some(s));
        let inside = tree
            .labelled_edges(&o3)
            .iter()
            .filter(|(a, b)| {
                let ca = o3.color(o3.vertex(a).unwrap());
                let cb = o3.color(o3.vertex(b).unwrap());
                s.contains(ca) && s.contains(cb)
            })
            .count();
        assert_eq!(inside, 3);
        let b = rank_bounds(&o3, Some(s)).unwrap();
        assert_eq!(b.pair_bound, Some(0));
        assert_eq!(b.link_witness.as_deref(), Some("a1"));
    }

    #[test]
    fn fundamental_cycle_closes() {
        let o3 = octahedral_sphere(3);
        let tree = spanning_tree(&o3, None).unwrap();
        let pres = Presentation::new(&o3, &tree);
        for &(u, v) in &pres.generators {
            let c = tree.fundamental_cycle(u, v);
            assert_eq!(c[0], u);
            assert_eq!(*c.last().unwrap(), v);
            for w in c.windows(2) {
                assert!(tree.contains(w[0], w[1]));
            }
        }
    }

    #[test]
    fn sum_is_simply_connected_for_every_tree() {
        let o3 = octahedral_sphere(3);
        let sum = connected_sum(&o3, FacetHandle(0), &o3, FacetHandle(5)).unwrap();
        let s = ColorSet::pair(1, 3);
        let b = rank_bounds(&sum, Some(s)).unwrap();
        assert!(b.trivialized_by_links >= 2);
        assert_eq!(b.upper, 0);
        for seed in 0..5 {
            let t = random_spanning_tree(&sum, Some(s), seed).unwrap();
            let b = rank_bounds_with_tree(&sum, Some(s), &t).unwrap();
            assert_eq!((b.lower, b.upper), (0, 0));
        }
    }

    #[test]
    fn tietze_elimination() {
        // <a, b, c | abc, aba⁻¹b⁻¹>: c is solved for, the commutator stays
        let rels = vec![vec![(0, 1), (1, 1), (2, 1)], vec![(0, 1), (1, 1), (0, -1), (1, -1)]];
        assert_eq!(tietze_eliminate(rels, MAX_SUBSTITUTION), 1);
        // <a | a²> cannot lose its generator
        assert_eq!(tietze_eliminate(vec![vec![(0, 1), (0, 1)]], MAX_SUBSTITUTION), 0);
        // <a, b | ab⁻¹, b> collapses completely
        let rels = vec![vec![(0, 1), (1, -1)], vec![(1, 1)]];
        assert_eq!(tietze_eliminate(rels, MAX_SUBSTITUTION), 2);
        assert_eq!(reduce(vec![(0, 1), (1, 1), (1, -1), (2, 1), (0, -1)]), vec![(2, 1)]);
    }

    #[test]
    fn rejects_disconnected_and_bad_sets() {
        let o1 = octahedral_sphere(1);
        assert!(matches!(
            rank_bounds(&o1, Some(ColorSet::singleton(0))),
            Err(Error::BadArity { .. })
        ));
        let coloring = [("p", 0), ("q", 1), ("r", 0), ("s", 1)]
            .iter()
            .map(|(l, c)| (l.to_string(), *c))
            .collect();
        let two = build_complex(&[vec!["p", "q"], vec!["r", "s"]], &coloring).unwrap();
        assert!(matches!(rank_bounds(&two, None), Err(Error::Disconnected(_))));
    }
}

//! Small graph utilities shared by the rank-selected and dual-graph code.

use std::collections::VecDeque;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.sets
    }
}

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for (a, b) in self.edges() {
            uf.union(a, b);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.component_count() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        two_colorable(self.vertex_count(), |v| self.adj[v].iter().copied())
    }

    /// True iff the graph is a single cycle (connected, 2-regular, at least 3 vertices).
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    /// Cycles through exactly one vertex of degree greater than two whose other
    /// vertices all have degree two. Each witness starts at the high-degree vertex.
    ///
    /// Runs in linear time: the degree-2 vertices split into chains, and a chain
    /// yields a witness exactly when both of its ends attach to the same
    /// high-degree vertex.
    pub fn almost_induced_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let low = |v: usize| self.degree(v) == 2;
        let mut seen = vec![false; n];
        let mut witnesses = Vec::new();
        for start in 0..n {
            if seen[start] || !low(start) {
                continue;
            }
            // Walk to one end of the chain, then collect it in order.
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = self.adj[cur].iter().copied().find(|&x| x != prev);
                match next {
                    Some(x) if low(x) && x != start => {
                        prev = cur;
                        cur = x;
                    }
                    _ => break,
                }
            }
            let end_a = cur;
            let mut chain = vec![end_a];
            seen[end_a] = true;
            let mut prev = usize::MAX;
            let mut cur = end_a;
            let mut closed = false;
            loop {
                let step = self.adj[cur]
                    .iter()
                    .copied()
                    .find(|&x| x != prev && low(x) && !seen[x]);
                match step {
                    Some(x) => {
                        seen[x] = true;
                        chain.push(x);
                        prev = cur;
                        cur = x;
                    }
                    None => {
                        if chain.len() > 2 && self.adj[cur].contains(&end_a) {
                            closed = true;
                        }
                        break;
                    }
                }
            }
            if closed {
                // A cycle made only of degree-2 vertices: no high vertex.
                continue;
            }
            let attach = |v: usize, inner: &[usize]| -> Vec<usize> {
                self.adj[v]
                    .iter()
                    .copied()
                    .filter(|x| !low(*x) && !inner.contains(x))
                    .collect()
            };
            let first = chain[0];
            let last = *chain.last().unwrap();
            let ends_a = attach(first, &chain);
            let ends_b = attach(last, &chain);
            if chain.len() == 1 {
                // A lone degree-2 vertex with both neighbours high: needs a double edge.
                continue;
            }
            for &c in &ends_a {
                if ends_b.contains(&c) && self.degree(c) > 2 {
                    let mut cycle = Vec::with_capacity(chain.len() + 1);
                    cycle.push(c);
                    cycle.extend_from_slice(&chain);
                    witnesses.push(cycle);
                    break;
                }
            }
        }
        witnesses.sort();
        witnesses
    }
}

/// BFS 2-coloring over an adjacency oracle; handles disconnected graphs.
pub fn two_colorable<I, F>(n: usize, neighbors: F) -> bool
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut side = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

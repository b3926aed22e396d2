//! Rank-selected subcomplexes `Δ_S` and structural checks on the graphs `Δ_{pq}`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::color::ColorSet;
use crate::complex::{ColoredComplex, Simplex};
use crate::error::{Error, Result};
use crate::flags::FlagVectors;
use crate::graph::{SimpleGraph, UnionFind};

/// `Δ_S`: the faces of `Δ` whose colors lie in `S`.
#[derive(Clone, Debug)]
pub struct RankSelected {
    pub colors: ColorSet,
    pub complex: ColoredComplex,
}

impl RankSelected {
    /// The 1-skeleton of `Δ_S` as a graph on its vertices.
    pub fn graph(&self) -> SimpleGraph {
        let cx = &self.complex;
        let edges: Vec<(usize, usize)> = if cx.rank() >= 2 {
            cx.faces(1)
                .iter()
                .map(|e| (e.vertices()[0].index(), e.vertices()[1].index()))
                .collect()
        } else {
            Vec::new()
        };
        SimpleGraph::from_edges(cx.vertex_count(), edges)
    }
}

/// Restricts `Δ` to the color set `S`.
pub fn restrict(cx: &ColoredComplex, s: ColorSet) -> Result<RankSelected> {
    s.check_within(cx.palette().saturating_sub(1))?;
    let facets: Vec<Simplex> = cx.facets().iter().map(|f| cx.restrict(f, s)).collect();
    Ok(RankSelected {
        colors: s,
        complex: cx.subcomplex(facets),
    })
}

fn require_pair(s: ColorSet) -> Result<()> {
    if s.len() == 2 {
        Ok(())
    } else {
        Err(Error::BadArity {
            expected: 2,
            found: s.len(),
        })
    }
}

/// True iff any two top faces of `Δ_S` are joined by a chain of top faces
/// whose consecutive members meet in a codimension-one face.
pub fn strongly_connected(cx: &ColoredComplex, s: ColorSet) -> Result<bool> {
    if s.len() < 2 {
        return Err(Error::BadArity {
            expected: 2,
            found: s.len(),
        });
    }
    let sub = restrict(cx, s)?.complex;
    let tops = sub.facets();
    let r = sub.rank();
    let mut by_ridge: HashMap<Simplex, usize> = HashMap::new();
    let mut uf = UnionFind::new(tops.len());
    for (i, f) in tops.iter().enumerate() {
        for ridge in f.faces_of_size(r.saturating_sub(1)) {
            match by_ridge.get(&ridge) {
                Some(&j) => {
                    uf.union(i, j);
                }
                None => {
                    by_ridge.insert(ridge, i);
                }
            }
        }
    }
    Ok(uf.count() <= 1)
}

/// Cycles of `Δ_S` (|S| = 2) with exactly one vertex of degree greater than
/// two, as label lists starting at that vertex.
pub fn almost_induced_scan(cx: &ColoredComplex, s: ColorSet) -> Result<Vec<Vec<String>>> {
    require_pair(s)?;
    let sel = restrict(cx, s)?;
    let g = sel.graph();
    Ok(g.almost_induced_cycles()
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|v| sel.complex.labels()[v].clone())
                .collect()
        })
        .collect())
}

/// Connected, two vertices of degree three, all others of degree two: a cycle
/// with one extra path between two of its vertices.
pub fn is_theta_shape(g: &SimpleGraph) -> bool {
    let degrees = g.degrees();
    degrees.iter().filter(|&&x| x == 3).count() == 2
        && degrees.iter().all(|&x| x == 2 || x == 3)
        && g.is_connected()
}

/// Certificate that `Δ = Δ_{[d]∖S} ⋆ Δ_S` with `Δ_S` a cycle.
#[derive(Clone, Debug)]
pub struct JoinCertificate {
    pub complement: ColoredComplex,
    pub cycle: ColoredComplex,
}

/// For `Γ_S = 0`, checks that `Δ_S` is a cycle equal to the link of every
/// (d-2)-face colored `[d]∖S`, and that the facets of `Δ` are exactly the
/// joins of those faces with the edges of `Δ_S`. Returns `None` if any check
/// fails.
pub fn join_decomposition(cx: &ColoredComplex, s: ColorSet) -> Result<Option<JoinCertificate>> {
    require_pair(s)?;
    let d = cx.d();
    s.check_within(d)?;
    let gamma = FlagVectors::compute(cx).gamma(s)?;
    if gamma.value != 0 {
        return Err(Error::PreconditionFailed(format!(
            "join decomposition needs Γ_S = 0, got Γ_{} = {}",
            s, gamma.value
        )));
    }
    let cycle = restrict(cx, s)?;
    if !cycle.graph().is_cycle() {
        return Ok(None);
    }
    let cycle_edges = cycle.complex.labelled_facets();
    let complement = restrict(cx, ColorSet::full(d).difference(s))?;
    for sigma in complement.complex.facets() {
        let labels = complement.complex.simplex_labels(sigma);
        let lk = cx.link(&cx.simplex(&labels)?)?;
        if lk.labelled_facets() != cycle_edges {
            return Ok(None);
        }
    }
    let mut joined: BTreeSet<Vec<String>> = BTreeSet::new();
    for a in complement.complex.labelled_facets() {
        for b in &cycle_edges {
            let mut f: Vec<String> = a.iter().chain(b).cloned().collect();
            f.sort();
            joined.insert(f);
        }
    }
    let actual: BTreeSet<Vec<String>> = cx.labelled_facets().into_iter().collect();
    if joined != actual {
        return Ok(None);
    }
    Ok(Some(JoinCertificate {
        complement: complement.complex,
        cycle: cycle.complex,
    }))
}

/// Everything the `structure` command prints for one color pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStructure {
    pub set: ColorSet,
    pub gamma: i64,
    pub vertices: usize,
    pub edges: usize,
    /// Degrees in decreasing order.
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub strongly_connected: bool,
    pub almost_induced_cycles: Vec<Vec<String>>,
    pub theta_shape: bool,
    /// `Some(true)` when `Γ_S = 0` and the join decomposition certifies.
    pub join_certified: Option<bool>,
}

pub fn pair_structure(cx: &ColoredComplex, s: ColorSet) -> Result<PairStructure> {
    require_pair(s)?;
    let sel = restrict(cx, s)?;
    let g = sel.graph();
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    let gamma = FlagVectors::compute(cx).gamma(s)?.value;
    let join_certified = if gamma == 0 {
        Some(join_decomposition(cx, s)?.is_some())
    } else {
        None
    };
    Ok(PairStructure {
        set: s,
        gamma,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        min_degree: degree_sequence.last().copied().unwrap_or(0),
        degree_sequence,
        strongly_connected: strongly_connected(cx, s)?,
        almost_induced_cycles: almost_induced_scan(cx, s)?,
        theta_shape: is_theta_shape(&g),
        join_certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::constructors::{connected_sum, octahedral_sphere, FacetHandle};

    fn set(s: &str) -> ColorSet {
        s.parse().unwrap()
    }

    fn o3_sum() -> ColoredComplex {
        let o3 = octahedral_sphere(3);
        connected_sum(&o3, FacetHandle(0), &o3, FacetHandle(11)).unwrap()
    }

    #[test]
    fn restrict_octahedral() {
        let o3 = octahedral_sphere(3);
        let sel = restrict(&o3, set("0,1")).unwrap();
        let g = sel.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!(g.is_cycle());
        let all = restrict(&o3, ColorSet::full(3)).unwrap();
        assert_eq!(all.complex.labelled_facets(), o3.labelled_facets());
        assert!(matches!(restrict(&o3, set("0,5")), Err(Error::ColorOutOfRange { .. })));
    }

    #[test]
    fn connected_sum_pair_graph_is_theta() {
        let s = o3_sum();
        for p in 0..4 {
            for q in p + 1..4 {
                let g = restrict(&s, ColorSet::pair(p, q)).unwrap().graph();
                let mut deg = g.degrees();
                deg.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(&deg[..3], &[3, 3, 2]);
                assert!(is_theta_shape(&g));
                let handshake: usize = g.degrees().iter().sum();
                assert_eq!(handshake, 2 * g.edge_count());
            }
        }
    }

    #[test]
    fn strong_connectivity() {
        assert!(strongly_connected(&octahedral_sphere(3), set("0,1")).unwrap());
        assert!(strongly_connected(&o3_sum(), set("1,3")).unwrap());
        assert!(strongly_connected(&octahedral_sphere(4), set("0,2,4")).unwrap());
        let col = [("a", 0), ("b", 1), ("c", 2), ("d", 0), ("e", 1)]
            .iter()
            .map(|(l, c)| (l.to_string(), *c as i64))
            .collect();
        let bowtie = build_complex(&[vec!["a", "b", "c"], vec!["d", "e", "c"]], &col).unwrap();
        assert!(!strongly_connected(&bowtie, set("0,1")).unwrap());
        assert!(matches!(
            strongly_connected(&bowtie, set("1")),
            Err(Error::BadArity { .. })
        ));
    }

    #[test]
    fn no_almost_induced_cycles_on_spheres() {
        assert!(almost_induced_scan(&octahedral_sphere(3), set("0,1")).unwrap().is_empty());
        let s = o3_sum();
        for g in FlagVectors::compute(&s).gammas() {
            assert!(almost_induced_scan(&s, g.set).unwrap().is_empty());
        }
    }

    #[test]
    fn join_decompositions() {
        let o3 = octahedral_sphere(3);
        let cert = join_decomposition(&o3, set("2,3")).unwrap().unwrap();
        assert_eq!(cert.complement.dim(), 1);
        assert_eq!(cert.complement.facet_count(), 4);
        assert!(cert.cycle.labelled_facets().len() == 4);
        let o4 = octahedral_sphere(4);
        let cert4 = join_decomposition(&o4, set("3,4")).unwrap().unwrap();
        assert_eq!(cert4.complement.dim(), 2);
        assert_eq!(cert4.complement.facet_count(), 8);
        assert!(matches!(
            join_decomposition(&o3_sum(), set("0,1")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn pair_structure_summary() {
        let p = pair_structure(&o3_sum(), set("0,2")).unwrap();
        assert_eq!(p.gamma, 1);
        assert!(p.theta_shape);
        assert_eq!(p.join_certified, None);
        assert_eq!(p.edges, 7);
        let q = pair_structure(&octahedral_sphere(3), set("0,2")).unwrap();
        assert_eq!(q.join_certified, Some(true));
        assert_eq!(q.degree_sequence, vec![2, 2, 2, 2]);
    }
}

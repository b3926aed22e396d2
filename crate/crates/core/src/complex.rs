//! Colored simplicial complexes: storage, face index, links and stars.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::color::{ColorSet, MAX_DIM};
use crate::error::{Error, Result};
use crate::validate::ValidationReport;

/// Dense vertex index. Indices are contiguous `0..f_0` within a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A simplex as a strictly increasing list of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the vertices; returns `None` if a vertex repeats.
    pub fn new(mut vertices: Vec<VertexId>) -> Option<Self> {
        vertices.sort_unstable();
        let len = vertices.len();
        vertices.dedup();
        (vertices.len() == len).then_some(Simplex(vertices))
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `-1` for the empty simplex.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// Vertices of `self` not in `other`.
    pub fn minus(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn join(&self, other: &Simplex) -> Option<Simplex> {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// All faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.0.iter().copied().combinations(k).map(Simplex)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|v| v.0)).finish()
    }
}

/// A pure simplicial complex whose vertices carry colors such that every
/// facet is rainbow (no color twice). Immutable once built.
///
/// `palette` is the number of available colors. For complexes read from input
/// it is `d + 1`; links and rank-selected pieces keep their parent's palette
/// and colors.
#[derive(Clone)]
pub struct ColoredComplex {
    labels: Vec<String>,
    colors: Vec<u8>,
    palette: usize,
    rank: usize,
    facets: Vec<Simplex>,
    label_index: HashMap<String, VertexId>,
    incidence: Vec<Vec<u32>>,
    faces: Vec<OnceLock<Vec<Simplex>>>,
    validation: OnceLock<ValidationReport>,
}

impl fmt::Debug for ColoredComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredComplex")
            .field("dim", &self.dim())
            .field("vertices", &self.labels.len())
            .field("facets", &self.facets.len())
            .finish()
    }
}

/// Builds a complex from labelled facets and a label-to-color map.
///
/// The dimension is inferred from the facet size and colors must lie in `0..=d`.
pub fn build_complex<L: AsRef<str>>(
    facet_list: &[Vec<L>],
    coloring: &HashMap<String, i64>,
) -> Result<ColoredComplex> {
    let first = facet_list.first().ok_or(Error::EmptyComplex)?;
    let rank = first.len();
    if rank == 0 {
        return Err(Error::EmptyComplex);
    }
    let d = rank - 1;
    if d > MAX_DIM {
        return Err(Error::DimensionTooLarge(d));
    }
    for (i, f) in facet_list.iter().enumerate() {
        if f.len() != rank {
            return Err(Error::NonPure {
                facet: i,
                expected: rank,
                found: f.len(),
            });
        }
    }

    let mut labels: Vec<String> = Vec::new();
    let mut colors: Vec<u8> = Vec::new();
    let mut index: HashMap<String, VertexId> = HashMap::new();
    let mut facets = Vec::with_capacity(facet_list.len());
    let mut seen: HashMap<Simplex, usize> = HashMap::new();
    for (i, f) in facet_list.iter().enumerate() {
        let mut vs = Vec::with_capacity(rank);
        let mut used = ColorSet::EMPTY;
        for label in f {
            let label = label.as_ref();
            let v = match index.get(label) {
                Some(&v) => v,
                None => {
                    let c = *coloring
                        .get(label)
                        .ok_or_else(|| Error::DanglingLabel(label.to_string()))?;
                    if c < 0 || c as usize > d {
                        return Err(Error::ColorOutOfRange { color: c, max: d });
                    }
                    let v = VertexId(labels.len() as u32);
                    labels.push(label.to_string());
                    colors.push(c as u8);
                    index.insert(label.to_string(), v);
                    v
                }
            };
            if vs.contains(&v) {
                return Err(Error::RepeatedVertexInFacet {
                    facet: i,
                    label: label.to_string(),
                });
            }
            let c = colors[v.index()] as usize;
            if used.contains(c) {
                return Err(Error::RepeatedColorInFacet { facet: i, color: c });
            }
            used.insert(c);
            vs.push(v);
        }
        let s = Simplex::new(vs).expect("repeats rejected above");
        if let Some(&first) = seen.get(&s) {
            return Err(Error::DuplicateFacet { facet: i, first });
        }
        seen.insert(s.clone(), i);
        facets.push(s);
    }
    Ok(ColoredComplex::assemble(labels, colors, rank, rank, facets))
}

impl ColoredComplex {
    /// Assembles a complex from trusted parts. Facets must be sorted, pure,
    /// rainbow and distinct, and every vertex must lie in some facet.
    pub(crate) fn assemble(
        labels: Vec<String>,
        colors: Vec<u8>,
        palette: usize,
        rank: usize,
        facets: Vec<Simplex>,
    ) -> Self {
        let mut incidence = vec![Vec::new(); labels.len()];
        for (i, f) in facets.iter().enumerate() {
            debug_assert_eq!(f.len(), rank);
            for v in f.vertices() {
                incidence[v.index()].push(i as u32);
            }
        }
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), VertexId(i as u32)))
            .collect();
        let cx = ColoredComplex {
            labels,
            colors,
            palette,
            rank,
            facets,
            label_index,
            incidence,
            faces: (0..rank).map(|_| OnceLock::new()).collect(),
            validation: OnceLock::new(),
        };
        debug_assert!(cx.facets.iter().all(|f| cx.colors_of(f).len() == f.len()));
        cx
    }

    /// Builds a complex on the vertices used by `facets` (ids of `self`),
    /// compacting ids while preserving their relative order.
    pub(crate) fn subcomplex(&self, facets: Vec<Simplex>) -> ColoredComplex {
        let mut facets = facets;
        facets.sort();
        facets.dedup();
        let mut used: Vec<bool> = vec![false; self.labels.len()];
        for f in &facets {
            for v in f.vertices() {
                used[v.index()] = true;
            }
        }
        let mut remap = vec![u32::MAX; self.labels.len()];
        let mut labels = Vec::new();
        let mut colors = Vec::new();
        for (old, _) in used.iter().enumerate().filter(|(_, &u)| u) {
            remap[old] = labels.len() as u32;
            labels.push(self.labels[old].clone());
            colors.push(self.colors[old]);
        }
        let rank = facets.first().map_or(0, Simplex::len);
        let facets = facets
            .into_iter()
            .map(|f| {
                Simplex::from_sorted(f.vertices().iter().map(|v| VertexId(remap[v.index()])).collect())
            })
            .collect();
        ColoredComplex::assemble(labels, colors, self.palette, rank, facets)
    }

    /// Dimension of the facets; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.rank as isize - 1
    }

    /// Dimension as an unsigned integer, for complexes with at least one vertex.
    pub(crate) fn d(&self) -> usize {
        debug_assert!(self.rank >= 1);
        self.rank - 1
    }

    /// Number of vertices per facet.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v.index()] as usize
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    /// The color set `κ(V(σ))`.
    pub fn colors_of(&self, s: &Simplex) -> ColorSet {
        s.vertices().iter().map(|&v| self.color(v)).collect()
    }

    /// Colors that occur on some vertex.
    pub fn used_colors(&self) -> ColorSet {
        self.colors.iter().map(|&c| c as usize).collect()
    }

    pub fn simplex_labels(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|&v| self.label(v).to_string()).collect()
    }

    /// Looks up a simplex by vertex labels. Does not check that it is a face.
    pub fn simplex<L: AsRef<str>>(&self, labels: &[L]) -> Result<Simplex> {
        let vs = labels
            .iter()
            .map(|l| {
                self.vertex(l.as_ref())
                    .ok_or_else(|| Error::FaceNotPresent(format!("unknown vertex {:?}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vs).ok_or_else(|| Error::FaceNotPresent("repeated vertex".into()))
    }

    /// Indices of the facets that contain `s`.
    pub fn facets_containing(&self, s: &Simplex) -> Vec<usize> {
        match s.vertices().iter().min_by_key(|v| self.incidence[v.index()].len()) {
            None => (0..self.facets.len()).collect(),
            Some(&v) => self.incidence[v.index()]
                .iter()
                .map(|&i| i as usize)
                .filter(|&i| s.is_face_of(&self.facets[i]))
                .collect(),
        }
    }

    /// Facets containing vertex `v`.
    pub fn vertex_facets(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v.index()].iter().map(|&i| i as usize)
    }

    /// All faces of dimension `k` (`0 <= k <= d`), sorted. Built on first use.
    pub fn faces(&self, k: usize) -> &[Simplex] {
        if k >= self.rank {
            return &[];
        }
        self.faces[k].get_or_init(|| {
            if k + 1 == self.rank {
                let mut all = self.facets.clone();
                all.sort();
                return all;
            }
            let mut all: Vec<Simplex> = self
                .facets
                .iter()
                .flat_map(|f| f.faces_of_size(k + 1))
                .collect();
            all.sort_unstable();
            all.dedup();
            all
        })
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        if s.is_empty() {
            return true;
        }
        if s.len() > self.rank || s.vertices().iter().any(|v| v.index() >= self.labels.len()) {
            return false;
        }
        self.faces(s.len() - 1).binary_search(s).is_ok()
    }

    /// f-vector `(f_{-1}, f_0, ..., f_d)`.
    pub fn f_vector(&self) -> Vec<u64> {
        std::iter::once(1)
            .chain((0..self.rank).map(|k| self.faces(k).len() as u64))
            .collect()
    }

    fn require_face(&self, s: &Simplex) -> Result<()> {
        if self.contains_face(s) {
            Ok(())
        } else {
            Err(Error::FaceNotPresent(format!("{:?}", s)))
        }
    }

    /// `lk(σ) = {γ : γ ∩ σ = ∅, γσ ∈ Δ}`, with inherited colors.
    pub fn link(&self, s: &Simplex) -> Result<ColoredComplex> {
        self.require_face(s)?;
        let facets = self
            .facets_containing(s)
            .into_iter()
            .map(|i| self.facets[i].minus(s))
            .collect();
        Ok(self.subcomplex(facets))
    }

    /// All faces of facets containing `σ`.
    pub fn star(&self, s: &Simplex) -> Result<ColoredComplex> {
        self.require_face(s)?;
        let facets = self
            .facets_containing(s)
            .into_iter()
            .map(|i| self.facets[i].clone())
            .collect();
        Ok(self.subcomplex(facets))
    }

    /// Number of vertices of `lk(σ)`.
    pub fn degree(&self, s: &Simplex) -> Result<usize> {
        self.require_face(s)?;
        let mut vs: Vec<VertexId> = self
            .facets_containing(s)
            .into_iter()
            .flat_map(|i| self.facets[i].minus(s).0)
            .collect();
        vs.sort_unstable();
        vs.dedup();
        Ok(vs.len())
    }

    /// Vertices of `f` whose color lies in `colors`.
    pub fn restrict(&self, f: &Simplex, colors: ColorSet) -> Simplex {
        Simplex::from_sorted(
            f.vertices()
                .iter()
                .copied()
                .filter(|&v| colors.contains(self.color(v)))
                .collect(),
        )
    }

    /// Vertex-connectivity of the complex (1-skeleton components).
    pub fn component_count(&self) -> usize {
        let mut uf = crate::graph::UnionFind::new(self.labels.len());
        for f in &self.facets {
            for w in f.vertices().windows(2) {
                uf.union(w[0].index(), w[1].index());
            }
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The cached validation report.
    pub fn validation(&self) -> &ValidationReport {
        self.validation
            .get_or_init(|| crate::validate::compute_report(self))
    }

    /// Errors unless the complex is a balanced normal pseudomanifold.
    pub fn require_normal_pseudomanifold(&self) -> Result<()> {
        let r = self.validation();
        if r.is_normal_pseudomanifold() && r.balanced {
            Ok(())
        } else {
            Err(Error::PreconditionFailed(format!(
                "not a balanced normal pseudomanifold ({})",
                r.failure_summary()
            )))
        }
    }

    /// Facets rendered as sorted label sets, for comparisons up to vertex order.
    pub fn labelled_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut l = self.simplex_labels(f);
                l.sort();
                l
            })
            .collect();
        out.sort();
        out
    }

    /// Label-to-color map for all vertices.
    pub fn coloring(&self) -> HashMap<String, i64> {
        self.labels
            .iter()
            .zip(&self.colors)
            .map(|(l, &c)| (l.clone(), c as i64))
            .collect()
    }

    /// Raw parts for constructors: labels, colors and facet vertex lists.
    pub(crate) fn parts(&self) -> (&[String], &[u8], &[Simplex]) {
        (&self.labels, &self.colors, &self.facets)
    }
}

/// Validates an already-built complex; see [`ValidationReport`].
pub fn validate(cx: &ColoredComplex) -> ValidationReport {
    cx.validation().clone()
}

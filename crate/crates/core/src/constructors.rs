//! Standard balanced complexes: octahedral spheres, joins and balanced
//! connected sums.

use std::collections::HashSet;

use rand::Rng;

use crate::color::MAX_DIM;
use crate::complex::{ColoredComplex, Simplex, VertexId};
use crate::error::{Error, Result};

/// Index of a facet within a [`ColoredComplex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FacetHandle(pub usize);

/// The octahedral d-sphere `∂(a_0 b_0) ⋆ ... ⋆ ∂(a_d b_d)` with
/// `κ(a_i) = κ(b_i) = i`. `d = 0` gives the two-point sphere.
pub fn octahedral_sphere(d: usize) -> ColoredComplex {
    assert!(d <= MAX_DIM, "dimension {d} exceeds {MAX_DIM}");
    let mut labels = Vec::with_capacity(2 * (d + 1));
    let mut colors = Vec::with_capacity(2 * (d + 1));
    for i in 0..=d {
        labels.push(format!("a{i}"));
        labels.push(format!("b{i}"));
        colors.extend([i as u8, i as u8]);
    }
    let facets = (0u64..1 << (d + 1))
        .map(|mask| {
            Simplex::from_sorted(
                (0..=d)
                    .map(|i| VertexId((2 * i + ((mask >> i) & 1) as usize) as u32))
                    .collect(),
            )
        })
        .collect();
    ColoredComplex::assemble(labels, colors, d + 1, d + 1, facets)
}

/// A label not in `taken`: `base` itself, else `base~1`, `base~2`, ...
fn fresh_label(base: &str, taken: &HashSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|n| format!("{base}~{n}"))
        .find(|l| !taken.contains(l))
        .unwrap()
}

/// The join `Δ1 ⋆ Δ2`. Colors of `Δ2` are shifted past those of `Δ1`;
/// colliding labels of `Δ2` are renamed.
pub fn join(a: &ColoredComplex, b: &ColoredComplex) -> ColoredComplex {
    let shift = a.palette();
    assert!(
        shift + b.palette() <= MAX_DIM + 1,
        "join exceeds the maximum dimension"
    );
    let (a_labels, a_colors, a_facets) = a.parts();
    let (b_labels, b_colors, b_facets) = b.parts();
    let mut labels: Vec<String> = a_labels.to_vec();
    let mut colors: Vec<u8> = a_colors.to_vec();
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    for (l, &c) in b_labels.iter().zip(b_colors) {
        let l = fresh_label(l, &taken);
        taken.insert(l.clone());
        labels.push(l);
        colors.push(c + shift as u8);
    }
    let offset = a_labels.len() as u32;
    let mut facets = Vec::with_capacity(a_facets.len() * b_facets.len());
    for fa in a_facets {
        for fb in b_facets {
            let mut vs = fa.vertices().to_vec();
            vs.extend(fb.vertices().iter().map(|v| VertexId(v.0 + offset)));
            facets.push(Simplex::from_sorted(vs));
        }
    }
    ColoredComplex::assemble(
        labels,
        colors,
        shift + b.palette(),
        a.rank() + b.rank(),
        facets,
    )
}

/// Balanced connected sum along the facets `h1` of `a` and `h2` of `b`.
///
/// The gluing map is not a parameter: two rainbow facets admit exactly one
/// color-preserving bijection, which sends each vertex of `h2` to the vertex
/// of `h1` with the same color. The glued facet is removed. Labels of `a` are
/// kept; vertices of `b` outside the glued facet keep their label unless it
/// collides, in which case a `~n` suffix is added.
pub fn connected_sum(
    a: &ColoredComplex,
    h1: FacetHandle,
    b: &ColoredComplex,
    h2: FacetHandle,
) -> Result<ColoredComplex> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot glue a {}-complex to a {}-complex",
            a.dim(),
            b.dim()
        )));
    }
    for (cx, h) in [(a, h1), (b, h2)] {
        if h.0 >= cx.facet_count() {
            return Err(Error::InvalidHandle {
                handle: h.0,
                facets: cx.facet_count(),
            });
        }
    }
    a.require_normal_pseudomanifold()?;
    b.require_normal_pseudomanifold()?;

    let (a_labels, a_colors, a_facets) = a.parts();
    let (b_labels, b_colors, b_facets) = b.parts();
    let sigma1 = &a_facets[h1.0];
    let sigma2 = &b_facets[h2.0];
    let mut by_color = vec![None; a.palette().max(b.palette())];
    for &v in sigma1.vertices() {
        by_color[a.color(v)] = Some(v);
    }

    let mut labels = a_labels.to_vec();
    let mut colors = a_colors.to_vec();
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    let mut remap = vec![VertexId(u32::MAX); b_labels.len()];
    for (i, (l, &c)) in b_labels.iter().zip(b_colors).enumerate() {
        let v = VertexId(i as u32);
        if sigma2.contains(v) {
            remap[i] = by_color[c as usize].ok_or_else(|| {
                Error::PreconditionFailed("glued facets carry different colors".into())
            })?;
        } else {
            let l = fresh_label(l, &taken);
            taken.insert(l.clone());
            remap[i] = VertexId(labels.len() as u32);
            labels.push(l);
            colors.push(c);
        }
    }

    let mut facets: Vec<Simplex> = a_facets
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != h1.0)
        .map(|(_, f)| f.clone())
        .collect();
    for (i, f) in b_facets.iter().enumerate() {
        if i == h2.0 {
            continue;
        }
        let vs = f.vertices().iter().map(|v| remap[v.index()]).collect();
        facets.push(Simplex::new(vs).expect("remap is injective on facets"));
    }
    Ok(ColoredComplex::assemble(
        labels,
        colors,
        a.palette().max(b.palette()),
        a.rank(),
        facets,
    ))
}

/// Iterated connected sum of `summands` copies of the octahedral d-sphere,
/// gluing at uniformly random facets.
pub fn random_octahedral_sum<R: Rng + ?Sized>(d: usize, summands: usize, rng: &mut R) -> ColoredComplex {
    assert!(summands >= 1);
    let piece = octahedral_sphere(d);
    let mut acc = piece.clone();
    for _ in 1..summands {
        let h1 = FacetHandle(rng.gen_range(0..acc.facet_count()));
        let h2 = FacetHandle(rng.gen_range(0..piece.facet_count()));
        acc = connected_sum(&acc, h1, &piece, h2).expect("octahedral sums stay normal");
    }
    acc
}

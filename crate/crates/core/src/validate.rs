//! Normal-pseudomanifold checks. Failures are reported with witness faces,
//! never raised as errors.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{ColoredComplex, Simplex};
use crate::graph::UnionFind;

/// Outcome of [`crate::complex::validate`]. Witness faces are given by vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub dimension: isize,
    pub pure: bool,
    pub balanced: bool,
    /// Every (d-1)-face lies in exactly two facets.
    pub ridge_condition: bool,
    /// Links of all faces of codimension at least two are connected.
    pub links_connected: bool,
    pub connected: bool,
    pub facet_strongly_connected: bool,
    pub non_rainbow_facets: Vec<Vec<String>>,
    pub bad_ridges: Vec<Vec<String>>,
    pub disconnected_links: Vec<Vec<String>>,
    pub component_count: usize,
}

impl ValidationReport {
    pub fn is_normal_pseudomanifold(&self) -> bool {
        self.pure && self.ridge_condition && self.links_connected && self.connected
    }

    pub fn is_balanced_normal_pseudomanifold(&self) -> bool {
        self.balanced && self.is_normal_pseudomanifold()
    }

    /// Short comma-separated list of the failing flags.
    pub fn failure_summary(&self) -> String {
        let flags = [
            ("pure", self.pure),
            ("balanced", self.balanced),
            ("ridge_condition", self.ridge_condition),
            ("links_connected", self.links_connected),
            ("connected", self.connected),
        ];
        let failing: Vec<&str> = flags.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
        if failing.is_empty() {
            "all checks pass".to_string()
        } else {
            format!("failing: {}", failing.join(", "))
        }
    }
}

pub(crate) fn compute_report(cx: &ColoredComplex) -> ValidationReport {
    let rank = cx.rank();
    let pure = cx.facets().iter().all(|f| f.len() == rank);
    let non_rainbow_facets: Vec<Vec<String>> = cx
        .facets()
        .iter()
        .filter(|f| cx.colors_of(f).len() != f.len())
        .map(|f| cx.simplex_labels(f))
        .collect();

    // Ridge condition and facet adjacency in one pass over ridges.
    let mut ridge_facets: HashMap<Simplex, Vec<usize>> = HashMap::new();
    if rank >= 1 {
        for (i, f) in cx.facets().iter().enumerate() {
            for r in f.faces_of_size(rank - 1) {
                ridge_facets.entry(r).or_default().push(i);
            }
        }
    }
    let mut bad: Vec<&Simplex> = ridge_facets
        .iter()
        .filter(|(_, fs)| fs.len() != 2)
        .map(|(r, _)| r)
        .collect();
    bad.sort();
    let bad_ridges: Vec<Vec<String>> = bad.into_iter().map(|r| cx.simplex_labels(r)).collect();

    let mut facet_uf = UnionFind::new(cx.facet_count());
    for fs in ridge_facets.values() {
        for w in fs.windows(2) {
            facet_uf.union(w[0], w[1]);
        }
    }

    // Faces of dimension 0..=d-2; the empty face is covered by `connected`.
    let mut disconnected_links = Vec::new();
    for k in 0..rank.saturating_sub(2) {
        for s in cx.faces(k) {
            if !link_connected(cx, s) {
                disconnected_links.push(cx.simplex_labels(s));
            }
        }
    }

    let component_count = cx.component_count();
    ValidationReport {
        dimension: cx.dim(),
        pure,
        balanced: non_rainbow_facets.is_empty(),
        ridge_condition: bad_ridges.is_empty(),
        links_connected: disconnected_links.is_empty(),
        connected: component_count <= 1,
        facet_strongly_connected: cx.facet_count() <= 1 || facet_uf.count() == 1,
        non_rainbow_facets,
        bad_ridges,
        disconnected_links,
        component_count,
    }
}

/// Connectivity of `lk(s)` without materialising it.
fn link_connected(cx: &ColoredComplex, s: &Simplex) -> bool {
    let containing = cx.facets_containing(s);
    let mut local: HashMap<u32, usize> = HashMap::new();
    let mut pairs = Vec::new();
    for &i in &containing {
        let rest = cx.facets()[i].minus(s);
        let ids: Vec<usize> = rest
            .vertices()
            .iter()
            .map(|v| {
                let n = local.len();
                *local.entry(v.0).or_insert(n)
            })
            .collect();
        for w in ids.windows(2) {
            pairs.push((w[0], w[1]));
        }
    }
    let mut uf = UnionFind::new(local.len());
    for (a, b) in pairs {
        uf.union(a, b);
    }
    uf.count() <= 1
}

#[cfg(test)]
mod tests {
    use crate::complex::{build_complex, validate};
    use crate::constructors::octahedral_sphere;

    #[test]
    fn octahedral_sphere_is_normal() {
        let r = validate(&octahedral_sphere(3));
        assert!(r.is_balanced_normal_pseudomanifold());
        assert!(r.facet_strongly_connected);
        assert_eq!(r.failure_summary(), "all checks pass");
    }

    #[test]
    fn two_tetrahedra_sharing_a_triangle() {
        let col = [("a", 0), ("b", 1), ("c", 2), ("d", 3), ("e", 3)]
            .iter()
            .map(|(l, c)| (l.to_string(), *c as i64))
            .collect();
        let cx = build_complex(&[vec!["a", "b", "c", "d"], vec!["a", "b", "c", "e"]], &col).unwrap();
        let r = validate(&cx);
        assert!(!r.ridge_condition);
        assert_eq!(r.bad_ridges.len(), 6);
        assert!(r.connected);
        assert!(!r.is_normal_pseudomanifold());
    }

    #[test]
    fn wedge_of_two_spheres_fails_link_connectivity() {
        let o = octahedral_sphere(3);
        let mut facets: Vec<Vec<String>> = Vec::new();
        for f in o.facets() {
            facets.push(o.simplex_labels(f));
            // Second copy shares only a0.
            facets.push(
                o.simplex_labels(f)
                    .into_iter()
                    .map(|l| if l == "a0" { l } else { format!("{l}'") })
                    .collect(),
            );
        }
        let mut col = o.coloring();
        for (l, c) in o.coloring() {
            col.insert(format!("{l}'"), c);
        }
        let cx = build_complex(&facets, &col).unwrap();
        let r = validate(&cx);
        assert!(r.ridge_condition);
        assert!(r.connected);
        assert!(!r.links_connected);
        assert_eq!(r.disconnected_links, vec![vec!["a0".to_string()]]);
        assert!(!r.facet_strongly_connected);
    }
}

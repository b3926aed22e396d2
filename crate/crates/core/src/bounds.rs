//! Instance checks of the genus lower bounds and the sphere-recognition
//! criteria for one triangulation.

use serde::{Deserialize, Serialize};

use crate::complex::ColoredComplex;
use crate::error::Result;
use crate::genus::{GenusEngine, GenusRecord};
use crate::half::HalfInt;
use crate::rank_selected::{join_decomposition, restrict, is_theta_shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Hypotheses not met, or the criterion is inconclusive for this input.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    /// The inequality with the numbers of this input substituted.
    pub instance: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub dimension: usize,
    pub genus: HalfInt,
    pub euler: i64,
    pub asserted_m: Option<u64>,
    pub checks: Vec<BoundCheck>,
    /// Reasons the input is certified to be a sphere; empty if none applies.
    pub sphere_certificates: Vec<String>,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn certified_sphere(&self) -> bool {
        !self.sphere_certificates.is_empty()
    }
}

fn check(name: &str, instance: String, outcome: Outcome) -> BoundCheck {
    BoundCheck {
        name: name.to_string(),
        instance,
        outcome,
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Evaluates every applicable inequality for `Δ`. `asserted_m` is the rank of
/// the fundamental group when the caller knows it (0 for spheres, 1 for
/// sphere bundles over the circle).
///
/// The sphere criteria and the manifold bounds presuppose that `Δ`
/// triangulates a manifold, which is not checked. In dimensions 3 and 4 they
/// are skipped unless the Dehn-Sommerville relation holds.
pub fn verify_bounds(cx: &ColoredComplex, asserted_m: Option<u64>) -> Result<BoundsReport> {
    let engine = GenusEngine::new(cx)?;
    let record = engine.balanced_genus()?;
    Ok(bounds_for(cx, &engine, &record, asserted_m))
}

pub(crate) fn bounds_for(
    cx: &ColoredComplex,
    engine: &GenusEngine,
    record: &GenusRecord,
    asserted_m: Option<u64>,
) -> BoundsReport {
    let flags = engine.flags();
    let d = engine.dimension() as i64;
    let fd = flags.f_i(d as isize) as i64;
    let chi = flags.euler;
    let g = record.genus;
    let g2 = g.twice();
    let manifold_like = record.closed_form.is_some();
    let mut checks = Vec::new();
    let mut certs = Vec::new();

    // G >= 1 + (d-3) f_d / 8, i.e. 8 * 2G >= 16 + 2 (d-3) f_d.
    checks.push(check(
        "facet-count lower bound",
        format!("G = {g} >= 1 + ({d}-3)*{fd}/8"),
        verdict(8 * g2 >= 16 + 2 * (d - 3) * fd),
    ));
    let sphere_bound = 1 + (d - 3) * (1i64 << (d - 2));
    checks.push(check(
        "octahedral lower bound",
        format!("G = {g} >= 1 + ({d}-3)*2^({d}-2) = {sphere_bound}"),
        verdict(g2 >= 2 * sphere_bound),
    ));

    // Γ_S <= 1 on a balanced manifold forces a sphere.
    let gammas = flags.gammas();
    for gv in &gammas {
        if gv.value > 1 || !manifold_like && d <= 4 {
            continue;
        }
        let shape = if gv.value == 0 {
            match join_decomposition(cx, gv.set) {
                Ok(Some(_)) => Some("Δ_S is a cycle and Δ splits as a join"),
                _ => None,
            }
        } else {
            restrict(cx, gv.set)
                .ok()
                .filter(|sel| is_theta_shape(&sel.graph()))
                .map(|_| "Δ_S is a cycle with one extra path")
        };
        let ok = shape.is_some();
        checks.push(check(
            "small-gamma sphere criterion",
            format!("Γ_{} = {} <= 1", gv.set, gv.value),
            verdict(ok),
        ));
        if let Some(why) = shape {
            certs.push(format!("Γ_{} = {} ({why})", gv.set, gv.value));
        }
    }

    if d == 3 {
        let ok = manifold_like && g2 <= 6;
        checks.push(check(
            "3-sphere criterion",
            format!("G = {g} <= 3"),
            if ok { Outcome::Pass } else { Outcome::NotApplicable },
        ));
        if ok {
            certs.push(format!("G = {g} <= 3 in dimension 3"));
        }
    }
    if d == 4 {
        let threshold = 2 * chi + 10;
        let ok = manifold_like && g2 <= 2 * threshold;
        checks.push(check(
            "4-sphere criterion",
            format!("G = {g} <= 2*{chi}+10 = {threshold}"),
            if ok { Outcome::Pass } else { Outcome::NotApplicable },
        ));
        if ok {
            certs.push(format!("G = {g} <= 2χ+10 = {threshold} in dimension 4"));
        }
    }

    let sphere = !certs.is_empty();
    if let Some(m) = asserted_m {
        let m = m as i64;
        if sphere {
            checks.push(check(
                "sphere has trivial fundamental group",
                format!("asserted m = {m} == 0"),
                verdict(m == 0),
            ));
        }
        if d == 3 && manifold_like {
            checks.push(check(
                "non-sphere bound in dimension 3",
                format!("G = {g} >= m+3 = {}", m + 3),
                if sphere {
                    Outcome::NotApplicable
                } else {
                    verdict(g2 >= 2 * (m + 3))
                },
            ));
        }
        if d == 4 && manifold_like {
            let rhs = 2 * chi + 5 * m + 11;
            checks.push(check(
                "non-sphere bound in dimension 4",
                format!("G = {g} >= 2*{chi}+5*{m}+11 = {rhs}"),
                if sphere {
                    Outcome::NotApplicable
                } else {
                    verdict(g2 >= 2 * rhs)
                },
            ));
        }
        for gv in &gammas {
            if gv.value >= 2 {
                checks.push(check(
                    "gamma rank bound",
                    format!("Γ_{} = {} >= m+2 = {}", gv.set, gv.value, m + 2),
                    verdict(gv.value >= m + 2),
                ));
            }
            if gv.value == 2 {
                checks.push(check(
                    "gamma two forces trivial rank",
                    format!("Γ_{} = 2 => m = {m} == 0", gv.set),
                    verdict(m == 0),
                ));
            }
        }
    }

    BoundsReport {
        dimension: engine.dimension(),
        genus: g,
        euler: chi,
        asserted_m,
        checks,
        sphere_certificates: certs,
    }
}

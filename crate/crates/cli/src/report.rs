//! The `report` document and plain-text table rendering.

use balanced_genus::flags::GammaValue;
use balanced_genus::{
    rank_bounds, verify_bounds, BoundsReport, ColorSet, ColoredComplex, Error, FlagVectors,
    GenusEngine, GenusRecord, RankBounds, ValidationReport,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "balgen";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRow {
    pub set: ColorSet,
    pub f: u64,
    pub h: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagTables {
    pub dimension: usize,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub euler: i64,
    pub flags: Vec<FlagRow>,
    pub gammas: Vec<GammaValue>,
}

impl FlagTables {
    pub fn new(fv: &FlagVectors, only: Option<ColorSet>) -> Self {
        let palette = fv.dimension + 1;
        let flags = (0u32..1 << palette)
            .map(ColorSet::from_bits)
            .filter(|s| only.is_none_or(|t| t == *s))
            .map(|s| FlagRow {
                set: s,
                f: fv.flag_f(s).expect("set within palette"),
                h: fv.flag_h(s).expect("set within palette"),
            })
            .collect();
        FlagTables {
            dimension: fv.dimension,
            f: fv.f.clone(),
            h: fv.h.clone(),
            euler: fv.euler,
            flags,
            gammas: if palette >= 2 { fv.gammas() } else { Vec::new() },
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let f: Vec<String> = self.f.iter().map(u64::to_string).collect();
        let h: Vec<String> = self.h.iter().map(i64::to_string).collect();
        out += &format!("f = ({})\n", f.join(", "));
        out += &format!("h = ({})\n", h.join(", "));
        out += &format!("euler characteristic = {}\n\n", self.euler);
        let rows: Vec<Vec<String>> = self
            .flags
            .iter()
            .map(|r| vec![r.set.to_string(), r.f.to_string(), r.h.to_string()])
            .collect();
        out += &table(&["S", "f_S", "h_S"], &rows);
        if !self.gammas.is_empty() {
            out.push('\n');
            let rows: Vec<Vec<String>> = self
                .gammas
                .iter()
                .map(|g| vec![g.set.to_string(), g.value.to_string()])
                .collect();
            out += &table(&["S", "gamma_S"], &rows);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub validation: ValidationReport,
    pub flags: FlagTables,
    pub genus: Option<GenusRecord>,
    pub bounds: Option<BoundsReport>,
    pub pi1: Option<RankBounds>,
    /// Why a section is missing, one line per skipped section.
    pub notes: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn build(cx: &ColoredComplex, input: &[u8], m: Option<u64>) -> Report {
        let validation = cx.validation().clone();
        let fv = FlagVectors::compute(cx);
        let mut notes = Vec::new();
        let mut genus = None;
        let mut bounds = None;
        match GenusEngine::new(cx).and_then(|e| e.balanced_genus().map(|r| (e, r))) {
            Ok((_, record)) => {
                match verify_bounds(cx, m) {
                    Ok(b) => bounds = Some(b),
                    Err(e) => notes.push(format!("bounds: {e}")),
                }
                genus = Some(record);
            }
            Err(e) => notes.push(format!("genus: {e}")),
        }
        let pi1 = match rank_bounds(cx, None) {
            Ok(b) => Some(b),
            Err(e) => {
                notes.push(format!("pi1: {e}"));
                None
            }
        };
        Report {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: digest(input),
            validation,
            flags: FlagTables::new(&fv, None),
            genus,
            bounds,
            pi1,
            notes,
        }
    }

    /// True when every computed section is internally consistent.
    pub fn consistent(&self) -> bool {
        self.genus.as_ref().is_none_or(GenusRecord::cross_checks_pass)
            && self.bounds.as_ref().is_none_or(BoundsReport::all_pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{} {}\ninput sha256 {}\n\n",
            self.tool, self.version, self.input_sha256
        );
        out += "[validation]\n";
        out += &render_validation(&self.validation);
        out += "\n[flag vectors]\n";
        out += &self.flags.render();
        if let Some(g) = &self.genus {
            out += "\n[genus]\n";
            out += &render_genus(g, true);
        }
        if let Some(b) = &self.bounds {
            out += "\n[bounds]\n";
            out += &render_bounds(b);
        }
        if let Some(p) = &self.pi1 {
            out += "\n[fundamental group]\n";
            out += &render_pi1(p);
        }
        for n in &self.notes {
            out += &format!("skipped {n}\n");
        }
        out
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_validation(r: &ValidationReport) -> String {
    let mut out = format!("dimension            {}\n", r.dimension);
    out += &format!("pure                 {}\n", yes(r.pure));
    out += &format!("balanced             {}\n", yes(r.balanced));
    out += &format!("ridge condition      {}\n", yes(r.ridge_condition));
    out += &format!("links connected      {}\n", yes(r.links_connected));
    out += &format!("connected            {}\n", yes(r.connected));
    out += &format!(
        "normal pseudomanifold {}\n",
        yes(r.is_balanced_normal_pseudomanifold())
    );
    if !r.is_balanced_normal_pseudomanifold() {
        out += &format!("{}\n", r.failure_summary());
    }
    out
}

pub fn render_genus(g: &GenusRecord, all: bool) -> String {
    let rows: Vec<Vec<String>> = g
        .entries
        .iter()
        .filter(|e| all || e.rho() == g.genus)
        .map(|e| {
            vec![
                e.necklace.to_string(),
                e.rho().to_string(),
                e.embedding_euler.to_string(),
                e.faces.to_string(),
                e.rho_flags.to_string(),
                e.rho_closed_form.map_or("-".into(), |c| c.to_string()),
            ]
        })
        .collect();
    let mut out = table(
        &["necklace", "rho", "euler(F)", "faces", "rho(flags)", "rho(closed)"],
        &rows,
    );
    out += &format!(
        "\nbalanced genus G = {} (over {} necklaces, minimum attained by {}; an upper bound for the genus of the manifold)\n",
        g.genus,
        g.entries.len(),
        g.argmin.len()
    );
    out += &format!("orientable {}\n", yes(g.orientable));
    for f in &g.cross_check_failures {
        out += &format!("cross-check failed: {f}\n");
    }
    out
}

pub fn render_bounds(b: &BoundsReport) -> String {
    let rows: Vec<Vec<String>> = b
        .checks
        .iter()
        .map(|c| {
            let outcome = match c.outcome {
                balanced_genus::Outcome::Pass => "pass",
                balanced_genus::Outcome::Fail => "FAIL",
                balanced_genus::Outcome::NotApplicable => "n/a",
            };
            vec![outcome.to_string(), c.name.clone(), c.instance.clone()]
        })
        .collect();
    let mut out = table(&["outcome", "check", "instance"], &rows);
    if b.certified_sphere() {
        for c in &b.sphere_certificates {
            out += &format!("certified sphere: {c}\n");
        }
    } else {
        out += "not certified as a sphere\n";
    }
    out
}

pub fn render_pi1(b: &RankBounds) -> String {
    let mut out = String::new();
    if let Some(s) = b.set {
        out += &format!(
            "color set {s} (tree extends a spanning tree of the selection: {})\n",
            yes(b.tree_extends_selection)
        );
    }
    out += &format!("generators             {}\n", b.generators);
    out += &format!("relations              {}\n", b.relations);
    out += &format!("trivialized by links   {}\n", b.trivialized_by_links);
    out += &format!("surviving classes      {}\n", b.surviving);
    if let Some(p) = b.pair_bound {
        out += &format!("selection bound        {p}\n");
    }
    if let Some(w) = &b.link_witness {
        out += &format!("selection lies in link of {w}\n");
    }
    out += &format!("first homology         {}\n", b.homology);
    out += &format!("rank bounds            {} <= m <= {}\n", b.lower, b.upper);
    out
}

/// Exit status for an error: 1 for failed cross-checks, 2 for everything else.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CrossCheckFailed(_) => 1,
        _ => 2,
    }
}

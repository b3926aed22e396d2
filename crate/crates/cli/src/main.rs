//! `balgen`: balanced genus, flag vectors and fundamental-group bounds for
//! balanced triangulations given as JSON.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use balanced_genus::{
    connected_sum, dual_graph, octahedral_sphere, pair_structure, random_octahedral_sum,
    read_complex, verify_bounds, write_complex, ColorSet, ColoredComplex, DotOptions, Error,
    FacetHandle, GenusEngine,
};
use balanced_genus::pi1::{random_spanning_tree, rank_bounds, rank_bounds_with_tree};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use report::{exit_code, render_bounds, render_genus, render_pi1, render_validation, FlagTables, Report};

#[derive(Parser)]
#[command(name = "balgen", version, about = "Balanced genus of balanced normal pseudomanifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the input is a balanced normal pseudomanifold.
    Validate {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// f-, h- and flag vectors.
    Flags {
        file: String,
        /// Restrict the flag table to one color set, e.g. `0,2`.
        #[arg(long)]
        set: Option<ColorSet>,
        #[arg(long)]
        json: bool,
    },
    /// Structure of the rank-selected graph for a color pair.
    Structure {
        file: String,
        #[arg(long)]
        set: ColorSet,
        #[arg(long)]
        json: bool,
    },
    /// Colored dual graph summary and DOT export.
    Dual {
        file: String,
        /// Write Graphviz DOT here (`-` for standard output).
        #[arg(long)]
        dot: Option<String>,
        /// Keep only edges of these two colors in the DOT output.
        #[arg(long)]
        pair: Option<ColorSet>,
    },
    /// ε-genus for every necklace and the balanced genus.
    Genus {
        file: String,
        /// List every necklace, not only the minimizers.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the genus lower bounds and sphere criteria.
    Verify {
        file: String,
        /// Known rank of the fundamental group.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Bounds on the rank of the fundamental group.
    Pi1 {
        file: String,
        #[arg(long)]
        set: Option<ColorSet>,
        /// Use a random spanning tree drawn with this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a standard complex as JSON.
    Generate {
        #[command(subcommand)]
        kind: Generate,
    },
    /// Balanced connected sum of two complexes along one facet of each.
    Connsum {
        a: String,
        b: String,
        /// Facet index in A, then facet index in B.
        #[arg(long = "facet", required = true, num_args = 1)]
        facets: Vec<usize>,
    },
    /// Full pipeline: validation, flags, genus, bounds and fundamental group.
    Report {
        file: String,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// The octahedral d-sphere.
    Octahedral {
        #[arg(long)]
        dim: usize,
    },
    /// Iterated connected sum of octahedral spheres along random facets.
    RandomSum {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(Error),
    Io(String),
    /// Computation finished but an internal check failed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn read_bytes(path: &str) -> Result<Vec<u8>, Failure> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<(ColoredComplex, Vec<u8>), Failure> {
    let bytes = read_bytes(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    Ok((read_complex(&text)?, bytes))
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    emit(&serde_json::to_string_pretty(value).expect("serializable"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file, json } => {
            let (cx, _) = load(&file)?;
            let r = cx.validation();
            if json {
                emit_json(r)?;
            } else {
                emit(&render_validation(r))?;
            }
            cx.require_normal_pseudomanifold()?;
            if !r.balanced {
                return Err(Error::PreconditionFailed(r.failure_summary()).into());
            }
        }
        Command::Flags { file, set, json } => {
            let (cx, _) = load(&file)?;
            let fv = balanced_genus::FlagVectors::compute(&cx);
            if let Some(s) = set {
                s.check_within(fv.dimension)?;
            }
            let tables = FlagTables::new(&fv, set);
            if json {
                emit_json(&tables)?;
            } else {
                emit(&tables.render())?;
            }
        }
        Command::Structure { file, set, json } => {
            let (cx, _) = load(&file)?;
            let p = pair_structure(&cx, set)?;
            if json {
                emit_json(&p)?;
            } else {
                let seq: Vec<String> = p.degree_sequence.iter().map(usize::to_string).collect();
                let mut rows: Vec<(&str, String)> = vec![
                    ("color set", p.set.to_string()),
                    ("vertices", p.vertices.to_string()),
                    ("edges", p.edges.to_string()),
                    ("gamma", p.gamma.to_string()),
                    ("degree sequence", seq.join(" ")),
                    ("minimum degree", p.min_degree.to_string()),
                    ("strongly connected", p.strongly_connected.to_string()),
                    ("theta shape", p.theta_shape.to_string()),
                ];
                if let Some(j) = p.join_certified {
                    rows.push(("join decomposition", j.to_string()));
                }
                rows.push(("almost-induced cycles", p.almost_induced_cycles.len().to_string()));
                let mut out: String = rows.iter().map(|(k, v)| format!("{k:<23}{v}\n")).collect();
                for c in &p.almost_induced_cycles {
                    out += &format!("  {}\n", c.join(" "));
                }
                emit(&out)?;
            }
        }
        Command::Dual { file, dot, pair } => {
            let (cx, _) = load(&file)?;
            let g = dual_graph(&cx)?;
            if let Some(p) = pair {
                p.as_pair()?;
                p.check_within(g.dimension())?;
            }
            let options = DotOptions {
                pair: pair.map(|p| p.as_pair().expect("checked")),
            };
            let rendered = g.to_dot(&options)?;
            match dot.as_deref() {
                Some("-") => return emit(&rendered),
                Some(path) => fs::write(path, &rendered)?,
                None => {}
            }
            let mut out = format!("nodes       {}\n", g.node_count());
            out += &format!("edges       {}\n", g.edge_count());
            out += &format!("bipartite   {}\n", g.is_bipartite());
            let mut counts: Vec<_> = g.all_cycle_counts().into_iter().collect();
            counts.sort();
            let rows: Vec<Vec<String>> = counts
                .iter()
                .map(|((i, j), c)| vec![format!("{{{i},{j}}}"), c.to_string()])
                .collect();
            out.push('\n');
            out += &report::table(&["colors", "bicolored cycles"], &rows);
            emit(&out)?;
        }
        Command::Genus { file, all, json } => {
            let (cx, _) = load(&file)?;
            let record = GenusEngine::new(&cx)?.balanced_genus()?;
            if json {
                emit_json(&record)?;
            } else {
                emit(&render_genus(&record, all))?;
            }
            if !record.cross_checks_pass() {
                return Err(Failure::Check);
            }
        }
        Command::Verify { file, m, json } => {
            let (cx, _) = load(&file)?;
            let b = verify_bounds(&cx, m)?;
            if json {
                emit_json(&b)?;
            } else {
                emit(&render_bounds(&b))?;
            }
            if !b.all_pass() {
                return Err(Failure::Check);
            }
        }
        Command::Pi1 {
            file,
            set,
            seed,
            json,
        } => {
            let (cx, _) = load(&file)?;
            let b = match seed {
                Some(seed) => {
                    let tree = random_spanning_tree(&cx, set, seed)?;
                    rank_bounds_with_tree(&cx, set, &tree)?
                }
                None => rank_bounds(&cx, set)?,
            };
            if json {
                emit_json(&b)?;
            } else {
                emit(&render_pi1(&b))?;
            }
        }
        Command::Generate { kind } => {
            let cx = match kind {
                Generate::Octahedral { dim } => {
                    check_dimension(dim, 0)?;
                    octahedral_sphere(dim)
                }
                Generate::RandomSum { dim, count, seed } => {
                    check_dimension(dim, 1)?;
                    if count == 0 {
                        return Err(Error::PreconditionFailed("count must be at least 1".into()).into());
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    random_octahedral_sum(dim, count, &mut rng)
                }
            };
            emit(&write_complex(&cx))?;
        }
        Command::Connsum { a, b, facets } => {
            let [facet_a, facet_b] = facets[..] else {
                return Err(Failure::Io(format!(
                    "expected two --facet values, got {}",
                    facets.len()
                )));
            };
            if a == "-" && b == "-" {
                return Err(Failure::Io("only one input may be standard input".into()));
            }
            let (x, _) = load(&a)?;
            let (y, _) = load(&b)?;
            let sum = connected_sum(&x, FacetHandle(facet_a), &y, FacetHandle(facet_b))?;
            emit(&write_complex(&sum))?;
        }
        Command::Report { file, m, json } => {
            let (cx, bytes) = load(&file)?;
            let r = Report::build(&cx, &bytes, m);
            if json {
                emit_json(&r)?;
            } else {
                emit(&r.render())?;
            }
            if !r.consistent() {
                return Err(Failure::Check);
            }
            if !r.validation.is_balanced_normal_pseudomanifold() {
                return Err(Error::PreconditionFailed(r.validation.failure_summary()).into());
            }
        }
    }
    Ok(())
}

fn check_dimension(dim: usize, min: usize) -> Result<(), Error> {
    if dim < min {
        return Err(Error::DimensionTooLow { found: dim, min });
    }
    if dim > 12 {
        return Err(Error::DimensionTooLarge(dim));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check) => {
            eprintln!("error: an internal cross-check failed");
            ExitCode::from(1)
        }
    }
}

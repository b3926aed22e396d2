//! Balanced normal pseudomanifolds: flag vectors, regular embeddings of the
//! colored dual graph, the balanced genus, and bounds on the rank of the
//! fundamental group.

pub mod bounds;
pub mod color;
pub mod complex;
pub mod constructors;
pub mod dual;
pub mod error;
pub mod flags;
pub mod genus;
mod graph;
pub mod half;
pub mod io;
pub mod necklace;
pub mod pi1;
pub mod rank_selected;
pub mod snf;
pub mod validate;

pub use bounds::{verify_bounds, BoundCheck, BoundsReport, Outcome};
pub use color::ColorSet;
pub use complex::{build_complex, validate, ColoredComplex, Simplex, VertexId};
pub use constructors::{connected_sum, join, octahedral_sphere, random_octahedral_sum, FacetHandle};
pub use dual::{dual_graph, embedding_summary, export_dot, DotOptions, DualGraph, EmbeddingSummary};
pub use error::{Error, Result};
pub use flags::FlagVectors;
pub use genus::{balanced_genus, rho, rho_closed_form, GenusEngine, GenusRecord};
pub use graph::SimpleGraph;
pub use half::HalfInt;
pub use io::{read_complex, write_complex, ComplexDocument};
pub use necklace::{necklaces, Necklace};
pub use pi1::{rank_bounds, RankBounds};
pub use rank_selected::{pair_structure, restrict, PairStructure};
pub use snf::AbelianGroup;
pub use validate::ValidationReport;

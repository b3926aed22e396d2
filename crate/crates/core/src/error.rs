use thiserror::Error;

/// Errors raised by complex construction and the invariant computations.
///
/// Every message starts with the variant name so that command-line users can
/// match on it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("EmptyComplex: the facet list is empty")]
    EmptyComplex,
    #[error("NonPure: facet {facet} has {found} vertices, expected {expected}")]
    NonPure {
        facet: usize,
        expected: usize,
        found: usize,
    },
    #[error("RepeatedColorInFacet: facet {facet} repeats color {color}")]
    RepeatedColorInFacet { facet: usize, color: usize },
    #[error("DuplicateFacet: facet {facet} duplicates facet {first}")]
    DuplicateFacet { facet: usize, first: usize },
    #[error("DanglingLabel: vertex label {0:?} has no color")]
    DanglingLabel(String),
    #[error("RepeatedVertexInFacet: facet {facet} lists vertex {label:?} twice")]
    RepeatedVertexInFacet { facet: usize, label: String },
    #[error("ColorOutOfRange: color {color} is outside 0..={max}")]
    ColorOutOfRange { color: i64, max: usize },
    #[error("DimensionTooLarge: dimension {0} exceeds the supported maximum of 30")]
    DimensionTooLarge(usize),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("FaceNotPresent: {0}")]
    FaceNotPresent(String),
    #[error("InvalidHandle: facet handle {handle} out of range (complex has {facets} facets)")]
    InvalidHandle { handle: usize, facets: usize },
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("BadArity: expected a color set of size {expected}, got {found}")]
    BadArity { expected: usize, found: usize },
    #[error("BadColors: {0}")]
    BadColors(String),
    #[error("UnsupportedDimension: {0}")]
    UnsupportedDimension(String),
    #[error("DimensionTooLow: dimension {found} is below the required minimum {min}")]
    DimensionTooLow { found: usize, min: usize },
    #[error("DehnSommervilleViolated: {0}")]
    DehnSommervilleViolated(String),
    #[error("Disconnected: {0}")]
    Disconnected(String),
    #[error("InvalidNecklace: {0}")]
    InvalidNecklace(String),
    #[error("CrossCheckFailed: {0}")]
    CrossCheckFailed(String),
    #[error("ParseError: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input point set")]
    EmptyInput,
    #[error("ambient dimension must be 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("negative scale factor")]
    NegativeScale,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("duplicate interpolation nodes")]
    DuplicateNodes,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("index arguments out of order or out of range")]
    IndexOrder,
    #[error("sequence entries must be positive for this check")]
    NonPositiveEntry,
    #[error("quermassintegral values must be non-negative")]
    NegativeEntry,
    #[error("zeros of a quermassintegral sequence must form a prefix")]
    InvalidZeroPattern,
    #[error("ambient dimension too small for this check")]
    DimensionTooSmall,
    #[error("relative body E must be full-dimensional")]
    LowDimensionalE,
    #[error("unknown preset: {0}")]
    UnknownPreset(String),
    #[error("random generation kept producing degenerate bodies")]
    DegenerateGeneration,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

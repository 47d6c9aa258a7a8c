use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} outside 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} not supported: {reason}")]
    UnsupportedDimension { dim: usize, reason: &'static str },

    #[error("tensor violates curvature symmetries (max residual {residual:e})")]
    SymmetryViolation { residual: f64 },

    #[error("matrix is not orthogonal (max deviation {deviation:e})")]
    NotOrthogonal { deviation: f64 },

    #[error("ratio Q/|W|^3 undefined at norm {norm:e}")]
    UndefinedRatio { norm: f64 },

    #[error("nullspace has dimension {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("no Einstein product metric: {0}")]
    NoEinsteinMetric(String),

    #[error("fixture assigns two values to component {0:?}")]
    FixtureConflict([usize; 4]),

    #[error("catalog entry {0:?} has no curvature construction")]
    NotConstructible(String),

    #[error("Weyl tensor vanishes (|W|^2 = {weyl_norm_sq:e}); the bound does not apply to conformally flat metrics")]
    ConformallyFlat { weyl_norm_sq: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

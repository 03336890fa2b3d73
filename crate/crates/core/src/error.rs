//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error(
        "matrix is not Hermitian: defect {defect:.3e} at entry ({row},{col}) exceeds 1e-8"
    )]
    NotHermitian { defect: f64, row: usize, col: usize },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("eigendecomposition did not converge (dim {dim}, max |entry| {max_abs:.3e})")]
    EigenFailure { dim: usize, max_abs: f64 },

    #[error("eigenvalue {value} lies outside the domain {interval} of `{function}`")]
    DomainViolation {
        function: String,
        value: f64,
        interval: String,
    },

    #[error("operator is not strictly positive: minimum eigenvalue {min_eig:.6e} < {required:.3e}")]
    NotStrictlyPositive { min_eig: f64, required: f64 },

    #[error("unknown builtin function `{0}`")]
    UnknownFunction(String),

    #[error("invalid function `{name}`: {reason}")]
    InvalidFunction { name: String, reason: String },

    #[error("convexity self-check failed for `{name}`: {detail}")]
    ConvexityCheck { name: String, detail: String },

    #[error("map family is not unital: defect {defect:.3e} exceeds tolerance {tol:.1e}")]
    NotUnital { defect: f64, tol: f64 },

    #[error("family has {maps} maps but {operators} operators")]
    FamilySizeMismatch { maps: usize, operators: usize },

    #[error("invalid positive map: {0}")]
    InvalidMap(String),

    #[error("sphere objective became non-finite (iterate norm {norm:.3e})")]
    NonFiniteObjective { norm: f64 },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("interval endpoints out of order: [{lo}, {hi}]")]
    EmptyInterval { lo: f64, hi: f64 },

    #[error("validation error in {locus}: {message}")]
    Validation { locus: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Validation error helper used by the instance loader.
    pub fn validation(locus: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            locus: locus.into(),
            message: message.into(),
        }
    }
}

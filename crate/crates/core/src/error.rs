use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("solver inconsistency: {0}")]
    SolverInconsistency(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("zero eigenspace meets p in dimension {0}, expected 1")]
    NotRankOne(usize),
    #[error("grading violated: {0}")]
    GradingViolation(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("no admissible pair of subspaces: {0}")]
    HypothesisUnsatisfiable(String),
    #[error("no admissible null basepoint: {0}")]
    BadBasepoint(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

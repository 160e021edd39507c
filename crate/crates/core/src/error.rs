use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid contraction ratio: {0}")]
    InvalidRatio(String),
    #[error("degenerate box {0}")]
    DegenerateBox(String),
    #[error("alpha {0} is outside (0, 1]")]
    AlphaOutOfRange(String),
    #[error("region is empty")]
    EmptyRegion,
    #[error("system is not equicontractive")]
    NotEquicontractive,
    #[error("technical assumption violated: {0}")]
    TechnicalAssumption(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime (need a prime below 2^31)")]
    NotPrime(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("algebra is not finite dimensional at nilbound {0}: raise the bound or check admissibility")]
    NotFiniteDimensional(usize),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("field F_{p} too small for an algebra of dimension {dim} (need p > dim)")]
    FieldTooSmall { p: u32, dim: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("cutoff {0} reached before the answer was certified")]
    CutoffReached(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

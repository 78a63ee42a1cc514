use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("incompatible radicands: sqrt({0}) and sqrt({1}) cannot be combined")]
    IncompatibleRadicands(u64, u64),

    #[error("cannot parse scalar {0:?}: {1}")]
    ScalarParse(String, String),

    #[error("matrix entries do not share a compatible field: {0}")]
    MixedField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric (entries ({0},{1}) and ({1},{0}) differ)")]
    NotSymmetric(usize, usize),

    #[error("matrix is not positive semidefinite: {0}")]
    NotPsd(String),

    #[error("diagonal pivoting stalled: zero diagonal with a nonzero remaining row")]
    FactorizationStalled,

    #[error("invalid strongly regular graph parameters: {0}")]
    InvalidParams(String),

    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(String),

    #[error("graph has {0} vertices; at most {1} are supported")]
    TooManyVertices(usize, usize),

    #[error("graph is disconnected (r1 = k, mu = 0): spherical embedding is undefined")]
    ImprimitiveGraph,

    #[error("point ({0}, {1}) lies outside the feasible region")]
    OutsideFeasibleRegion(String, String),

    #[error("invalid embedding weights: {0}")]
    InvalidWeights(String),

    #[error("Gram matrix does not have a unit diagonal (entry {0})")]
    NotUnitDiagonal(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("polynomial degree {0} exceeds the supported maximum of 3")]
    DegreeOverflow(u32),

    #[error("unsupported minor size {0}")]
    MinorSize(usize),

    #[error("mixing homogeneous polynomials of degrees {0} and {1}")]
    DegreeMismatch(u32, u32),

    #[error("Jacobi identity fails on ({x}, {y}, {z}) with defect {defect}")]
    Jacobi {
        x: String,
        y: String,
        z: String,
        defect: String,
    },

    #[error("form is not invariant on ({x}, {y}, {z}): <[{x},{y}],{z}> + <{y},[{x},{z}]> = {residual} (with [{x},{y}] = {bracket})")]
    Invariance {
        x: String,
        y: String,
        z: String,
        bracket: String,
        residual: String,
    },

    #[error("bilinear form is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },

    #[error("invalid structure table: {0}")]
    Table(String),

    #[error("matrix commutator leaves the span: {0}")]
    Closure(String),

    #[error("expected a solution space of dimension 1, found {0}")]
    NotUnique(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank-two non-existence violated: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;

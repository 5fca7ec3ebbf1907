use thiserror::Error;

use crate::poly::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("variable `{name}` at position {position} belongs to the {found} side, expected {expected}")]
    WrongSide {
        name: String,
        position: usize,
        found: Side,
        expected: Side,
    },

    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("expected a polynomial on the {expected} side, got {found}")]
    SideMismatch { expected: Side, found: Side },

    #[error("point has {got} coordinates, context has {expected} variables")]
    PointLength { expected: usize, got: usize },

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("the zero polynomial has no apolar algebra")]
    ZeroPolynomial,

    #[error("degree {degree} is outside the admissible range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("linear form annihilates the dual generator")]
    Annihilates,

    #[error("matrix of size {size} exceeds the symbolic determinant guard {guard}")]
    SizeGuard { size: usize, guard: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("partitions have different totals ({left} vs {right})")]
    UnequalTotals { left: usize, right: usize },

    #[error("polynomials p_i are linearly dependent")]
    LinearlyDependent,

    #[error("polynomials p_i are algebraically independent (Jacobian has full rank)")]
    AlgebraicallyIndependent,

    #[error("invalid Perazzo data: {0}")]
    InvalidPerazzo(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sampler gave up after {0} attempts")]
    RetriesExhausted(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact computations for standard graded Artinian Gorenstein algebras given by
//! a Macaulay dual generator.
//!
//! The ground field is the rationals. All ranks, determinants and kernels are
//! exact; randomness enters only through explicitly seeded samplers used to
//! pick "general" linear forms and random Perazzo forms.
//!
//! Module map:
//! - [`poly`]: sparse polynomials, the differentiation action, text format
//! - [`linalg`]: fraction-free ranks and determinants, echelon bases
//! - [`apolarity`]: catalecticants, Hilbert functions, bases of `A_F`, multiplication maps
//! - [`hessians`]: higher Hessian matrices and the strong Lefschetz criterion
//! - [`jordan`]: weak/strong Lefschetz tests, Jordan types, pre-Jordan strings, partitions
//! - [`perazzo`]: Perazzo forms, normal forms, samplers and block-matrix rank bounds
//! - [`combinatorics`]: Macaulay/Green bounds and h-vector predicates

pub mod apolarity;
pub mod combinatorics;
pub mod error;
pub mod hessians;
pub mod jordan;
pub mod linalg;
pub mod perazzo;
pub mod poly;
pub mod sampling;

pub use error::{Error, Result};

/// Exact rational scalar; always in lowest terms with a positive denominator.
pub type Scalar = num_rational::BigRational;

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

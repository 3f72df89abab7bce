//! Exact rational linear algebra: dense matrices, canonical subspaces,
//! affine solving, and simultaneous diagonalization of commuting families.
//!
//! Subspaces are kept in reduced row-echelon form, so two subspaces are
//! equal as sets exactly when their representations are equal as values.

mod eigen;
mod matrix;
mod poly;
mod solve;
mod subspace;

pub use eigen::{simultaneous_eigenspaces, EigenError};
pub use matrix::{rref, Matrix};
pub use solve::{kernel, solve_affine, AffineSolution, BasisSolver};
pub use subspace::Subspace;

pub(crate) use matrix::rref_with_transform;
pub(crate) use subspace::complement_within;

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `num/den`, reduced. `den` must be nonzero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shape errors for the subspace lattice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector length {got} does not match ambient dimension {expected}")]
    VectorLength { expected: usize, got: usize },
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    let mut acc = rat(0);
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

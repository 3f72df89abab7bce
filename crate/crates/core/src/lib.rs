//! Exact-arithmetic computational Lie theory.
//!
//! The crate provides structure-constant Lie algebras over the rationals,
//! weight space decompositions with respect to split toral subalgebras,
//! sl2-triple and splitting-element machinery, and an abstract engine for
//! (finite truncations of) locally finite root systems.
//!
//! Every quantity is an arbitrary-precision rational; no floating point
//! appears anywhere, so every equality test in the crate is exact.

pub mod admissible;
pub mod roots;
pub mod lie;
pub mod linalg;
pub mod toral;

pub use lie::{Element, LieAlgebra};
pub use linalg::{frac, rat, Matrix, Rational, Subspace};
pub use toral::{ToralSubalgebra, Weight, WeightDecomposition};

//! Exact arithmetic in GF(p) and dense linear algebra over it.

mod field;
mod matrix;
mod span;
mod subspace;

pub use field::{PrimeField, Residue, MAX_MODULUS};
pub use matrix::{Matrix, Rref};
pub use span::SpanBuilder;
pub use subspace::Subspace;

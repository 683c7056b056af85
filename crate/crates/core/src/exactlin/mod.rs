//! Exact linear algebra over prime fields: the field itself, dense matrices
//! with deterministic Gaussian elimination, and the polynomial arithmetic used
//! to split endomorphisms.

mod field;
mod matrix;
mod poly;

pub use field::PrimeField;
pub use matrix::{Matrix, Rref};
pub use poly::Poly;

//! Exact field arithmetic and dense matrix rank/kernel computations.

mod echelon;
mod field;
mod matrix;

pub use echelon::EchelonBasis;
pub(crate) use field::coefficient_prefix;
pub use field::{FieldElement, FieldSpec, DEFAULT_PRIME, MAX_MODULUS};
pub(crate) use matrix::row_reduce;
pub use matrix::{rank_of_vectors, Matrix, Rref};

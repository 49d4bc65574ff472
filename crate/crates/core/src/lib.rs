//! Exact graded Artinian algebras presented by a Macaulay dual generator or by
//! homogeneous ideal generators.
//!
//! The crate computes Hilbert functions, annihilators, multiplication maps by
//! linear forms and their Jordan types and Jordan degree types, and evaluates
//! the closed-form Jordan types of linear forms in full Perazzo algebras.

pub mod apolar;
pub mod cli;
pub mod error;
pub mod jordan;
pub mod linalg;
pub mod perazzo;
pub mod poly;

pub use error::{Error, Result};

//! Catalecticants, Hilbert functions and coordinate models of graded Artinian algebras.

mod catalecticant;
mod hvector;
mod model;

pub use catalecticant::{annihilator_basis, catalecticant, hilbert_function, AnnBasis};
pub use hvector::{binomial, compressed_hf, hf_stats, HVector, HfStats};
pub use model::{GradedAlgebraModel, ModelSource};

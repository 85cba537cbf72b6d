//! The homomorphisms φ̃± from the FRT algebra into the extended quantum
//! Euclidean space, their glued form for odd N, and the decoupling maps
//! ζ̃±(g) = g₍₁₎ φ̃(S g₍₂₎) into the cross product.

mod gamma;
mod gluing;
mod hopf;
mod maps;

pub use gamma::{gamma_default, gamma_indices, GammaConfig};
pub use gluing::{solve_gluing, solve_gluing_from};
pub use hopf::{Hopf, Tensor};
pub use maps::{mu, phi_entry, Maps, Which};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecouplingError {
    #[error(transparent)]
    Presentation(#[from] presentations::PresentationError),
    #[error(transparent)]
    Engine(#[from] ncengine::EngineError),
    #[error(transparent)]
    RMatrix(#[from] rmatrix::RMatrixError),
    #[error(transparent)]
    Scalar(#[from] scalars::ScalarError),
    #[error("invalid gamma: {0}")]
    Gamma(String),
    #[error("{0}")]
    Index(String),
    #[error("gluing unavailable for even N")]
    EvenGluing,
    #[error("gluing failed: {0}")]
    Gluing(String),
}

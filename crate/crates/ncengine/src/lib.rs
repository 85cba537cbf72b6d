//! Noncommutative polynomials over a coefficient field and their normal
//! ordering with respect to a presentation: ordered generators plus
//! two-letter rewrite rules, with root relations applied only when
//! testing for zero.

mod poly;
mod presentation;
mod registry;
mod text;
pub mod word;

pub use poly::NcPoly;
pub use presentation::{Algebra, Mismatch, OverlapReport, Presentation, RootRule};
pub use registry::{Generator, Kind, Registry};
pub use text::PolyGrammar;
pub use word::{Letter, Word};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("degree cap {cap} exceeded by {word}; raise --degree-cap")]
    DegreeCap { word: String, cap: usize },
    #[error("rewriting does not terminate near {0}")]
    NonTerminating(String),
    #[error(transparent)]
    Parse(#[from] scalars::ParseError),
    #[error(transparent)]
    Scalar(#[from] scalars::ScalarError),
    #[error("{0}")]
    UnknownGenerator(String),
    #[error("malformed presentation json: {0}")]
    Json(String),
}

//! Sparse exact matrices whose rows and columns are labelled by tuples of
//! vector indices, plus a small exact row reducer.
//!
//! A matrix acting on V⊗V has pair labels (i,j); flattening is
//! lexicographic in the labels, so sorted storage is sorted by label.

mod echelon;
mod index;
mod sparse;

pub use echelon::{rank, Echelon};
pub use index::{Axis, IndexSet};
pub use sparse::{MatOp, SparseMat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left} vs {right}")]
    ShapeMismatch { op: &'static str, left: String, right: String },
    #[error("entry at row {row:?}, col {col:?}: {source}")]
    Entry { row: Vec<i32>, col: Vec<i32>, source: scalars::ScalarError },
    #[error("index set needs N >= 1, got {0}")]
    BadDimension(usize),
    #[error("label {0:?} not in index set")]
    BadLabel(Vec<i32>),
    #[error("malformed matrix json: {0}")]
    Json(String),
}

//! Concrete presentations for a given N: the extended quantum Euclidean
//! space A, the FRT algebra H of U_q so(N), and the cross product A⋊H.

mod cross;
mod euclidean;
mod frt;
pub mod raw;

pub use cross::{cross_presentation, ScalingAction};
pub use euclidean::euclidean_presentation;
pub use frt::frt_presentation;
pub use raw::{cartan_relations, frt_relations, mixed_relations, Entry, RawRelation};

use ncengine::{EngineError, NcPoly, Presentation};
use rmatrix::RMatrixBundle;
use scalars::Coeff;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    RMatrix(#[from] rmatrix::RMatrixError),
    #[error(transparent)]
    Linalg(#[from] exactlinalg::LinalgError),
    #[error(transparent)]
    Scalar(#[from] scalars::ScalarError),
    #[error("{0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn base(self) -> &'static str {
        match self {
            Sign::Minus => "L-",
            Sign::Plus => "L+",
        }
    }

    pub fn from_base(s: &str) -> Option<Sign> {
        match s {
            "L-" => Some(Sign::Minus),
            "L+" => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// ρ^j_h(L±^i_k): R̂^{ij}_{hk} for L⁺ and (R̂⁻¹)^{ij}_{hk} for L⁻.
pub fn rho<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign, i: i32, k: i32, j: i32, h: i32) -> C {
    match sign {
        Sign::Plus => b.r(i, j, h, k),
        Sign::Minus => b.r_inv(i, j, h, k),
    }
}

/// Entries (i,k) whose vector representation is not identically zero.
pub fn support<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign) -> Vec<(i32, i32)> {
    let idx = b.weights.indices();
    let mut out = Vec::new();
    for &i in &idx {
        for &k in &idx {
            if idx.iter().any(|&j| idx.iter().any(|&h| !rho(b, sign, i, k, j, h).is_zero())) {
                out.push((i, k));
            }
        }
    }
    out
}

/// L±^i_j in a presentation containing the FRT generators: a generator,
/// an alias, or zero outside the support.
pub fn entry<C: Coeff>(p: &Presentation<C>, sign: Sign, i: i32, j: i32) -> NcPoly<C> {
    p.named(sign.base(), &[i, j]).unwrap_or_default()
}

/// The raw matrix entry carried by an FRT letter: generator L±^i_j, or
/// for an inverse Cartan letter (L⁻^a_a)⁻¹ = L⁻^{−a}_{−a}.
pub fn letter_entry<C: Coeff>(p: &Presentation<C>, l: ncengine::Letter) -> Option<Entry> {
    let g = p.registry.get(ncengine::word::gen_of(l));
    let sign = Sign::from_base(&g.base)?;
    let (i, j) = (g.indices[0], g.indices[1]);
    if ncengine::word::is_inverse(l) {
        debug_assert!(i == j);
        Some(Entry { sign, i: -i, j: -j })
    } else {
        Some(Entry { sign, i, j })
    }
}

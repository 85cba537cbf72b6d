//! Exact arithmetic in the field Q(s) of rational functions in s = q^(1/2).
//!
//! `Scalar` is the exact type; `Rat` is what a scalar becomes after
//! evaluation at a rational sample point. Both implement [`Coeff`], so the
//! rest of the workspace can run the same computation exactly or at samples.

mod coeff;
pub mod parse;
mod scalar;
pub mod zpoly;

pub use coeff::{Coeff, Rat};
pub use parse::{parse_with, Grammar, ParseError};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("{0} has no square root in Q(s)")]
    NoSquareRoot(String),
}

/// ω = q^r + q^(-r) for a half-integer weight r = r2/2.
pub fn omega(r2: i32) -> Scalar {
    Scalar::s_pow(r2) + &Scalar::s_pow(-r2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field operation; only division can fail.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: Op) -> Result<Scalar, ScalarError> {
    match op {
        Op::Add => Ok(a.clone() + b),
        Op::Sub => Ok(a.clone() - b),
        Op::Mul => Ok(a.clone() * b),
        Op::Div => a.div(b),
    }
}

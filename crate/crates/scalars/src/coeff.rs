//! Coefficient fields used by the engine: exact `Scalar` and its
//! specialization `Rat` at a rational point s = s0.

use crate::{Scalar, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to map an exact scalar into this field.
    type Ctx: Clone + fmt::Debug + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn embed(s: &Scalar, ctx: &Self::Ctx) -> Result<Self, ScalarError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self;
}

impl Coeff for Scalar {
    type Ctx = ();
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        Scalar::inv(self)
    }
    fn embed(s: &Scalar, _: &()) -> Result<Self, ScalarError> {
        Ok(s.clone())
    }
    fn from_int(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// A rational number: the value of a scalar at a fixed sample point.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(n: i64, d: i64) -> Self {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add<&Rat> for Rat {
    type Output = Rat;
    fn add(self, o: &Rat) -> Rat {
        Rat(self.0 + &o.0)
    }
}

impl Sub<&Rat> for Rat {
    type Output = Rat;
    fn sub(self, o: &Rat) -> Rat {
        Rat(self.0 - &o.0)
    }
}

impl Mul<&Rat> for Rat {
    type Output = Rat;
    fn mul(self, o: &Rat) -> Rat {
        Rat(self.0 * &o.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Coeff for Rat {
    /// The sample point s0.
    type Ctx = BigRational;
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }
    fn embed(s: &Scalar, s0: &BigRational) -> Result<Self, ScalarError> {
        s.eval(s0).map(Rat)
    }
    fn from_int(n: i64) -> Self {
        Rat::new(n, 1)
    }
}

use crate::zpoly::{self, ZPoly};
use crate::ScalarError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Q(s), s = q^(1/2).
///
/// Stored as `c * s^e * num(s) / den(s)` where `num` and `den` are primitive
/// integer polynomials with positive leading coefficient, nonzero constant
/// term and no common factor. Zero is `c = 0` with trivial polynomials.
/// This form is unique, so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    c: BigRational,
    e: i32,
    num: ZPoly,
    den: ZPoly,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: BigRational::zero(), e: 0, num: zpoly::one(), den: zpoly::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar { c, e: 0, num: zpoly::one(), den: zpoly::one() }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// s^k = q^(k/2).
    pub fn s_pow(k: i32) -> Self {
        Scalar { c: BigRational::one(), e: k, num: zpoly::one(), den: zpoly::one() }
    }

    /// q^k for integer k.
    pub fn q_pow(k: i32) -> Self {
        Self::s_pow(2 * k)
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn q() -> Self {
        Self::s_pow(2)
    }

    /// h = q^(1/2) - q^(-1/2).
    pub fn h() -> Self {
        Self::s() - Self::s_pow(-1)
    }

    /// k = q - q^(-1).
    pub fn k() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// Builds `c * s^e * num / den` from arbitrary nonzero integer polynomials.
    fn make(mut c: BigRational, mut e: i32, num: ZPoly, den: ZPoly) -> Self {
        if c.is_zero() || num.is_empty() {
            return Self::zero();
        }
        assert!(!den.is_empty(), "zero denominator");
        let vn = zpoly::valuation(&num);
        let vd = zpoly::valuation(&den);
        e += vn as i32 - vd as i32;
        let num = num[vn..].to_vec();
        let den = den[vd..].to_vec();
        let (cn, mut pn) = zpoly::primitive(&num);
        let (cd, mut pd) = zpoly::primitive(&den);
        c *= BigRational::new(cn, cd);
        if !zpoly::is_one(&pd) && !zpoly::is_one(&pn) {
            let g = zpoly::gcd(&pn, &pd);
            if !zpoly::is_one(&g) {
                pn = zpoly::div_exact(&pn, &g);
                pd = zpoly::div_exact(&pd, &g);
            }
        }
        Scalar { c, e, num: pn, den: pd }
    }

    /// Builds `num / den` from rational coefficient lists in ascending powers of s.
    pub fn from_q_polys(num: &[BigRational], den: &[BigRational]) -> Result<Self, ScalarError> {
        let (cn, zn) = to_zpoly(num);
        let (cd, zd) = to_zpoly(den);
        if zd.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        if zn.is_empty() {
            return Ok(Self::zero());
        }
        Ok(Self::make(cn / cd, 0, zn, zd))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c.is_one() && self.e == 0 && zpoly::is_one(&self.num) && zpoly::is_one(&self.den)
    }

    /// True when the value is a rational number times a power of s.
    pub fn is_monomial(&self) -> bool {
        zpoly::is_one(&self.num) && zpoly::is_one(&self.den)
    }

    /// Rational value if the scalar is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.e == 0 && self.is_monomial()).then(|| self.c.clone())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar { c: self.c.recip(), e: -self.e, num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, other: &Scalar) -> Result<Self, ScalarError> {
        Ok(self.clone() * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self;
        }
        Ok(acc)
    }

    /// Square root of a monomial `c s^e` with `c` a rational square and `e` even.
    pub fn sqrt_monomial(&self) -> Result<Self, ScalarError> {
        let err = || ScalarError::NoSquareRoot(self.to_string());
        if !self.is_monomial() || self.e % 2 != 0 || self.c.is_negative() {
            return Err(err());
        }
        let n = self.c.numer().sqrt();
        let d = self.c.denom().sqrt();
        if &(&n * &n) != self.c.numer() || &(&d * &d) != self.c.denom() {
            return Err(err());
        }
        Ok(Scalar { c: BigRational::new(n, d), e: self.e / 2, num: zpoly::one(), den: zpoly::one() })
    }

    /// Exact value at s = s0.
    pub fn eval(&self, s0: &BigRational) -> Result<BigRational, ScalarError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let d = horner(&self.den, s0);
        if d.is_zero() || (s0.is_zero() && self.e < 0) {
            return Err(ScalarError::Pole(s0.to_string()));
        }
        let n = horner(&self.num, s0);
        Ok(&self.c * rpow(s0, self.e) * n / d)
    }

    /// Canonical numerator and monic denominator over Q, ascending in s.
    pub fn q_polys(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        if self.is_zero() {
            return (Vec::new(), vec![BigRational::one()]);
        }
        let lc = BigRational::from_integer(self.den.last().unwrap().clone());
        let f = &self.c / &lc;
        let mut num: Vec<BigRational> = self.num.iter().map(|x| &f * x).collect();
        let mut den: Vec<BigRational> = self.den.iter().map(|x| BigRational::from_integer(x.clone()) / &lc).collect();
        if self.e >= 0 {
            num = shift_q(num, self.e as usize);
        } else {
            den = shift_q(den, (-self.e) as usize);
        }
        (num, den)
    }
}

fn shift_q(p: Vec<BigRational>, by: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); by];
    out.extend(p);
    out
}

fn horner(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

fn rpow(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Clears denominators: returns (c, p) with `input = c * p`.
fn to_zpoly(p: &[BigRational]) -> (BigRational, ZPoly) {
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(c.denom());
    }
    let mut z: ZPoly = p.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    zpoly::trim(&mut z);
    (BigRational::new(BigInt::one(), l), z)
}

impl Add<&Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, b: &Scalar) -> Scalar {
        if b.is_zero() {
            return self;
        }
        if self.is_zero() {
            return b.clone();
        }
        let a = self;
        let emin = a.e.min(b.e);
        let (an, ad) = (a.c.numer(), a.c.denom());
        let (bn, bd) = (b.c.numer(), b.c.denom());
        if a.den == b.den {
            let t1 = zpoly::shift(&zpoly::scale(&a.num, &(an * bd)), (a.e - emin) as usize);
            let t2 = zpoly::shift(&zpoly::scale(&b.num, &(bn * ad)), (b.e - emin) as usize);
            let num = zpoly::add(&t1, &t2);
            if num.is_empty() {
                return Scalar::zero();
            }
            let c = BigRational::new(BigInt::one(), ad * bd);
            return Scalar::make(c, emin, num, a.den);
        }
        let g = zpoly::gcd(&a.den, &b.den);
        let ad_g = zpoly::div_exact(&a.den, &g);
        let bd_g = zpoly::div_exact(&b.den, &g);
        let t1 = zpoly::shift(&zpoly::scale(&zpoly::mul(&a.num, &bd_g), &(an * bd)), (a.e - emin) as usize);
        let t2 = zpoly::shift(&zpoly::scale(&zpoly::mul(&b.num, &ad_g), &(bn * ad)), (b.e - emin) as usize);
        let num = zpoly::add(&t1, &t2);
        if num.is_empty() {
            return Scalar::zero();
        }
        let den = zpoly::mul(&ad_g, &b.den);
        let c = BigRational::new(BigInt::one(), ad * bd);
        Scalar::make(c, emin, num, den)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, b: Scalar) -> Scalar {
        self + &b
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        self.c = -self.c;
        self
    }
}

impl Sub<&Scalar> for Scalar {
    type Output = Scalar;
    fn sub(self, b: &Scalar) -> Scalar {
        self + &(-b.clone())
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, b: Scalar) -> Scalar {
        self + &(-b)
    }
}

impl Mul<&Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, b: &Scalar) -> Scalar {
        if self.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        let mono = self.is_monomial() && b.is_monomial();
        let c = self.c * &b.c;
        let e = self.e + b.e;
        if mono {
            return Scalar { c, e, num: self.num, den: self.den };
        }
        // Inputs are reduced, so only the cross pairs can share factors.
        let g1 = zpoly::gcd(&self.num, &b.den);
        let g2 = zpoly::gcd(&b.num, &self.den);
        let n1 = zpoly::div_exact(&self.num, &g1);
        let d2 = zpoly::div_exact(&b.den, &g1);
        let n2 = zpoly::div_exact(&b.num, &g2);
        let d1 = zpoly::div_exact(&self.den, &g2);
        Scalar { c, e, num: zpoly::mul(&n1, &n2), den: zpoly::mul(&d1, &d2) }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, b: Scalar) -> Scalar {
        self * &b
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

/// Writes a polynomial in s using the `q` syntax: s^k is `q^(k/2)`.
pub(crate) fn write_q_poly(f: &mut fmt::Formatter<'_>, p: &[BigRational]) -> fmt::Result {
    let mut first = true;
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let mono = q_monomial(k);
        match (a.is_one(), mono) {
            (true, Some(m)) => write!(f, "{m}")?,
            (_, None) => write!(f, "{a}")?,
            (false, Some(m)) => write!(f, "{a}*{m}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn q_monomial(k: usize) -> Option<String> {
    match k {
        0 => None,
        2 => Some("q".into()),
        k if k % 2 == 0 => Some(format!("q^{}", k / 2)),
        k => Some(format!("q^({k}/2)")),
    }
}

fn term_count(p: &[BigRational]) -> usize {
    p.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for Scalar {
    /// Canonical text form: numerator over monic denominator in the `q` syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.q_polys();
        let den_trivial = den.len() == 1;
        if den_trivial {
            return write_q_poly(f, &num);
        }
        if term_count(&num) > 1 {
            write!(f, "(")?;
            write_q_poly(f, &num)?;
            write!(f, ")")?;
        } else {
            write_q_poly(f, &num)?;
        }
        write!(f, "/")?;
        if term_count(&den) > 1 {
            write!(f, "(")?;
            write_q_poly(f, &den)?;
            write!(f, ")")
        } else {
            write_q_poly(f, &den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_products_stay_cheap() {
        let a = Scalar::s_pow(3) * &Scalar::frac(2, 3);
        let b = Scalar::s_pow(-1) * &Scalar::frac(3, 2);
        assert_eq!(a * &b, Scalar::q());
    }

    #[test]
    fn subtraction_to_zero() {
        let h = Scalar::h();
        assert!((h.clone() - &h).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::h().to_string(), "(q - 1)/q^(1/2)");
        assert_eq!(Scalar::q_pow(-1).to_string(), "1/q");
        assert_eq!(Scalar::frac(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::s_pow(3).to_string(), "q^(3/2)");
    }
}

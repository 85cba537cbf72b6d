//! Dense univariate polynomials with integer coefficients.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty vector; otherwise the last coefficient is nonzero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn one() -> ZPoly {
    vec![BigInt::one()]
}

pub fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

/// Number of leading zero coefficients (the power of s dividing `p`).
pub fn valuation(p: &[BigInt]) -> usize {
    p.iter().take_while(|c| c.is_zero()).count()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: ZPoly = long.to_vec();
    for (o, c) in out.iter_mut().zip(short) {
        *o += c;
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], k: &BigInt) -> ZPoly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

pub fn shift(a: &[BigInt], by: usize) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); by];
    out.extend_from_slice(a);
    out
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if is_one(a) {
        return b.to_vec();
    }
    if is_one(b) {
        return a.to_vec();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Gcd of the coefficients, always nonnegative.
pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Splits `p` into a signed content and a primitive part with positive
/// leading coefficient. `p` must be nonzero.
pub fn primitive(p: &[BigInt]) -> (BigInt, ZPoly) {
    let mut c = content(p);
    if p.last().expect("nonzero polynomial").is_negative() {
        c = -c;
    }
    if c.is_one() {
        return (c, p.to_vec());
    }
    let q = p.iter().map(|x| x / &c).collect();
    (c, q)
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let off = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[off + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd with positive leading coefficient, via the primitive
/// remainder sequence. Both inputs nonzero.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if is_one(a) || is_one(b) {
        return one();
    }
    let (_, mut x) = primitive(a);
    let (_, mut y) = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return one();
        }
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r).1 };
    }
    x
}

/// Exact quotient `a / b` when `b` divides `a` over the integers.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if is_one(b) {
        return a.to_vec();
    }
    let mut r: ZPoly = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap();
    if r.len() <= db {
        assert!(r.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let off = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[off + j] -= &qc * y;
        }
        q[off] = qc;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (s-1)(s+2) and (s-1)(s+3)
        let a = mul(&z(&[-1, 1]), &z(&[2, 1]));
        let b = mul(&z(&[-1, 1]), &z(&[3, 1]));
        assert_eq!(gcd(&a, &b), z(&[-1, 1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = z(&[3, 0, -2, 5]);
        let b = z(&[1, 4]);
        assert_eq!(div_exact(&mul(&a, &b), &b), a);
    }

    #[test]
    fn primitive_sign_convention() {
        let (c, p) = primitive(&z(&[4, -6]));
        assert_eq!(c, BigInt::from(-2));
        assert_eq!(p, z(&[-2, 3]));
    }
}

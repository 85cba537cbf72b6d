use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use scalars::{scalar_arith, Op, Scalar, ScalarError};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn p(s: &str) -> Scalar {
    s.parse().unwrap()
}

#[test]
fn common_denominator() {
    let s = Scalar::s();
    let a = Scalar::one().div(&(s.clone() - &Scalar::one())).unwrap();
    let b = Scalar::one().div(&(s.clone() + &Scalar::one())).unwrap();
    let want = (Scalar::from_int(2) * &s).div(&(s.clone() * &s - &Scalar::one())).unwrap();
    assert_eq!(a + &b, want);
}

#[test]
fn gcd_cancellation_on_construction() {
    let s = Scalar::s();
    let x = (s.clone() * &s - &Scalar::one()).div(&(s.clone() - &Scalar::one())).unwrap();
    assert_eq!(x, s + &Scalar::one());
}

#[test]
fn h_times_inverse() {
    let h = Scalar::h();
    assert!((h.clone() * &h.inv().unwrap()).is_one());
    assert_eq!(h, p("(q - 1)/q^(1/2)"));
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(scalar_arith(&Scalar::one(), &Scalar::zero(), Op::Div), Err(ScalarError::DivisionByZero));
}

#[test]
fn evaluation_examples() {
    assert_eq!(Scalar::h().eval(&r(2, 1)).unwrap(), r(3, 2));
    assert_eq!(Scalar::k().eval(&r(2, 1)).unwrap(), r(15, 4));
    assert_eq!(Scalar::q_pow(1 - 3).eval(&r(2, 1)).unwrap(), r(1, 16));
}

#[test]
fn pole_is_reported() {
    let x = Scalar::one().div(&(Scalar::s() - &Scalar::one())).unwrap();
    assert!(matches!(x.eval(&r(1, 1)), Err(ScalarError::Pole(_))));
}

#[test]
fn text_round_trip_of_constants() {
    for x in [Scalar::h(), Scalar::k(), Scalar::k().inv().unwrap(), scalars::omega(3), Scalar::frac(-7, 3)] {
        assert_eq!(p(&x.to_string()), x);
    }
}

#[test]
fn serialized_denominator_is_monic() {
    let x = p("(2*q + 4)/(6*q^2 - 2)");
    let (_, den) = x.q_polys();
    assert_eq!(den.last().unwrap(), &r(1, 1));
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    let poly = prop::collection::vec(-4i64..5, 1..4);
    (poly.clone(), poly, -3i32..4).prop_map(|(n, d, e)| {
        let n: Vec<BigRational> = n.into_iter().map(|c| r(c, 1)).collect();
        let mut d: Vec<BigRational> = d.into_iter().map(|c| r(c, 1)).collect();
        if d.iter().all(|c| c == &r(0, 1)) {
            d = vec![r(1, 1)];
        }
        Scalar::from_q_polys(&n, &d).unwrap() * &Scalar::s_pow(e)
    })
}

/// Sample points where the random denominators above cannot vanish are
/// not guaranteed, so evaluation failures are skipped.
fn sample() -> BigRational {
    r(17, 11)
}

proptest! {
    #[test]
    fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert!((a.clone() - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in small_scalar(), b in small_scalar()) {
        let s0 = sample();
        if let (Ok(x), Ok(y)) = (a.eval(&s0), b.eval(&s0)) {
            prop_assert_eq!((a.clone() * &b).eval(&s0).unwrap(), &x * &y);
            prop_assert_eq!((a.clone() + &b).eval(&s0).unwrap(), x + y);
        }
    }

    #[test]
    fn canonical_text_round_trips(a in small_scalar()) {
        let again: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(again.to_string(), a.to_string());
        prop_assert_eq!(again, a);
    }
}

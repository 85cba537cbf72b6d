use exactlinalg::{Axis, SparseMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use scalars::{Rat, Scalar};

fn ax(n: usize) -> Axis {
    Axis::vector(n).unwrap()
}

fn from_ints(n: usize, vals: &[i64], spow: i32) -> SparseMat<Scalar> {
    let a = ax(n);
    let mut m = SparseMat::zeros(a.clone(), a.clone());
    for (k, &v) in vals.iter().enumerate() {
        let (r, c) = (a.label(k / n), a.label(k % n));
        let x = Scalar::from_int(v) * &Scalar::s_pow(spow * (k as i32 % 3 - 1));
        m.set(&r, &c, x).unwrap();
    }
    m
}

#[test]
fn identity_kron_identity() {
    let i = SparseMat::<Scalar>::identity(ax(3));
    let ii = i.kron(&i);
    assert_eq!(ii, SparseMat::identity(Axis::power(3, 2).unwrap()));
}

#[test]
fn matrix_units_kron() {
    let a = SparseMat::<Scalar>::matrix_unit(3, 0, 1).unwrap();
    let b = SparseMat::<Scalar>::matrix_unit(3, 1, 0).unwrap();
    let k = a.kron(&b);
    let e: Vec<_> = k.entries().collect();
    assert_eq!(e.len(), 1);
    assert_eq!(e[0].0, vec![0, 1]);
    assert_eq!(e[0].1, vec![1, 0]);
    assert!(e[0].2.is_one());
}

#[test]
fn eval_diag() {
    let mut m = SparseMat::zeros(ax(3), ax(3));
    m.set(&[-1], &[-1], Scalar::q()).unwrap();
    m.set(&[0], &[0], Scalar::one()).unwrap();
    m.set(&[1], &[1], Scalar::q_pow(-1)).unwrap();
    let e = m.eval(&BigRational::from_integer(BigInt::from(2))).unwrap();
    assert_eq!(e.get(&[-1], &[-1]).unwrap(), Rat::new(4, 1));
    assert_eq!(e.get(&[1], &[1]).unwrap(), Rat::new(1, 4));
    let z = SparseMat::<Scalar>::zeros(ax(4), ax(4));
    assert!(z.eval(&BigRational::from_integer(BigInt::from(2))).unwrap().is_zero());
}

#[test]
fn pole_names_entry() {
    let mut m = SparseMat::zeros(ax(3), ax(3));
    let bad = Scalar::one().div(&(Scalar::s() - Scalar::from_int(2))).unwrap();
    m.set(&[0], &[1], bad).unwrap();
    let e = m.eval(&BigRational::from_integer(BigInt::from(2))).unwrap_err().to_string();
    assert!(e.contains("[0]") && e.contains("[1]"), "{e}");
}

#[test]
fn json_roundtrip() {
    let m = from_ints(3, &[1, 0, 2, 0, -3, 0, 4, 5, 0], 1).kron(&SparseMat::identity(ax(3)));
    let j = m.to_json();
    let back = SparseMat::from_json(&j, 3).unwrap();
    assert_eq!(back, m);
    assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), serde_json::to_string(&j).unwrap());
}

fn mat3() -> impl Strategy<Value = SparseMat<Scalar>> {
    (prop::collection::vec(-3i64..4, 9), 0i32..2).prop_map(|(v, p)| from_ints(3, &v, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mixed_product(a in mat3(), b in mat3(), c in mat3(), d in mat3()) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_associative(a in mat3(), b in mat3(), c in mat3()) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn eval_commutes_with_mul(a in mat3(), b in mat3(), num in 5i64..20) {
        let s0 = BigRational::new(BigInt::from(num), BigInt::from(4));
        let lhs = a.mul(&b).unwrap().eval(&s0).unwrap();
        let rhs = a.eval(&s0).unwrap().mul(&b.eval(&s0).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

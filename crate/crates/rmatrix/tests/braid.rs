use num_bigint::BigInt;
use num_rational::BigRational;
use rmatrix::{build_metric, build_rhat, RMatrixBundle, WeightData};
use scalars::{Rat, Scalar};

fn half(k: i64) -> BigRational {
    BigRational::new(BigInt::from(k), BigInt::from(2))
}

#[test]
fn weight_tuples() {
    let w = WeightData::new(3).unwrap();
    assert_eq!([w.rho(-1), w.rho(0), w.rho(1)], [half(1), half(0), half(-1)]);
    let w = WeightData::new(4).unwrap();
    assert_eq!([w.rho2(-2), w.rho2(-1), w.rho2(1), w.rho2(2)], [2, 0, 0, -2]);
    let w = WeightData::new(5).unwrap();
    assert_eq!(w.indices().iter().map(|&i| w.rho2(i)).collect::<Vec<_>>(), vec![3, 1, 0, -1, -3]);
    assert!(WeightData::new(2).is_err());
}

#[test]
fn metric_entries() {
    let g = build_metric(3).unwrap();
    assert!(g.get(&[0], &[0]).unwrap().is_one());
    assert_eq!(g.get(&[-1], &[1]).unwrap(), Scalar::s_pow(-1));
    for n in 3..=6 {
        let g = build_metric(n).unwrap();
        for i in WeightData::new(n).unwrap().indices() {
            assert!((g.get(&[i], &[-i]).unwrap() * &g.get(&[-i], &[i]).unwrap()).is_one());
        }
    }
}

#[test]
fn rhat_entries() {
    let r = build_rhat(3).unwrap();
    assert_eq!(r.get(&[1, 1], &[1, 1]).unwrap(), Scalar::q());
    assert!(r.get(&[0, 0], &[0, 0]).unwrap().is_one());
    assert_eq!(r.get(&[1, -1], &[-1, 1]).unwrap(), Scalar::q_pow(-1));
}

fn all_pass(b: &RMatrixBundle<impl scalars::Coeff>, ybe: bool) {
    let mut checks = vec![b.check_characteristic(), b.check_spectral(), b.check_inverse()];
    checks.extend(b.check_projectors());
    checks.extend(b.check_metric());
    if ybe {
        checks.push(b.check_ybe());
    }
    for c in checks {
        assert!(c.passed, "N={} {}: {:?}", b.dim(), c.id, c.witness);
    }
}

#[test]
fn exact_suites_n3_n4() {
    for n in [3, 4] {
        all_pass(&RMatrixBundle::new(n).unwrap(), true);
    }
}

#[test]
fn traces_are_classical_dimensions() {
    let b = RMatrixBundle::new(3).unwrap();
    let t: Vec<Scalar> = [&b.pa, &b.ps, &b.pt].iter().map(|p| p.trace().unwrap()).collect();
    assert_eq!(t, vec![Scalar::from_int(3), Scalar::from_int(5), Scalar::one()]);
    let b = RMatrixBundle::new(4).unwrap();
    let t: Vec<Scalar> = [&b.pa, &b.ps, &b.pt].iter().map(|p| p.trace().unwrap()).collect();
    assert_eq!(t, vec![Scalar::from_int(6), Scalar::from_int(9), Scalar::one()]);
}

#[test]
fn metric_exact_n5() {
    let b = RMatrixBundle::new(5).unwrap();
    for c in b.check_metric() {
        assert!(c.passed, "{}: {:?}", c.id, c.witness);
    }
}

#[test]
fn eval_suite_n5() {
    let b = RMatrixBundle::new(5).unwrap();
    for k in [5, 7] {
        let s0 = BigRational::new(BigInt::from(k), BigInt::from(4));
        all_pass(&b.eval(&s0).unwrap(), true);
    }
}

#[test]
fn inverse_spectrum_and_eval() {
    let b = RMatrixBundle::new(3).unwrap();
    let inv = &b.rhat_inv;
    let f = |x: Scalar| inv.shift_diag(&x).unwrap();
    let z = f(Scalar::q_pow(-1)).mul(&f(-Scalar::q())).unwrap().mul(&f(Scalar::q_pow(2))).unwrap();
    assert!(z.is_zero());
    let e = b.eval(&BigRational::from_integer(BigInt::from(2))).unwrap();
    let id = e.rhat.mul(&e.rhat_inv).unwrap();
    assert_eq!(id, exactlinalg::SparseMat::<Rat>::identity(id.rows().clone()));
}

#[test]
fn broken_matrix_fails_with_witness() {
    let mut b = RMatrixBundle::new(3).unwrap();
    b.rhat.set(&[1, 1], &[1, 1], Scalar::q_pow(2)).unwrap();
    let c = b.check_ybe();
    assert!(!c.passed && c.witness.is_some());
}

use ncengine::word::{inverse, letter};
use ncengine::{Algebra, EngineError, Generator, Kind, NcPoly, Presentation, Registry, RootRule, Word};
use num_rational::BigRational;
use proptest::prelude::*;
use scalars::{Rat, Scalar};

/// Quantum plane p[-1]·p[1] = q·p[1]·p[-1] written with p[-1] < p[1], plus an
/// invertible scaling element X with X p[±1] = q^{±1/2} p[±1] X and X² = p[-1]p[1].
fn toy() -> Presentation<Scalar> {
    let reg = Registry::new(vec![
        Generator::new("sqrtP", &[1], Kind::Scaling, true),
        Generator::new("p", &[-1], Kind::Translation, false),
        Generator::new("p", &[1], Kind::Translation, false),
    ]);
    let mut p = Presentation::new(2, Algebra::Euclidean, reg);
    let (x, a, b) = (letter(0, false), letter(1, false), letter(2, false));
    let w = |ls: &[u16]| Word::from_letters(ls);
    p.set_rule(b, a, NcPoly::term(w(&[a, b]), Scalar::q_pow(-1)));
    p.set_rule(a, x, NcPoly::term(w(&[x, a]), Scalar::s()));
    p.set_rule(a, inverse(x), NcPoly::term(w(&[inverse(x), a]), Scalar::s_pow(-1)));
    p.set_rule(b, x, NcPoly::term(w(&[x, b]), Scalar::s_pow(-1)));
    p.set_rule(b, inverse(x), NcPoly::term(w(&[inverse(x), b]), Scalar::s()));
    p.roots.push(RootRule { gen: 0, power: 2, value: NcPoly::word(w(&[a, b])) });
    p.relations.push(("plane".into(), p.parse("p[-1]*p[1] - q*p[1]*p[-1]").unwrap()));
    p
}

#[test]
fn unit_and_bilinearity() {
    let p = toy();
    let x = p.parse("p[1]").unwrap();
    assert_eq!(x.mul(&NcPoly::one()), x);
    let s = p.parse("(p[-1] + p[1])*p[-1]").unwrap();
    assert_eq!(s, p.parse("p[-1]^2 + p[1]*p[-1]").unwrap());
    assert_eq!(s.len(), 2);
}

#[test]
fn inverse_pairs_merge() {
    let p = toy();
    assert_eq!(p.parse("sqrtP[1]^-1*sqrtP[1]").unwrap(), NcPoly::one());
}

#[test]
fn normal_form_reorders_and_is_idempotent() {
    let p = toy();
    let r = p.parse_nf("p[1]*p[-1]").unwrap();
    assert_eq!(p.fmt_poly(&r), "(1/q)*p[-1]*p[1]");
    assert_eq!(p.nf(&r).unwrap(), r);
    assert_eq!(p.fmt_poly(&p.parse_nf("p[1]*p[1]").unwrap()), "p[1]^2");
    for (_, rel) in &p.relations {
        assert!(p.nf(rel).unwrap().is_zero());
    }
}

#[test]
fn scaling_moves_left() {
    let p = toy();
    let r = p.parse_nf("p[-1]*sqrtP[1]^-1*p[1]").unwrap();
    assert_eq!(p.fmt_poly(&r), "(1/q^(1/2))*sqrtP[1]^-1*p[-1]*p[1]");
}

#[test]
fn zero_modulo_roots() {
    let p = toy();
    let e = p.parse("sqrtP[1]^2 - p[-1]*p[1]").unwrap();
    assert!(p.nf(&e).unwrap().len() == 2);
    assert!(p.is_zero_mod(&e).unwrap().is_none());
    // Negative powers are cleared before substitution.
    let e = p.parse("sqrtP[1]^-2*p[-1]*p[1] - 1").unwrap();
    assert!(p.is_zero_mod(&e).unwrap().is_none());
    let w = p.is_zero_mod(&p.parse("sqrtP[1]^2 - p[1]*p[-1]").unwrap()).unwrap();
    assert!(w.is_some());
}

#[test]
fn overlaps_resolve() {
    let p = toy();
    let r = p.check_overlaps(3).unwrap();
    assert!(r.checked > 0);
    assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    assert!(p.missing_rules().is_empty());
    assert!(p.non_normal_rules().is_empty());
}

#[test]
fn broken_rule_shows_in_overlaps() {
    let mut p = toy();
    let (x, b) = (letter(0, false), letter(2, false));
    // Inconsistent with the inverse rule for p[1]·X⁻¹.
    p.set_rule(b, x, NcPoly::term(Word::from_letters(&[x, b]), Scalar::q()));
    assert!(!p.check_overlaps(3).unwrap().mismatches.is_empty());
}

#[test]
fn degree_cap_names_word() {
    let mut p = toy();
    p.degree_cap = 3;
    let err = p.parse_nf("p[1]^4").unwrap_err();
    match err {
        EngineError::DegreeCap { word, cap } => {
            assert_eq!(cap, 3);
            assert!(word.contains("p[1]"));
        }
        e => panic!("{e}"),
    }
}

#[test]
fn parse_errors_have_positions() {
    let p = toy();
    let e = p.parse("p[1] * * p[-1]").unwrap_err().to_string();
    assert!(e.contains("at 7"), "{e}");
    assert!(p.parse("p[7]").is_err());
    assert!(p.parse("p[1]^-1").is_err());
}

#[test]
fn json_roundtrip_is_byte_identical() {
    let p = toy();
    let a = serde_json::to_string_pretty(&p.to_json()).unwrap();
    let back = Presentation::from_json(&serde_json::from_str(&a).unwrap()).unwrap();
    let b = serde_json::to_string_pretty(&back.to_json()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn evaluation_commutes_with_normal_form() {
    let p = toy();
    let s0 = BigRational::new(7.into(), 5.into());
    let ev = p.try_map_coeffs(|c| c.eval(&s0).map(Rat)).unwrap();
    let e = p.parse("p[1]*sqrtP[1]*p[-1]*p[1] + q*p[1]*p[-1]").unwrap();
    let lhs = p.nf(&e).unwrap().try_map_coeffs(|c| c.eval(&s0).map(Rat)).unwrap();
    let rhs = ev.nf(&e.try_map_coeffs(|c| c.eval(&s0).map(Rat)).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

fn atom() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["p[-1]", "p[1]", "sqrtP[1]", "sqrtP[1]^-1", "q", "(q - 1)/q^(1/2)", "3"])
}

fn expr() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::collection::vec(atom(), 1..5), 1..4)
        .prop_map(|ts| ts.iter().map(|t| t.join("*")).collect::<Vec<_>>().join(" - "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_roundtrip(e in expr()) {
        let p = toy();
        let x = p.parse_nf(&e).unwrap();
        let text = p.fmt_poly(&x);
        prop_assert_eq!(p.parse(&text).unwrap(), x);
    }
}

use ncengine::Presentation;
use presentations::{euclidean_presentation, frt_presentation};
use rmatrix::RMatrixBundle;
use scalars::Scalar;

fn bundle(n: usize) -> RMatrixBundle<Scalar> {
    RMatrixBundle::new(n).unwrap()
}

fn relations_vanish(p: &Presentation<Scalar>) {
    for (id, r) in &p.relations {
        let x = p.nf(r).unwrap();
        assert!(x.is_zero(), "{id}: {}", p.fmt_poly(&x));
    }
}

#[test]
fn euclidean_n3_shape() {
    let p = euclidean_presentation(&bundle(3)).unwrap();
    assert_eq!(p.registry.len(), 5);
    assert!(p.missing_rules().is_empty());
    assert_eq!(p.fmt_poly(&p.parse_nf("p[1]*p[1]").unwrap()), "p[1]^2");
    relations_vanish(&p);
}

#[test]
fn frt_builds() {
    for n in [3, 4, 5] {
        let t = std::time::Instant::now();
        let p = frt_presentation(&bundle(n)).unwrap();
        eprintln!("N={n}: {} gens, {} rules, missing {:?}, {:?}", p.registry.len(), p.rule_count(), p.missing_rules().len(), t.elapsed());
        relations_vanish(&p);
    }
}

fn overlaps_clean(p: &Presentation<Scalar>) {
    let rep = p.check_overlaps(3).unwrap();
    assert!(rep.checked > 0);
    assert!(rep.mismatches.is_empty(), "{:?}", &rep.mismatches[..rep.mismatches.len().min(3)]);
}

#[test]
fn overlaps_resolve_at_degree_three() {
    for n in [3, 4] {
        let b = bundle(n);
        overlaps_clean(&euclidean_presentation(&b).unwrap());
        overlaps_clean(&frt_presentation(&b).unwrap());
    }
}

#[test]
fn antisymmetric_rules_have_full_rank() {
    for n in [3, 4, 5] {
        let p = euclidean_presentation(&bundle(n)).unwrap();
        let pp = p
            .rules()
            .filter(|(a, c, _)| p.kind(*a) == ncengine::Kind::Translation && p.kind(*c) == ncengine::Kind::Translation)
            .count();
        assert_eq!(pp, n * (n - 1) / 2);
    }
}

#[test]
fn radius_squared_is_central() {
    for n in [3, 4, 5] {
        let p = euclidean_presentation(&bundle(n)).unwrap();
        let m = (n / 2) as i32;
        let r2 = p.parse_nf(&format!("sqrtP[{m}]^4")).unwrap();
        for l in p.registry.letters() {
            let x = ncengine::NcPoly::letter(l);
            let c = p.commutator(&r2, &x, &Scalar::one()).unwrap();
            assert!(p.is_zero_mod(&c).unwrap().is_none(), "N={n} {}", p.registry.letter_name(l));
        }
    }
}

#[test]
fn square_of_first_radius() {
    let p = euclidean_presentation(&bundle(3)).unwrap();
    let good = p.parse("sqrtP[1]^4 - (q^(-1/2)*p[-1]*p[1] + p[0]^2 + q^(1/2)*p[1]*p[-1])").unwrap();
    assert!(p.is_zero_mod(&good).unwrap().is_none());
    let swapped = p.parse("sqrtP[1]^4 - (q^(1/2)*p[-1]*p[1] + p[0]^2 + q^(-1/2)*p[1]*p[-1])").unwrap();
    assert!(p.is_zero_mod(&swapped).unwrap().is_some());
}

#[test]
fn json_round_trip_is_byte_identical() {
    for n in [3, 4] {
        let b = bundle(n);
        for p in [euclidean_presentation(&b).unwrap(), frt_presentation(&b).unwrap()] {
            let text = serde_json::to_string_pretty(&p.to_json()).unwrap();
            let back = Presentation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(serde_json::to_string_pretty(&back.to_json()).unwrap(), text);
        }
    }
}

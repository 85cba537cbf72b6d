use decoupling::{gamma_default, solve_gluing, Maps, Which};
use ncengine::NcPoly;
use presentations::{frt_relations, Entry, Sign};
use scalars::Scalar;

fn maps(n: usize) -> Maps<Scalar> {
    Maps::new(n, gamma_default(n)).unwrap()
}

fn e(sign: Sign, i: i32, j: i32) -> Entry {
    Entry { sign, i, j }
}

#[test]
fn anchor_middle_entry_maps_to_one() {
    let m = maps(3);
    let p = m.phi_display(Which::Minus, e(Sign::Minus, 0, 0)).unwrap();
    assert_eq!(m.eu.fmt_poly(&p), "1");
}

#[test]
fn default_gammas_satisfy_constraints() {
    for n in 3..=8 {
        assert!(gamma_default(n).violations(n).is_empty(), "N={n}");
    }
}

#[test]
fn homomorphisms_preserve_frt_relations() {
    for n in [3, 4] {
        let m = maps(n);
        for (sign, which) in [(Sign::Minus, Which::Minus), (Sign::Plus, Which::Plus)] {
            for r in frt_relations(&m.bundle, sign) {
                let img = r.eval(&mut |x| m.phi(which, x), &|a, b| Ok::<_, decoupling::DecouplingError>(m.eu.mul(a, b)?)).unwrap();
                let w = m.eu.is_zero_mod(&img).unwrap();
                assert!(w.is_none(), "N={n} {}: {}", r.id, m.eu.fmt_poly(&w.unwrap()));
            }
        }
    }
}

#[test]
fn counit_and_factorization_n3() {
    let m = maps(3);
    for (sign, which) in [(Sign::Minus, Which::Minus), (Sign::Plus, Which::Plus)] {
        for x in m.entries(sign) {
            let z = m.zeta(which, x).unwrap();
            let back = m.phi_poly(which, &z, &m.cross).unwrap();
            let want = if x.i == x.j { NcPoly::one() } else { NcPoly::zero() };
            assert!(m.eu.is_zero_mod(&back.sub(&want)).unwrap().is_none(), "{x:?}");
        }
    }
}

#[test]
fn gluing_n3() {
    let g = solve_gluing(3).unwrap();
    assert!(g.violations(3).is_empty());
    // γ̄_a = −q γ_a for every a.
    for (a, (x, xb)) in &g.values {
        assert_eq!(*xb, -(Scalar::q() * x), "a={a}");
    }
    let m = Maps::new(3, g).unwrap();
    m.check_gluing().unwrap();
    assert!(matches!(solve_gluing(4), Err(decoupling::DecouplingError::EvenGluing)));
}

#[test]
fn default_split_does_not_glue() {
    let m = maps(3);
    assert!(m.check_gluing().is_err());
}

#[test]
fn glued_cartan_entries_differ_by_central_factor() {
    // With the glued constants φ̃(L⁺^{−a}_{−a}) = −q² φ̃(L⁻^a_a), so the
    // identification of the two Cartan halves needs q² = −1 or a γ outside
    // Q(s).
    let m = Maps::new(3, solve_gluing(3).unwrap()).unwrap();
    let plus = m.phi(Which::Glued, e(Sign::Plus, -1, -1)).unwrap();
    let minus = m.phi(Which::Glued, e(Sign::Minus, 1, 1)).unwrap();
    assert!(m.eu.is_zero_mod(&plus.sub(&minus)).unwrap().is_some());
    let d = plus.add(&minus.scale(&Scalar::q_pow(2)));
    assert!(m.eu.is_zero_mod(&d).unwrap().is_none());
}

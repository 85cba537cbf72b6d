use decoupling::gamma_default;
use proptest::prelude::*;
use verification::{eval_mode_plan, verify, Config, Mode, Suite, VerifyError};

fn assert_pass(suite: Suite, n: usize, mode: Mode) {
    let r = verify(suite, n, &mode, &Config::default()).unwrap();
    assert!(!r.checks.is_empty());
    assert!(r.all_passed(), "{}", r.to_text());
}

#[test]
fn all_suites_exact_n3() {
    assert_pass(Suite::All, 3, Mode::Exact);
}

#[test]
fn eval_agrees_with_exact_n3() {
    assert_pass(Suite::All, 3, Mode::Eval { samples: 3, seed: 11 });
}

#[test]
fn even_n_suites_n4() {
    for s in [Suite::Commutant, Suite::Injectivity, Suite::Counit] {
        assert_pass(s, 4, Mode::Exact);
    }
}

#[test]
fn mixed_suite_needs_odd_n() {
    let r = verify(Suite::HomomorphismMixed, 4, &Mode::Exact, &Config::default());
    assert!(matches!(r, Err(VerifyError::Usage(_))));
    // `all` just leaves it out.
    let r = verify(Suite::All, 4, &Mode::Eval { samples: 1, seed: 0 }, &Config::default()).unwrap();
    assert!(r.checks.iter().all(|c| !c.id.starts_with("homomorphism-mixed")));
}

#[test]
fn failures_carry_witnesses() {
    // The default split does not glue.
    let cfg = Config { gamma: Some(gamma_default(3)), ..Config::default() };
    let r = verify(Suite::HomomorphismMixed, 3, &Mode::Exact, &cfg).unwrap();
    assert_eq!(r.failed(), 1);
    let c = &r.checks[0];
    assert!(c.witness.as_deref().unwrap().starts_with("mixed("));
    let j = r.to_json();
    assert_eq!(j["summary"]["failed"], 1);
    assert_eq!(j["checks"][0]["status"], "fail");
}

#[test]
fn reports_are_deterministic() {
    let mode = Mode::Eval { samples: 2, seed: 5 };
    let strip = |mut v: serde_json::Value| {
        for c in v["checks"].as_array_mut().unwrap() {
            c["millis"] = 0.into();
        }
        v
    };
    let a = strip(verify(Suite::Counit, 3, &mode, &Config::default()).unwrap().to_json());
    let b = strip(verify(Suite::Counit, 3, &mode, &Config::default()).unwrap().to_json());
    assert_eq!(a, b);
    assert_eq!(a["summary"]["total"], a["checks"].as_array().unwrap().len());
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL.into_iter().chain([Suite::All]) {
        assert_eq!(Suite::parse(s.as_str()), Some(s));
    }
    assert_eq!(Suite::parse("nope"), None);
}

proptest! {
    #[test]
    fn plan_is_seeded_distinct_and_in_range(n in 3usize..8, samples in 1usize..12, seed in any::<u64>()) {
        let a = eval_mode_plan(n, samples, seed);
        prop_assert_eq!(&a, &eval_mode_plan(n, samples, seed));
        prop_assert_eq!(a.len(), samples);
        for (k, x) in a.iter().enumerate() {
            prop_assert!(x.numer() > x.denom() && *x.numer() < x.denom() * 2u32);
            prop_assert!(!a[..k].contains(x));
        }
    }
}

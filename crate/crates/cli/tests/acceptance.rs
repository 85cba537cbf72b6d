//! Acceptance run: one PASS/FAIL line per criterion, each within its time
//! budget. The test fails if any criterion does.
//!
//! Lines go straight to the stdout handle rather than through `println!`,
//! so they show up even when the harness captures output.

use decoupling::{gamma_default, solve_gluing, Maps, Which};
use ncengine::word::letter;
use ncengine::{NcPoly, Presentation, Word};
use presentations::{euclidean_presentation, frt_presentation, Entry, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmatrix::RMatrixBundle;
use scalars::Scalar;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};
use verification::{verify, Config, Mode, Report, Suite};

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, r: &Report) {
        for c in r.checks.iter().filter(|c| !c.passed) {
            self.failures.push(format!("N={} {}: {}", r.n, c.id, c.witness.as_deref().unwrap_or("")));
        }
    }
}

fn say(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn criterion(results: &mut Vec<bool>, name: &str, limit: Duration, body: impl FnOnce(&mut Outcome)) {
    let t = Instant::now();
    let mut o = Outcome { failures: Vec::new() };
    body(&mut o);
    let took = t.elapsed();
    if took > limit {
        o.failures.push(format!("took {took:.1?}, limit {limit:?}"));
    }
    let ok = o.failures.is_empty();
    say(format!("[{}] {name} ({took:.2?}, limit {limit:?})", if ok { "PASS" } else { "FAIL" }));
    for f in o.failures.iter().take(5) {
        say(format!("       {f}"));
    }
    results.push(ok);
}

fn run(o: &mut Outcome, suite: Suite, n: usize, mode: Mode, gamma: Option<decoupling::GammaConfig>) {
    match verify(suite, n, &mode, &Config { gamma, degree_cap: 12 }) {
        Ok(r) => {
            o.require(!r.checks.is_empty(), || format!("{} N={n}: no checks ran", suite.as_str()));
            o.report(&r);
        }
        Err(e) => o.failures.push(format!("{} N={n}: {e}", suite.as_str())),
    }
}

const EVAL5: Mode = Mode::Eval { samples: 5, seed: 0 };

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let c = Scalar::from_int(rng.gen_range(-9..=9i64).max(1));
    let c = if rng.gen_bool(0.3) { -c } else { c };
    let s = Scalar::s_pow(rng.gen_range(-4..=4));
    match rng.gen_range(0..3) {
        0 => c * &s,
        1 => (c + &Scalar::q()) * &s,
        _ => (c * &s).div(&(Scalar::q() + &Scalar::one())).unwrap(),
    }
}

fn random_poly(p: &Presentation<Scalar>, rng: &mut ChaCha8Rng) -> NcPoly<Scalar> {
    let gens = p.registry.gens();
    let mut out = NcPoly::zero();
    for _ in 0..rng.gen_range(0..4) {
        let mut w = Word::one();
        for _ in 0..rng.gen_range(0..5) {
            let g = rng.gen_range(0..gens.len());
            w.push(letter(g, gens[g].invertible && rng.gen_bool(0.5)));
        }
        out.add_term(w, &random_scalar(rng));
    }
    out
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let minutes = |m: u64| Duration::from_secs(60 * m);

    criterion(&mut results, "1 R-matrix: YBE, characteristic, projectors and traces; N=3,4 exact, N=5 eval", minutes(1), |o| {
        for n in [3, 4] {
            run(o, Suite::Rmatrix, n, Mode::Exact, None);
        }
        run(o, Suite::Rmatrix, 5, EVAL5, None);
        for (n, want) in [(3, [3, 5, 1]), (4, [6, 9, 1])] {
            let b = RMatrixBundle::<Scalar>::new(n).unwrap();
            let got: Vec<Scalar> = [&b.pa, &b.ps, &b.pt].iter().map(|p| p.trace().unwrap()).collect();
            let want: Vec<Scalar> = want.iter().map(|&x| Scalar::from_int(x)).collect();
            o.require(got == want, || format!("N={n}: traces {got:?}"));
        }
    });

    criterion(&mut results, "2 Metric: inverse and covariance, exact, N=3,4,5", Duration::from_secs(10), |o| {
        for n in [3, 4, 5] {
            for c in RMatrixBundle::<Scalar>::new(n).unwrap().check_metric() {
                o.require(c.passed, || format!("N={n} {}: {:?}", c.id, c.witness));
            }
        }
    });

    criterion(&mut results, "3 Presentations: relations, degree-3 overlaps, p-p rank; N=3,4", minutes(2), |o| {
        for n in [3, 4] {
            run(o, Suite::PresentationConsistency, n, Mode::Exact, None);
        }
    });

    criterion(&mut results, "4 Homomorphisms: FRT and cross relations (N=3 exact, N=4,5 eval); glued N=3", minutes(10), |o| {
        for s in [Suite::HomomorphismMinus, Suite::HomomorphismPlus] {
            run(o, s, 3, Mode::Exact, None);
            run(o, s, 4, EVAL5, None);
            run(o, s, 5, EVAL5, None);
        }
        match solve_gluing(3) {
            Ok(g) => run(o, Suite::HomomorphismMixed, 3, Mode::Exact, Some(g)),
            Err(e) => o.failures.push(format!("solve_gluing(3): {e}")),
        }
    });

    criterion(&mut results, "5 Decoupling, exact, N=3: commutant, counit, factorization, injectivity", minutes(10), |o| {
        for s in [Suite::Commutant, Suite::Counit, Suite::Factorization, Suite::Injectivity] {
            run(o, s, 3, Mode::Exact, None);
        }
    });

    criterion(&mut results, "6 Center: P^2 commutes with every generator of A, exact, N=3,4,5", minutes(1), |o| {
        for n in [3, 4, 5] {
            let p = euclidean_presentation(&RMatrixBundle::new(n).unwrap()).unwrap();
            let l = p.letter("sqrtP", &[(n / 2) as i32]).unwrap();
            let p2 = NcPoly::word(Word::from_letters(&[l, l, l, l]));
            for x in p.registry.letters() {
                let c = p.commutator(&p2, &NcPoly::letter(x), &Scalar::one()).unwrap();
                let w = p.is_zero_mod(&c).unwrap();
                o.require(w.is_none(), || format!("N={n}: [P^2, {}] = {}", p.registry.letter_name(x), p.fmt_poly(&w.unwrap())));
            }
        }
    });

    criterion(&mut results, "7 Anchors: phi-(L-[0,0]) = 1 at N=3; gamma constraints of shipped configurations", Duration::from_secs(1), |o| {
        let g = gamma_default(3);
        let want = -(Scalar::s_pow(-1) * &Scalar::h().inv().unwrap());
        o.require(*g.get(0, false).unwrap() == want, || format!("gamma_0 = {}", g.get(0, false).unwrap()));
        let m = Maps::new(3, g).unwrap();
        let img = m.phi_display(Which::Minus, Entry { sign: Sign::Minus, i: 0, j: 0 }).unwrap();
        o.require(m.eu.fmt_poly(&img) == "1", || format!("phi-(L-[0,0]) = {}", m.eu.fmt_poly(&img)));
        for n in 3..=8 {
            let v = gamma_default(n).violations(n);
            o.require(v.is_empty(), || format!("default N={n}: {v:?}"));
        }
        for n in [3, 5] {
            match solve_gluing(n) {
                Ok(g) => {
                    let v = g.violations(n);
                    o.require(v.is_empty(), || format!("glued N={n}: {v:?}"));
                }
                Err(e) => o.failures.push(format!("solve_gluing({n}): {e}")),
            }
        }
    });

    criterion(&mut results, "8 Tooling: parser round trip, JSON round trip, verify --dim 3 --suite all exits 0", minutes(5), |o| {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let b = RMatrixBundle::new(3).unwrap();
        let pres =
            [euclidean_presentation(&b).unwrap(), frt_presentation(&b).unwrap(), Maps::new(3, gamma_default(3)).unwrap().cross];
        for p in &pres {
            for _ in 0..1000 {
                let x = random_poly(p, &mut rng);
                let text = p.fmt_poly(&x);
                match p.parse(&text) {
                    Ok(y) if y == x => {}
                    Ok(y) => o.failures.push(format!("{}: {text} reparsed as {}", p.algebra.as_str(), p.fmt_poly(&y))),
                    Err(e) => o.failures.push(format!("{}: {text}: {e}", p.algebra.as_str())),
                }
            }
            let doc = serde_json::to_string_pretty(&p.to_json()).unwrap();
            let back = Presentation::from_json(&serde_json::from_str(&doc).unwrap()).unwrap();
            let again = serde_json::to_string_pretty(&back.to_json()).unwrap();
            o.require(again == doc, || format!("{} JSON changed on round trip", p.algebra.as_str()));
        }
        let st = Command::new(env!("CARGO_BIN_EXE_qdecouple"))
            .args(["verify", "--dim", "3", "--suite", "all", "--mode", "exact"])
            .output()
            .unwrap();
        o.require(st.status.code() == Some(0), || format!("verify exited with {:?}", st.status.code()));
    });

    let passed = results.iter().filter(|&&x| x).count();
    say(format!("acceptance: {passed}/{} criteria passed", results.len()));
    assert_eq!(passed, results.len());
}

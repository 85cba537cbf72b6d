use decoupling::{DecouplingError, Hopf, Maps, Which};
use exactlinalg::Echelon;
use ncengine::word::{gen_of, inverse};
use ncengine::{Kind, Letter, NcPoly, Presentation, Word};
use presentations::raw::antipode;
use presentations::{entry, frt_relations, letter_entry, rho, Entry, Sign};
use rayon::prelude::*;
use rmatrix::{Check, RMatrixBundle};
use scalars::Coeff;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Rmatrix,
    PresentationConsistency,
    HomomorphismMinus,
    HomomorphismPlus,
    HomomorphismMixed,
    Commutant,
    Counit,
    Factorization,
    Center,
    Injectivity,
    All,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Rmatrix,
        Suite::PresentationConsistency,
        Suite::HomomorphismMinus,
        Suite::HomomorphismPlus,
        Suite::HomomorphismMixed,
        Suite::Commutant,
        Suite::Counit,
        Suite::Factorization,
        Suite::Center,
        Suite::Injectivity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Rmatrix => "rmatrix",
            Suite::PresentationConsistency => "presentation-consistency",
            Suite::HomomorphismMinus => "homomorphism-minus",
            Suite::HomomorphismPlus => "homomorphism-plus",
            Suite::HomomorphismMixed => "homomorphism-mixed",
            Suite::Commutant => "commutant",
            Suite::Counit => "counit",
            Suite::Factorization => "factorization",
            Suite::Center => "center",
            Suite::Injectivity => "injectivity",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.iter().chain([Suite::All].iter()).copied().find(|x| x.as_str() == s)
    }

    /// Checks of this suite against one set of maps. `All` and `Rmatrix`
    /// are dispatched by the caller.
    pub(crate) fn run<C: Coeff>(self, m: &Maps<C>) -> Vec<Check> {
        match self {
            Suite::Rmatrix => rmatrix(&m.bundle),
            Suite::PresentationConsistency => consistency(m),
            Suite::HomomorphismMinus => homomorphism(m, Sign::Minus),
            Suite::HomomorphismPlus => homomorphism(m, Sign::Plus),
            Suite::HomomorphismMixed => vec![Check::run("mixed-relations", || match m.gluing_residuals() {
                Ok(r) => r.first().map(|(id, w)| format!("{id}: {}", m.eu.fmt_poly(w))),
                Err(e) => Some(e.to_string()),
            })],
            Suite::Commutant => signs(|s| commutant(m, s)),
            Suite::Counit => {
                let mut out = signs(|s| counit(m, s));
                out.push(hopf_counit(m));
                out
            }
            Suite::Factorization => signs(|s| factorization(m, s)),
            Suite::Center => center(m),
            Suite::Injectivity => {
                let mut out = signs(|s| injectivity(m, s));
                if m.dim().is_multiple_of(2) {
                    out.extend(signs(|s| shared_cartan(m, s)));
                }
                out
            }
            Suite::All => Vec::new(),
        }
    }
}

fn signs(f: impl Fn(Sign) -> Check) -> Vec<Check> {
    vec![f(Sign::Minus), f(Sign::Plus)]
}

fn which(s: Sign) -> Which {
    match s {
        Sign::Minus => Which::Minus,
        Sign::Plus => Which::Plus,
    }
}

fn tag(s: Sign) -> &'static str {
    match s {
        Sign::Minus => "minus",
        Sign::Plus => "plus",
    }
}

/// Runs `f` on every item in parallel and reports the first witness in
/// item order.
fn first_failure<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Option<String>, DecouplingError> + Sync) -> Option<String> {
    let found: Vec<Option<String>> = items
        .par_iter()
        .map(|x| match f(x) {
            Ok(w) => w,
            Err(e) => Some(e.to_string()),
        })
        .collect();
    found.into_iter().flatten().next()
}

fn residual<C: Coeff>(p: &Presentation<C>, x: &NcPoly<C>) -> Result<Option<String>, DecouplingError> {
    Ok(p.is_zero_mod(x)?.map(|w| p.fmt_poly(&w)))
}

fn label(p: &Presentation<impl Coeff>, l: Letter) -> String {
    p.registry.letter_name(l)
}

fn entry_name(e: Entry) -> String {
    format!("{}[{},{}]", e.sign.base(), e.i, e.j)
}

pub(crate) fn rmatrix<C: Coeff>(b: &RMatrixBundle<C>) -> Vec<Check> {
    let mut out = vec![b.check_ybe(), b.check_characteristic(), b.check_spectral(), b.check_inverse()];
    out.extend(b.check_projectors());
    out.extend(b.check_metric());
    out
}

fn consistency<C: Coeff>(m: &Maps<C>) -> Vec<Check> {
    let mut out = Vec::new();
    let n = m.dim();
    for p in [&m.eu, &m.frt, &m.cross] {
        let name = p.algebra.as_str();
        out.push(Check::run(format!("relations.{name}"), || {
            first_failure(&p.relations, |(id, r)| Ok(residual(p, r)?.map(|w| format!("{id}: {w}"))))
        }));
        out.push(Check::run(format!("rules.{name}"), || {
            let missing = p.missing_rules();
            let bad = p.non_normal_rules();
            let fmt = |v: &[(Letter, Letter)]| {
                v.iter().map(|&(a, b)| format!("{}*{}", label(p, a), label(p, b))).collect::<Vec<_>>().join(", ")
            };
            if !missing.is_empty() {
                Some(format!("no rule for {}", fmt(&missing)))
            } else if !bad.is_empty() {
                Some(format!("right side not normal for {}", fmt(&bad)))
            } else {
                None
            }
        }));
        out.push(Check::run(format!("overlaps.{name}"), || match p.check_overlaps(3) {
            Ok(r) => r.mismatches.first().map(|x| format!("{}: {} vs {}", x.word, x.left, x.right)),
            Err(e) => Some(e.to_string()),
        }));
        out.push(Check::run(format!("roots.{name}"), || root_compatibility(p)));
    }
    out.push(Check::run("pp-rank", || {
        let t = Kind::Translation;
        let r = m.eu.rules().filter(|(a, b, _)| m.eu.kind(*a) == t && m.eu.kind(*b) == t).count();
        (r != n * (n - 1) / 2).then(|| format!("{r} p-p rules, expected {}", n * (n - 1) / 2))
    }));
    out
}

/// For every root X^k = v and every letter l, reordering l·X^k and l·v
/// must agree modulo the roots.
fn root_compatibility<C: Coeff>(p: &Presentation<C>) -> Option<String> {
    let ls = p.registry.letters();
    for r in &p.roots {
        let xk = NcPoly::word(Word(std::iter::repeat_n(ncengine::word::letter(r.gen, false), r.power).collect()));
        let w = first_failure(&ls, |&l| {
            let a = NcPoly::letter(l);
            let d = p.mul(&a, &xk)?.sub(&p.mul(&a, &r.value)?);
            Ok(residual(p, &d)?.map(|w| format!("{} against root of {}: {w}", label(p, l), p.registry.get(r.gen).name())))
        });
        if w.is_some() {
            return w;
        }
    }
    None
}

/// Generators of A other than the shared Cartan element, with inverses.
fn a_letters<C: Coeff>(p: &Presentation<C>, eu: &Presentation<C>) -> Vec<Letter> {
    p.registry
        .letters()
        .into_iter()
        .filter(|&l| {
            let g = p.registry.get(gen_of(l));
            !g.kind.is_frt() && eu.registry.find(&g.base, &g.indices).is_some()
        })
        .collect()
}

fn homomorphism<C: Coeff>(m: &Maps<C>, sign: Sign) -> Vec<Check> {
    let w = which(sign);
    let eu = &m.eu;
    let b = &m.bundle;
    let idx = b.weights.indices();
    let rels = frt_relations(b, sign);
    let mut out = vec![Check::run("frt-relations", || {
        first_failure(&rels, |r| {
            let img = r.eval(&mut |e| m.phi(w, e), &|x, y| Ok::<_, DecouplingError>(eu.mul(x, y)?))?;
            Ok(residual(eu, &img)?.map(|x| format!("{}: {x}", r.id)))
        })
    })];

    // a·φ̃(L^i_k) = Σ_h φ̃(L^i_h)(a ◁ L^h_k) for every generator a of A.
    let entries = m.entries(sign);
    let img = |e: Entry| m.phi(w, e);
    let action = |a: Letter, e: Entry| -> Result<NcPoly<C>, DecouplingError> {
        let g = eu.registry.get(gen_of(a));
        let mut acc = NcPoly::zero();
        if g.kind == Kind::Translation {
            for &k in &idx {
                let c = rho(b, sign, e.i, e.j, g.indices[0], k);
                if !c.is_zero() {
                    acc.add_scaled(&eu.gen("p", &[k]), &c);
                }
            }
        } else {
            for &i in &idx {
                let (c, s) = antipode(b, sign, e.i, i);
                let t = eu.product(&[&img(s)?.scale(&c), &NcPoly::letter(a), &img(Entry { sign, i, j: e.j })?])?;
                acc = acc.add(&t);
            }
        }
        Ok(acc)
    };
    let letters = a_letters(eu, eu);
    for (id, kinds) in [("cross-translation", true), ("cross-scaling", false)] {
        let ls: Vec<Letter> =
            letters.iter().copied().filter(|&l| (eu.kind(l) == Kind::Translation) == kinds).collect();
        let pairs: Vec<(Letter, Entry)> = ls.iter().flat_map(|&l| entries.iter().map(move |&e| (l, e))).collect();
        out.push(Check::run(id, || {
            first_failure(&pairs, |&(a, e)| {
                let lhs = eu.mul(&NcPoly::letter(a), &img(e)?)?;
                let mut rhs = NcPoly::zero();
                for &h in &idx {
                    let left = img(Entry { sign, i: e.i, j: h })?;
                    if !left.is_zero() {
                        rhs = rhs.add(&eu.mul(&left, &action(a, Entry { sign, i: h, j: e.j })?)?);
                    }
                }
                Ok(residual(eu, &lhs.sub(&rhs))?.map(|x| format!("{} * {}: {x}", label(eu, a), entry_name(e))))
            })
        }));
    }
    out
}

fn commutant<C: Coeff>(m: &Maps<C>, sign: Sign) -> Check {
    let c = &m.cross;
    let letters = a_letters(c, &m.eu);
    let entries = m.entries(sign);
    let pairs: Vec<(Entry, Letter)> = entries.iter().flat_map(|&e| letters.iter().map(move |&l| (e, l))).collect();
    Check::run(tag(sign), || {
        first_failure(&pairs, |&(e, l)| {
            let z = m.zeta(which(sign), e)?;
            let d = c.commutator(&z, &NcPoly::letter(l), &C::one())?;
            Ok(residual(c, &d)?.map(|x| format!("[zeta({}), {}] = {x}", entry_name(e), label(c, l))))
        })
    })
}

fn counit<C: Coeff>(m: &Maps<C>, sign: Sign) -> Check {
    let w = which(sign);
    Check::run(format!("phi-zeta.{}", tag(sign)), || {
        first_failure(&m.entries(sign), |&e| {
            let back = m.phi_poly(w, &m.zeta(w, e)?, &m.cross)?;
            let want = if e.i == e.j { NcPoly::one() } else { NcPoly::zero() };
            Ok(residual(&m.eu, &back.sub(&want))?.map(|x| format!("phi(zeta({})) - delta = {x}", entry_name(e))))
        })
    })
}

/// (ε ⊗ id)Δ = id and m(S ⊗ id)Δ = ε on every FRT generator.
fn hopf_counit<C: Coeff>(m: &Maps<C>) -> Check {
    let h = Hopf { frt: &m.frt, bundle: &m.bundle };
    let letters = m.frt.registry.letters();
    Check::run("hopf", || {
        first_failure(&letters, |&l| {
            let x = NcPoly::letter(l);
            let d = h.coproduct(&x)?;
            let left = d.contract(&m.frt, |a| Ok(NcPoly::constant(h.counit(a)?)), |b| Ok(b.clone()))?;
            if let Some(r) = residual(&m.frt, &left.sub(&x))? {
                return Ok(Some(format!("(eps x id)Delta({}) - id = {r}", label(&m.frt, l))));
            }
            let s = d.contract(&m.frt, |a| h.antipode(a), |b| Ok(b.clone()))?;
            let eps = NcPoly::constant(h.counit(&x)?);
            Ok(residual(&m.frt, &s.sub(&eps))?.map(|r| format!("m(S x id)Delta({}) - eps = {r}", label(&m.frt, l))))
        })
    })
}

fn factorization<C: Coeff>(m: &Maps<C>, sign: Sign) -> Check {
    let c = &m.cross;
    let w = which(sign);
    let idx = m.bundle.weights.indices();
    Check::run(tag(sign), || {
        first_failure(&m.entries(sign), |&e| {
            // L^i_j = Σ_h ζ̃(L^i_h) φ̃(L^h_j) in A⋊H.
            let mut acc = entry(c, sign, e.i, e.j);
            for &h in &idx {
                let z = m.zeta(w, Entry { sign, i: e.i, j: h })?;
                let p = m.phi(w, Entry { sign, i: h, j: e.j })?;
                if z.is_zero() || p.is_zero() {
                    continue;
                }
                let p = c.import(&p, &m.eu.registry)?;
                acc = acc.sub(&c.mul(&z, &p)?);
            }
            Ok(residual(c, &acc)?.map(|x| format!("{}: {x}", entry_name(e))))
        })
    })
}

/// P² = (√P_n)⁴ commutes with A, and in A⋊H with H as well.
fn center<C: Coeff>(m: &Maps<C>) -> Vec<Check> {
    let n = (m.dim() / 2) as i32;
    let mut out = Vec::new();
    for (id, p) in [("P2.euclidean", &m.eu), ("P2.cross", &m.cross)] {
        out.push(Check::run(id, || {
            let x = match p.letter("sqrtP", &[n]) {
                Some(l) => NcPoly::word(Word::from_letters(&[l, l, l, l])),
                None => return Some("missing sqrtP".into()),
            };
            first_failure(&p.registry.letters(), |&l| {
                let d = p.commutator(&x, &NcPoly::letter(l), &C::one())?;
                Ok(residual(p, &d)?.map(|w| format!("[P^2, {}] = {w}", label(p, l))))
            })
        }));
    }
    out
}

/// FRT letters of one sign (Cartan letters read in that sign, inverses
/// included), leaving out the even-N Cartan element shared with A.
fn sign_letters<C: Coeff>(m: &Maps<C>, sign: Sign, shared: bool) -> Vec<Letter> {
    let f = &m.frt;
    f.registry
        .letters()
        .into_iter()
        .filter(|&l| letter_entry(f, l).is_some_and(|e| e.sign == sign || e.i == e.j))
        .filter(|&l| {
            let g = f.registry.get(gen_of(l));
            m.eu.registry.find(&g.base, &g.indices).is_some() == shared
        })
        .collect()
}

/// ζ̃ is injective on the span of normal FRT words with at most two
/// letters of one sign.
fn injectivity<C: Coeff>(m: &Maps<C>, sign: Sign) -> Check {
    let w = which(sign);
    let f = &m.frt;
    Check::run(tag(sign), || {
        let letters = sign_letters(m, sign, false);
        let mut words = vec![Word::one()];
        for &a in &letters {
            words.push(Word::from_letters(&[a]));
            for &b in &letters {
                let ab = Word::from_letters(&[a, b]);
                if b != inverse(a) && f.is_normal(&ab) {
                    words.push(ab);
                }
            }
        }
        let images: Result<Vec<NcPoly<C>>, DecouplingError> =
            words.par_iter().map(|x| m.zeta_poly(w, &NcPoly::word(x.clone()))).collect();
        let rank = (|| -> Result<usize, DecouplingError> {
            let forms = m.cross.canonical_forms(&images?)?;
            let mut cols: BTreeMap<Word, usize> = BTreeMap::new();
            let mut ech = Echelon::new();
            for p in &forms {
                let mut row = BTreeMap::new();
                for (x, c) in p.terms() {
                    let k = cols.len();
                    row.insert(*cols.entry(x.clone()).or_insert(k), c.clone());
                }
                ech.insert(row)?;
            }
            Ok(ech.rank())
        })();
        match rank {
            Ok(r) if r == words.len() => None,
            Ok(r) => Some(format!("images of {} words span rank {r}", words.len())),
            Err(e) => Some(e.to_string()),
        }
    })
}

/// The shared Cartan element lies in A, where φ̃ is the identity, so
/// ζ̃(K) = K φ̃(K⁻¹) = 1.
fn shared_cartan<C: Coeff>(m: &Maps<C>, sign: Sign) -> Check {
    let w = which(sign);
    Check::run(format!("shared-cartan.{}", tag(sign)), || {
        first_failure(&sign_letters(m, sign, true), |&l| {
            let z = m.zeta_poly(w, &NcPoly::letter(l))?;
            Ok(residual(&m.cross, &z.sub(&NcPoly::one()))?.map(|x| format!("zeta({}) - 1 = {x}", label(&m.frt, l))))
        })
    })
}

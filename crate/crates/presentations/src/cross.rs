use crate::{letter_entry, rho, Entry, PresentationError, Sign};
use ncengine::word::{gen_of, inverse, is_inverse, letter};
use ncengine::{Algebra, Kind, Letter, NcPoly, Presentation, Registry, RootRule};
use rmatrix::RMatrixBundle;
use scalars::Scalar;
use serde_json::json;

/// X ◁ L^h_k for a scaling letter X (or its inverse) of the Euclidean
/// presentation, as a polynomial over that presentation.
pub type ScalingAction<'a> = dyn Fn(Letter, Entry) -> Result<NcPoly<Scalar>, PresentationError> + 'a;

/// Cross product A⋊H: all FRT letters precede all Euclidean letters, and
/// a·L^i_k → Σ_h L^i_h (a ◁ L^h_k) for a in A. Translations act through the
/// vector representation, scaling letters through `action`.
pub fn cross_presentation(
    eu: &Presentation<Scalar>,
    frt: &Presentation<Scalar>,
    b: &RMatrixBundle<Scalar>,
    action: &ScalingAction<'_>,
) -> Result<Presentation<Scalar>, PresentationError> {
    let mut reg: Registry = frt.registry.clone();
    for g in eu.registry.gens() {
        if reg.find(&g.base, &g.indices).is_none() {
            reg.push(g.clone());
        }
    }
    let mut pres = Presentation::new(b.dim(), Algebra::Cross, reg);
    let (fr, er) = (frt.registry.clone(), eu.registry.clone());
    for (src, from) in [(frt, &fr), (eu, &er)] {
        let map = from.embedding(&pres.registry).expect("subregistry");
        let tr = |l: Letter| letter(map[gen_of(l)], is_inverse(l));
        for (a, c, rhs) in src.rules() {
            let rhs = pres.import(rhs, from)?;
            pres.set_rule(tr(a), tr(c), rhs);
        }
        for r in &src.roots {
            let value = pres.import(&r.value, from)?;
            pres.roots.push(RootRule { gen: map[r.gen], power: r.power, value });
        }
        for (k, v) in &src.aliases {
            let v = pres.import(v, from)?;
            pres.aliases.insert(k.clone(), v);
        }
        for (id, v) in &src.relations {
            let v = pres.import(v, from)?;
            pres.relations.push((id.clone(), v));
        }
    }

    let entry = |p: &Presentation<Scalar>, e: Entry| crate::entry(p, e.sign, e.i, e.j);
    let idx = b.weights.indices();
    let h_letters: Vec<Letter> = pres.registry.letters().into_iter().filter(|&l| pres.kind(l).is_frt()).collect();
    let eu_letters: Vec<Letter> = er.letters();
    let mut new_rules = Vec::new();
    for &el in &eu_letters {
        let g = er.get(gen_of(el));
        let a = pres.letter(&g.base, &g.indices).map(|l| if is_inverse(el) { inverse(l) } else { l }).unwrap();
        if g.kind.is_frt() {
            // Shared Cartan element: its exchange with H is an FRT rule.
            continue;
        }
        for &hl in &h_letters {
            let e = letter_entry(&pres, hl).expect("FRT letter");
            let mut rhs = NcPoly::zero();
            for &h in &idx {
                let left = entry(&pres, Entry { sign: e.sign, i: e.i, j: h });
                if left.is_zero() {
                    continue;
                }
                let right = match g.kind {
                    Kind::Translation => {
                        let j = g.indices[0];
                        let mut acc = NcPoly::zero();
                        for &m in &idx {
                            let c = rho(b, e.sign, h, e.j, j, m);
                            if !c.is_zero() {
                                acc.add_scaled(&pres.gen("p", &[m]), &c);
                            }
                        }
                        acc
                    }
                    _ => pres.import(&action(el, Entry { sign: e.sign, i: h, j: e.j })?, &er)?,
                };
                rhs = rhs.add(&left.mul(&right));
            }
            new_rules.push((a, hl, rhs));
        }
    }
    for (a, hl, rhs) in new_rules {
        pres.set_rule(a, hl, rhs);
    }

    let mut rels = Vec::new();
    // Cross relations a·L − Σ L (a ◁ L) over the raw entries, kept for
    // the homomorphism checks.
    for &j in &idx {
        for s in [Sign::Minus, Sign::Plus] {
            for &i in &idx {
                for &k in &idx {
                    let lik = entry(&pres, Entry { sign: s, i, j: k });
                    if lik.is_zero() {
                        continue;
                    }
                    let mut rel = pres.gen("p", &[j]).mul(&lik);
                    for &h in &idx {
                        let left = entry(&pres, Entry { sign: s, i, j: h });
                        for &m in &idx {
                            let c = rho(b, s, h, k, j, m);
                            if !c.is_zero() && !left.is_zero() {
                                rel.add_scaled(&left.mul(&pres.gen("p", &[m])), &-c);
                            }
                        }
                    }
                    rels.push((format!("cross{}({j},{i},{k})", if s == Sign::Plus { '+' } else { '-' }), rel));
                }
            }
        }
    }
    pres.relations.extend(rels);
    pres.metadata.insert(
        "conventions".into(),
        json!({
            "normal_order": "FRT generators < Euclidean generators",
            "exchange": "a*L[i,k] = sum_h L[i,h] (a <| L[h,k])",
        }),
    );
    Ok(pres)
}

use crate::{rho, PresentationError, Sign};
use exactlinalg::Echelon;
use ncengine::word::{inverse, letter};
use ncengine::{Algebra, Generator, Kind, Letter, NcPoly, Presentation, Registry, RootRule, Word};
use rmatrix::RMatrixBundle;
use scalars::{Coeff, Scalar};
use serde_json::json;
use std::collections::BTreeMap;

/// √P_a p^i = f·p^i √P_a with f = 1 for |i| ≤ a, q^{1/2} for i > a and
/// q^{−1/2} for i < −a.
pub(crate) fn sqrt_p_factor(a: i32, i: i32) -> Scalar {
    if i.abs() <= a {
        Scalar::one()
    } else if i > a {
        Scalar::s()
    } else {
        Scalar::s_pow(-1)
    }
}

/// Extended quantum Euclidean space: p^i, √P_a^{±1}, √(p^0)^{±1} for odd
/// N, and for even N the adjoined Cartan element L⁻^1_1 = L⁺^{−1}_{−1}.
pub fn euclidean_presentation(b: &RMatrixBundle<Scalar>) -> Result<Presentation<Scalar>, PresentationError> {
    let dim = b.dim();
    let n = b.weights.rank as i32;
    let idx = b.weights.indices();
    let odd = dim % 2 == 1;

    let mut reg = Registry::default();
    let k_gen = (!odd).then(|| reg.push(Generator::new("L-", &[1, 1], Kind::FrtMinus, true)));
    let y_gen = odd.then(|| reg.push(Generator::new("sqrtp0", &[], Kind::Scaling, true)));
    let x_gen: Vec<usize> = (1..=n).map(|a| reg.push(Generator::new("sqrtP", &[a], Kind::Scaling, true))).collect();
    let p_gen: BTreeMap<i32, usize> = idx.iter().map(|&i| (i, reg.push(Generator::new("p", &[i], Kind::Translation, false)))).collect();
    let mut pres = Presentation::new(dim, Algebra::Euclidean, reg);
    let pl = |i: i32| letter(p_gen[&i], false);
    let pw = |i: i32, j: i32| Word::from_letters(&[pl(i), pl(j)]);

    // p–p exchange: the relation space is the row space of Pa. Out-of-order
    // words get the highest columns so they become pivots.
    let mut cols: Vec<(i32, i32)> = Vec::new();
    for &h in &idx {
        for &k in &idx {
            if h <= k {
                cols.push((h, k));
            }
        }
    }
    for &h in &idx {
        for &k in &idx {
            if h > k {
                cols.push((h, k));
            }
        }
    }
    let col_of: BTreeMap<(i32, i32), usize> = cols.iter().enumerate().map(|(c, &w)| (w, c)).collect();
    let mut ech = Echelon::new();
    for &i in &idx {
        for &j in &idx {
            let mut row = BTreeMap::new();
            let mut poly = NcPoly::zero();
            for &h in &idx {
                for &k in &idx {
                    let v = b.pa.get(&[i, j], &[h, k])?;
                    if !v.is_zero() {
                        row.insert(col_of[&(h, k)], v.clone());
                        poly.add_term(pw(h, k), &v);
                    }
                }
            }
            if !poly.is_zero() {
                pres.relations.push((format!("xx({i},{j})"), poly));
                ech.insert(row)?;
            }
        }
    }
    let out_of_order = dim * (dim - 1) / 2;
    if ech.rank() != out_of_order {
        return Err(PresentationError::Inconsistent(format!(
            "antisymmetrizer relations have rank {} instead of {out_of_order}",
            ech.rank()
        )));
    }
    for (pivot, row) in ech.rows() {
        let (h, k) = cols[pivot];
        if h <= k {
            return Err(PresentationError::Inconsistent(format!("p[{h}]*p[{k}] is a pivot")));
        }
        let mut rhs = NcPoly::zero();
        for (&c, v) in row {
            if c != pivot {
                let (x, y) = cols[c];
                rhs.add_term(pw(x, y), &-v.clone());
            }
        }
        pres.set_rule(pl(h), pl(k), rhs);
    }

    // Scaling generators: p^i X → f⁻¹ X p^i and p^i X⁻¹ → f X⁻¹ p^i.
    let swap = |pres: &mut Presentation<Scalar>, a: Letter, x: Letter, f: &Scalar| -> Result<(), PresentationError> {
        pres.set_rule(a, x, NcPoly::term(Word::from_letters(&[x, a]), f.inv()?));
        pres.set_rule(a, inverse(x), NcPoly::term(Word::from_letters(&[inverse(x), a]), f.clone()));
        Ok(())
    };
    for (a, &g) in (1..=n).zip(&x_gen) {
        for &i in &idx {
            swap(&mut pres, pl(i), letter(g, false), &sqrt_p_factor(a, i))?;
        }
    }
    if let Some(y) = y_gen {
        for &i in &idx {
            // p^0 p^i = c p^i p^0, and √(p^0) p^i = √c p^i √(p^0).
            let c = if i == 0 {
                Scalar::one()
            } else if i < 0 {
                single_coeff(&pres, pl(0), pl(i))?
            } else {
                single_coeff(&pres, pl(i), pl(0))?.inv()?
            };
            swap(&mut pres, pl(i), letter(y, false), &c.sqrt_monomial()?)?;
        }
    }
    if let Some(kg) = k_gen {
        // p^i K = K ρ^i_i(K) p^i.
        for &i in &idx {
            let c = rho(b, Sign::Minus, 1, 1, i, i);
            let kl = letter(kg, false);
            pres.set_rule(pl(i), kl, NcPoly::term(Word::from_letters(&[kl, pl(i)]), c.clone()));
            pres.set_rule(pl(i), inverse(kl), NcPoly::term(Word::from_letters(&[inverse(kl), pl(i)]), c.inv()?));
        }
    }
    let central: Vec<usize> = k_gen.iter().chain(y_gen.iter()).chain(x_gen.iter()).copied().collect();
    commute_all(&mut pres, &central);

    // Root relations: (√P_a)^4 = P_a² and (√p^0)² = p^0.
    for (a, &g) in (1..=n).zip(&x_gen) {
        let mut sq = NcPoly::zero();
        for &h in idx.iter().filter(|h| h.abs() <= a) {
            sq.add_term(pw(h, -h), &b.g(h, -h));
        }
        let value = pres.nf(&sq)?;
        pres.roots.push(RootRule { gen: g, power: 4, value });
    }
    if let Some(y) = y_gen {
        pres.roots.push(RootRule { gen: y, power: 2, value: NcPoly::letter(pl(0)) });
    }

    pres.metadata.insert("center".into(), json!([format!("sqrtP[{n}]")]));
    pres.metadata.insert(
        "conventions".into(),
        json!({
            "normal_order": "L- < L+ < scaling < p, p by increasing index",
            "rho": "first listed weight belongs to i = -n",
            "sqrtP_factor": "1 if |i| <= a, q^(1/2) if i > a, q^(-1/2) if i < -a",
        }),
    );
    Ok(pres)
}

/// The coefficient c of a single-term rule a·b → c·b·a.
fn single_coeff(p: &Presentation<Scalar>, a: Letter, b: Letter) -> Result<Scalar, PresentationError> {
    let rhs = p.rule(a, b).ok_or_else(|| PresentationError::Inconsistent("missing p^0 exchange".into()))?;
    let mut t = rhs.terms();
    match (t.next(), t.next()) {
        (Some((w, c)), None) if w.letters() == [b, a] => Ok(c.clone()),
        _ => Err(PresentationError::Inconsistent(format!("p^0 does not q-commute: {}", p.fmt_poly(rhs)))),
    }
}

/// Rules making the listed invertible generators pairwise commute.
pub(crate) fn commute_all<C: Coeff>(pres: &mut Presentation<C>, gens: &[usize]) {
    for (x, &g) in gens.iter().enumerate() {
        for &h in &gens[x + 1..] {
            let (lo, hi) = if g < h { (g, h) } else { (h, g) };
            for e1 in [false, true] {
                for e2 in [false, true] {
                    let (a, b) = (letter(hi, e1), letter(lo, e2));
                    pres.set_rule(a, b, NcPoly::word(Word::from_letters(&[b, a])));
                }
            }
        }
    }
}

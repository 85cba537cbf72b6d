use crate::euclidean::commute_all;
use crate::raw::{cartan_relations, frt_relations, mixed_relations, Entry, RawRelation};
use crate::{rho, support, PresentationError, Sign};
use exactlinalg::Echelon;
use ncengine::word::{gen_of, inverse, letter};
use ncengine::{Algebra, Generator, Kind, Letter, NcPoly, Presentation, Registry, Word};
use rmatrix::RMatrixBundle;
use scalars::Scalar;
use serde_json::json;
use std::collections::{BTreeMap, HashMap};

struct Builder<'a> {
    b: &'a RMatrixBundle<Scalar>,
    sup: HashMap<Sign, Vec<(i32, i32)>>,
    gens: HashMap<Entry, usize>,
    cartan: Vec<usize>,
    memo: HashMap<Entry, NcPoly<Scalar>>,
}

impl Builder<'_> {
    fn in_support(&self, e: Entry) -> bool {
        self.sup[&e.sign].contains(&(e.i, e.j))
    }

    /// ρ(L^i_j) as its nonzero entries (row, col).
    fn rep_support(&self, e: Entry) -> Vec<(i32, i32)> {
        let idx = self.b.weights.indices();
        let mut out = Vec::new();
        for &u in &idx {
            for &v in &idx {
                if !rho(self.b, e.sign, e.i, e.j, u, v).is_zero() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// f with D·X = f·X·D for a diagonal entry D and any entry X, read off
    /// the vector representation.
    fn weight(&self, d: Entry, x: Entry) -> Result<Scalar, PresentationError> {
        let mut f: Option<Scalar> = None;
        for (u, v) in self.rep_support(x) {
            let du = rho(self.b, d.sign, d.i, d.j, u, u);
            let dv = rho(self.b, d.sign, d.i, d.j, v, v);
            let r = du.div(&dv)?;
            match &f {
                None => f = Some(r),
                Some(g) if *g == r => {}
                Some(_) => {
                    return Err(PresentationError::Inconsistent(format!(
                        "L{:?}[{},{}] is not a weight vector",
                        x.sign, x.i, x.j
                    )))
                }
            }
        }
        f.ok_or_else(|| PresentationError::Inconsistent("empty representation".into()))
    }

    /// Diagonal entry as a Cartan monomial: L⁻^a_a = L⁺^{−a}_{−a} = K_a
    /// for a > 0, and their inverses at the opposite index.
    fn diagonal(&self, sign: Sign, i: i32, inverted: bool) -> NcPoly<Scalar> {
        if i == 0 {
            return NcPoly::one();
        }
        let positive = (sign == Sign::Minus) == (i > 0);
        let g = self.cartan[i.unsigned_abs() as usize - 1];
        NcPoly::letter(letter(g, positive == inverted))
    }

    fn c(&self, j: i32, h: i32) -> Scalar {
        self.b.g(h, -h) * &self.b.g_inv(-j, j)
    }

    /// L±^i_j over the generators, solving the antipode relation for the
    /// entries with i + j ≥ 0.
    fn entry(&mut self, e: Entry) -> Result<NcPoly<Scalar>, PresentationError> {
        if !self.in_support(e) {
            return Ok(NcPoly::zero());
        }
        if e.i == e.j {
            return Ok(self.diagonal(e.sign, e.i, false));
        }
        if let Some(&g) = self.gens.get(&e) {
            return Ok(NcPoly::letter(letter(g, false)));
        }
        if let Some(p) = self.memo.get(&e) {
            return Ok(p.clone());
        }
        // Σ_h S(L^J_h) L^h_I = 0 for J ≠ I, with X = L^{−I}_{−J} the term of
        // highest weight; the entries between are already known.
        let (sg, jj, ii) = (e.sign, -e.j, -e.i);
        let (lo, hi) = (ii.min(jj), ii.max(jj));
        let at = |i, j| Entry { sign: sg, i, j };
        let mut acc = NcPoly::zero();
        for h in self.b.weights.indices().into_iter().filter(|&h| lo < h && h < hi) {
            let t = self.entry(at(-h, -jj))?.mul(&self.entry(at(h, ii))?);
            acc.add_scaled(&t, &self.c(jj, h));
        }
        let dinv = self.diagonal(sg, ii, true);
        let denom = if ii != -jj {
            let t = self.entry(at(-jj, -jj))?.mul(&self.entry(at(jj, ii))?);
            acc.add_scaled(&t, &self.c(jj, jj));
            self.c(jj, ii)
        } else {
            // Both ends involve X: L^I_I X = f X L^I_I.
            let f = self.weight(at(ii, ii), e)?;
            self.c(jj, jj) * &f + &self.c(jj, ii)
        };
        let out = acc.mul(&dinv).scale(&-denom.inv()?);
        self.memo.insert(e, out.clone());
        Ok(out)
    }
}

/// Sort key for elimination: words with more non-Cartan letters, then more
/// inversions, come last and so become pivots.
fn elimination_key(cartan: &[usize], w: &Word) -> (usize, usize, Vec<Letter>, Vec<Letter>) {
    let core: Vec<Letter> = w.letters().iter().copied().filter(|&l| !cartan.contains(&gen_of(l))).collect();
    let mut inv = 0;
    for x in 0..core.len() {
        for y in x + 1..core.len() {
            if gen_of(core[x]) > gen_of(core[y]) {
                inv += 1;
            }
        }
    }
    (core.len(), inv, core, w.letters().to_vec())
}

/// FRT algebra of U_q so(N). Generators: off-diagonal L⁻^i_j and L⁺^i_j
/// with i + j < 0 in the triangular support, and invertible Cartan
/// elements K_a = L⁻^a_a. Other entries are aliases. Exchange rules are
/// derived by exact elimination on the residuals of the RLL, mixed and
/// antipode relations.
pub fn frt_presentation(b: &RMatrixBundle<Scalar>) -> Result<Presentation<Scalar>, PresentationError> {
    let dim = b.dim();
    let n = b.weights.rank as i32;
    let sup: HashMap<Sign, Vec<(i32, i32)>> =
        [Sign::Minus, Sign::Plus].into_iter().map(|s| (s, support(b, s))).collect();
    let indep = |s: Sign| -> Vec<(i32, i32)> {
        sup[&s].iter().copied().filter(|&(i, j)| i != j && i + j < 0).collect()
    };

    let mut reg = Registry::default();
    let mut gens = HashMap::new();
    for (i, j) in indep(Sign::Minus) {
        gens.insert(Entry { sign: Sign::Minus, i, j }, reg.push(Generator::new("L-", &[i, j], Kind::FrtMinus, false)));
    }
    let cartan: Vec<usize> = (1..=n).map(|a| reg.push(Generator::new("L-", &[a, a], Kind::FrtMinus, true))).collect();
    for (i, j) in indep(Sign::Plus) {
        gens.insert(Entry { sign: Sign::Plus, i, j }, reg.push(Generator::new("L+", &[i, j], Kind::FrtPlus, false)));
    }
    let mut pres = Presentation::new(dim, Algebra::Frt, reg);
    let mut bld = Builder { b, sup: sup.clone(), gens: gens.clone(), cartan: cartan.clone(), memo: HashMap::new() };

    // Cartan exchange: K X = f X K.
    let mut sorted: Vec<(Entry, usize)> = gens.iter().map(|(&e, &g)| (e, g)).collect();
    sorted.sort();
    for &(e, g) in &sorted {
        for (a, &kg) in (1..=n).zip(&cartan) {
            let f = bld.weight(Entry { sign: Sign::Minus, i: a, j: a }, e)?;
            let (x, k) = (letter(g, false), letter(kg, false));
            let w = |l1, l2| Word::from_letters(&[l1, l2]);
            match e.sign {
                Sign::Minus => {
                    pres.set_rule(k, x, NcPoly::term(w(x, k), f.clone()));
                    pres.set_rule(inverse(k), x, NcPoly::term(w(x, inverse(k)), f.inv()?));
                }
                Sign::Plus => {
                    pres.set_rule(x, k, NcPoly::term(w(k, x), f.inv()?));
                    pres.set_rule(x, inverse(k), NcPoly::term(w(inverse(k), x), f));
                }
            }
        }
    }
    commute_all(&mut pres, &cartan);

    // Entries as polynomials; aliases for everything that is not a generator.
    let mut aliases = BTreeMap::new();
    for s in [Sign::Minus, Sign::Plus] {
        for &(i, j) in &sup[&s] {
            let e = Entry { sign: s, i, j };
            if !gens.contains_key(&e) && !(s == Sign::Minus && i == j && i > 0) {
                aliases.insert(e, bld.entry(e)?);
            }
        }
    }
    for (e, v) in &aliases {
        pres.aliases.insert(format!("{}[{},{}]", e.sign.base(), e.i, e.j), v.clone());
    }

    let mut raw: Vec<RawRelation<Scalar>> = frt_relations(b, Sign::Minus);
    raw.extend(frt_relations(b, Sign::Plus));
    raw.extend(mixed_relations(b));
    raw.extend(cartan_relations(b));
    let mut rels = Vec::with_capacity(raw.len());
    for r in &raw {
        let poly = r.eval(&mut |e| bld.entry(e), &|x, y| Ok::<_, PresentationError>(x.mul(y)))?;
        if !poly.is_zero() {
            rels.push((r.id.clone(), poly));
        }
    }

    derive_rules(&mut pres, &cartan, &rels)?;

    for (k, v) in pres.aliases.clone() {
        let v = pres.nf(&v)?;
        pres.aliases.insert(k, v);
    }
    pres.relations = rels;
    pres.metadata.insert(
        "conventions".into(),
        json!({
            "normal_order": "L-[i,j] (i+j<0) < L-[a,a] < L+[i,j] (i+j<0)",
            "rho": "rho^j_h(L+[i,k]) = Rhat^{ij}_{hk}, rho^j_h(L-[i,k]) = Rhat^-1^{ij}_{hk}",
            "cartan": "L-[a,a] = L+[-a,-a] invertible, inverse L+[a,a] = L-[-a,-a]",
        }),
    );
    Ok(pres)
}

/// Adds exchange rules until every relation reduces to zero. Each pass
/// row-reduces the nonzero residuals with the largest words as pivots and
/// turns every out-of-order two-letter pivot (after removing a Cartan
/// prefix) into a rule.
fn derive_rules(
    pres: &mut Presentation<Scalar>,
    cartan: &[usize],
    rels: &[(String, NcPoly<Scalar>)],
) -> Result<(), PresentationError> {
    for _ in 0..8 {
        let mut residuals = Vec::new();
        for (_, r) in rels {
            let x = pres.nf(r)?;
            if !x.is_zero() {
                residuals.push(x);
            }
        }
        if residuals.is_empty() {
            return Ok(());
        }
        let mut words: Vec<Word> = residuals.iter().flat_map(|r| r.terms().map(|(w, _)| w.clone())).collect();
        words.sort_by_key(|w| elimination_key(cartan, w));
        words.dedup();
        let col: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(c, w)| (w, c)).collect();
        let mut ech = Echelon::new();
        for r in &residuals {
            ech.insert(r.terms().map(|(w, c)| (col[w], c.clone())).collect())?;
        }
        let mut added = 0;
        let pivots: Vec<(usize, BTreeMap<usize, Scalar>)> = ech.rows().map(|(p, r)| (p, r.clone())).collect();
        for (pivot, row) in pivots {
            let w = &words[pivot];
            let ls = w.letters();
            let k = ls.iter().take_while(|&&l| cartan.contains(&gen_of(l))).count();
            let core = &ls[k..];
            if core.len() != 2 || gen_of(core[0]) <= gen_of(core[1]) || pres.rule(core[0], core[1]).is_some() {
                continue;
            }
            let prefix_inv = NcPoly::word(Word::from_letters(&ls[..k]).inverse());
            let mut rest = NcPoly::zero();
            for (&c, v) in &row {
                if c != pivot {
                    rest.add_term(words[c].clone(), &-v.clone());
                }
            }
            let rhs = pres.nf(&prefix_inv.mul(&rest))?;
            pres.set_rule(core[0], core[1], rhs);
            added += 1;
        }
        if added == 0 {
            let first = &residuals[0];
            return Err(PresentationError::Inconsistent(format!(
                "FRT relations do not close; residual {}",
                pres.fmt_poly(first)
            )));
        }
    }
    Err(PresentationError::Inconsistent("FRT rule derivation did not converge".into()))
}

use crate::gamma::GammaConfig;
use crate::DecouplingError;
use ncengine::word::{gen_of, inverse, is_inverse, letter};
use ncengine::{NcPoly, Presentation, Word};
use num_rational::BigRational;
use presentations::raw::antipode;
use presentations::{
    cross_presentation, euclidean_presentation, frt_presentation, letter_entry, mixed_relations, support, Entry, Sign,
};
use rmatrix::RMatrixBundle;
use scalars::{Coeff, Rat, Scalar};
use std::collections::BTreeMap;

/// Which homomorphism: φ̃⁻ on L⁻, φ̃⁺ on L⁺, or the glued map on both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Minus,
    Plus,
    Glued,
}

impl Which {
    pub fn parse(s: &str) -> Option<Which> {
        Some(match s {
            "minus" => Which::Minus,
            "plus" => Which::Plus,
            "glued" => Which::Glued,
            _ => return None,
        })
    }

    pub fn sign(self) -> Option<Sign> {
        match self {
            Which::Minus => Some(Sign::Minus),
            Which::Plus => Some(Sign::Plus),
            Which::Glued => None,
        }
    }
}

/// μ_a (or μ̄_a when `bar`) over the Euclidean presentation, normal ordered.
pub fn mu(eu: &Presentation<Scalar>, gamma: &GammaConfig, a: i32, bar: bool) -> Result<NcPoly<Scalar>, DecouplingError> {
    let odd = eu.dim % 2 == 1;
    let n = (eu.dim / 2) as i32;
    if a.abs() > n || (!odd && a == 0) {
        return Err(DecouplingError::Index(format!("mu index {a} is not a weight for N = {}", eu.dim)));
    }
    let g = gamma.get(a, bar)?.clone();
    // P_b⁻¹ = (√P_b)⁻², and P_0⁻¹ = (√p^0)⁻² for odd N.
    let p_inv = |b: i32| {
        let l = if b == 0 { eu.letter("sqrtp0", &[]) } else { eu.letter("sqrtP", &[b]) }.expect("scaling generator");
        NcPoly::word(Word::from_letters(&[inverse(l), inverse(l)]))
    };
    let p = |i: i32| eu.gen("p", &[i]);
    let w = if odd && a == 0 {
        p_inv(0)
    } else if !odd && a.abs() == 1 {
        // (p^{±1})⁻¹ = 2 P_1⁻² p^{∓1}, times L±^1_1 (L∓^1_1 for μ̄).
        let k = eu.letter("L-", &[1, 1]).expect("adjoined Cartan element");
        let k = if (a == 1) != bar { inverse(k) } else { k };
        p_inv(1).mul(&p_inv(1)).mul(&p(-a)).mul(&NcPoly::letter(k)).scale(&Scalar::from_int(2))
    } else {
        p_inv(a.abs()).mul(&p_inv(a.abs() - 1)).mul(&p(-a))
    };
    Ok(eu.nf(&w.scale(&g))?)
}

/// φ̃⁻(L⁻^i_j) = g^{i,−i}[μ_{−i}, p^{−j}]_q g_{−j,j}, and φ̃⁺ likewise with
/// μ̄ and q⁻¹.
pub fn phi_entry(
    eu: &Presentation<Scalar>,
    b: &RMatrixBundle<Scalar>,
    gamma: &GammaConfig,
    e: Entry,
) -> Result<NcPoly<Scalar>, DecouplingError> {
    let (bar, x) = match e.sign {
        Sign::Minus => (false, Scalar::q()),
        Sign::Plus => (true, Scalar::q_pow(-1)),
    };
    let m = mu(eu, gamma, -e.i, bar)?;
    let c = b.g_inv(e.i, -e.i) * &b.g(-e.j, e.j);
    Ok(eu.commutator(&m, &eu.gen("p", &[-e.j]), &x)?.scale(&c))
}

/// The Euclidean, FRT and cross presentations for one N and one γ
/// configuration, with φ̃ on every FRT entry (over A) and ζ̃ on every entry
/// (over A⋊H).
#[derive(Debug, Clone)]
pub struct Maps<C: Coeff> {
    pub bundle: RMatrixBundle<C>,
    pub gamma: GammaConfig,
    pub eu: Presentation<C>,
    pub frt: Presentation<C>,
    pub cross: Presentation<C>,
    phi: BTreeMap<Entry, NcPoly<C>>,
    zeta: BTreeMap<Entry, NcPoly<C>>,
}

impl Maps<Scalar> {
    pub fn new(dim: usize, gamma: GammaConfig) -> Result<Self, DecouplingError> {
        let v = gamma.violations(dim);
        if !v.is_empty() {
            return Err(DecouplingError::Gamma(v.join("; ")));
        }
        let b = RMatrixBundle::<Scalar>::new(dim)?;
        let eu = euclidean_presentation(&b)?;
        let frt = frt_presentation(&b)?;
        let mut phi = BTreeMap::new();
        for sign in [Sign::Minus, Sign::Plus] {
            for (i, j) in support(&b, sign) {
                let e = Entry { sign, i, j };
                // p^0 is stored as (√p^0)², which keeps products short.
                phi.insert(e, eu.reduce_roots(&phi_entry(&eu, &b, &gamma, e)?)?);
            }
        }
        let img = |e: Entry| phi.get(&e).cloned().unwrap_or_default();
        let idx = b.weights.indices();
        // X ◁ L^h_k = Σ_i φ̃(S L^h_i) X φ̃(L^i_k).
        let action = |x: ncengine::Letter, e: Entry| -> Result<NcPoly<Scalar>, presentations::PresentationError> {
            let mut acc = NcPoly::zero();
            for &i in &idx {
                let (c, s) = antipode(&b, e.sign, e.i, i);
                let (left, right) = (img(s), img(Entry { sign: e.sign, i, j: e.j }));
                if left.is_zero() || right.is_zero() {
                    continue;
                }
                let t = eu.product(&[&left.scale(&c), &NcPoly::letter(x), &right])?;
                acc = acc.add(&t);
            }
            Ok(eu.reduce_roots(&acc)?)
        };
        let cross = cross_presentation(&eu, &frt, &b, &action)?;
        let mut zeta = BTreeMap::new();
        for sign in [Sign::Minus, Sign::Plus] {
            for (i, j) in support(&b, sign) {
                // ζ̃(L^i_j) = Σ_h L^i_h φ̃(S L^h_j).
                let mut acc = NcPoly::zero();
                for &h in &idx {
                    let left = presentations::entry(&cross, sign, i, h);
                    let (c, s) = antipode(&b, sign, h, j);
                    let right = img(s);
                    if left.is_zero() || right.is_zero() {
                        continue;
                    }
                    let right = cross.import(&right, &eu.registry)?.scale(&c);
                    acc = acc.add(&cross.mul(&left, &right)?);
                }
                zeta.insert(Entry { sign, i, j }, cross.reduce_roots(&acc)?);
            }
        }
        Ok(Maps { bundle: b, gamma, eu, frt, cross, phi, zeta })
    }

    /// The same data with s specialized to the rational s0.
    pub fn eval(&self, s0: &BigRational) -> Result<Maps<Rat>, DecouplingError> {
        let f = |c: &Scalar| Rat::embed(c, s0);
        let m = |x: &BTreeMap<Entry, NcPoly<Scalar>>| -> Result<_, scalars::ScalarError> {
            x.iter().map(|(e, p)| Ok((*e, p.try_map_coeffs(f)?))).collect()
        };
        Ok(Maps {
            bundle: self.bundle.eval(s0)?,
            gamma: self.gamma.clone(),
            eu: self.eu.try_map_coeffs(f)?,
            frt: self.frt.try_map_coeffs(f)?,
            cross: self.cross.try_map_coeffs(f)?,
            phi: m(&self.phi)?,
            zeta: m(&self.zeta)?,
        })
    }

    /// Printable φ̃ image: normal form with p^0 written as (√p^0)².
    pub fn phi_display(&self, which: Which, e: Entry) -> Result<NcPoly<Scalar>, DecouplingError> {
        if which == Which::Glued {
            self.check_gluing()?;
        }
        Ok(self.eu.reduce_roots(&self.phi(which, e)?)?)
    }
}

impl<C: Coeff> Maps<C> {
    pub fn dim(&self) -> usize {
        self.bundle.dim()
    }

    pub fn entries(&self, sign: Sign) -> Vec<Entry> {
        self.phi.keys().copied().filter(|e| e.sign == sign).collect()
    }

    fn check_sign(which: Which, e: Entry) -> Result<(), DecouplingError> {
        match which.sign() {
            Some(s) if s != e.sign => Err(DecouplingError::Index(format!(
                "{} entry given to the {} map",
                e.sign.base(),
                if s == Sign::Minus { "minus" } else { "plus" }
            ))),
            _ => Ok(()),
        }
    }

    /// φ̃(L^i_j) over A; zero outside the support.
    pub fn phi(&self, which: Which, e: Entry) -> Result<NcPoly<C>, DecouplingError> {
        Self::check_sign(which, e)?;
        Ok(self.phi.get(&e).cloned().unwrap_or_default())
    }

    /// ζ̃(L^i_j) over A⋊H; zero outside the support.
    pub fn zeta(&self, which: Which, e: Entry) -> Result<NcPoly<C>, DecouplingError> {
        if which == Which::Glued {
            return Err(DecouplingError::Index("zeta is defined for plus or minus".into()));
        }
        Self::check_sign(which, e)?;
        Ok(self.zeta.get(&e).cloned().unwrap_or_default())
    }

    /// Entry carried by an FRT letter of `src`. Cartan letters are read as
    /// L⁻^a_a under the minus and glued maps and as L⁺^{−a}_{−a} under plus.
    fn entry_of(&self, which: Which, src: &Presentation<C>, l: ncengine::Letter) -> Result<Entry, DecouplingError> {
        let e = letter_entry(src, l)
            .ok_or_else(|| DecouplingError::Index(format!("{} is not an FRT letter", src.registry.letter_name(l))))?;
        Ok(match which {
            Which::Plus if e.sign == Sign::Minus && e.i == e.j => Entry { sign: Sign::Plus, i: -e.i, j: -e.j },
            _ => e,
        })
    }

    /// φ̃ extended multiplicatively to a polynomial over `src` (the FRT or
    /// cross presentation). Letters that are generators of A map to
    /// themselves, which covers the adjoined Cartan element for even N.
    pub fn phi_poly(&self, which: Which, p: &NcPoly<C>, src: &Presentation<C>) -> Result<NcPoly<C>, DecouplingError> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::constant(c.clone());
            for &l in w.letters() {
                let g = src.registry.get(gen_of(l));
                let img = match self.eu.letter(&g.base, &g.indices) {
                    Some(el) => NcPoly::letter(letter(gen_of(el), is_inverse(l))),
                    None => {
                        let e = self.entry_of(which, src, l)?;
                        self.phi(which, e)?
                    }
                };
                acc = self.eu.mul(&acc, &img)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// ζ̃ extended multiplicatively to a polynomial over the FRT presentation.
    pub fn zeta_poly(&self, which: Which, p: &NcPoly<C>) -> Result<NcPoly<C>, DecouplingError> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::constant(c.clone());
            for &l in w.letters() {
                let e = self.entry_of(which, &self.frt, l)?;
                acc = self.cross.mul(&acc, &self.zeta(which, e)?)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Residuals of the mixed relations under the glued map, keyed by
    /// relation id; only the nonzero ones are returned.
    pub fn gluing_residuals(&self) -> Result<Vec<(String, NcPoly<C>)>, DecouplingError> {
        if self.dim().is_multiple_of(2) {
            return Err(DecouplingError::EvenGluing);
        }
        let mut out = Vec::new();
        for r in mixed_relations(&self.bundle) {
            let img = r.eval(&mut |e| self.phi(Which::Glued, e), &|x, y| Ok::<_, DecouplingError>(self.eu.mul(x, y)?))?;
            if let Some(w) = self.eu.is_zero_mod(&img)? {
                out.push((r.id.clone(), w));
            }
        }
        Ok(out)
    }

    /// Fails with the first violated mixed relation unless φ̃⁻ and φ̃⁺ glue.
    pub fn check_gluing(&self) -> Result<(), DecouplingError> {
        match self.gluing_residuals()?.into_iter().next() {
            None => Ok(()),
            Some((id, w)) => Err(DecouplingError::Gluing(format!(
                "mixed relation {id} is violated: {}",
                self.eu.fmt_poly(&w)
            ))),
        }
    }
}


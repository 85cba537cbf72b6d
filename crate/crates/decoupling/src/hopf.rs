use crate::DecouplingError;
use ncengine::{NcPoly, Presentation, Word};
use presentations::raw::antipode;
use presentations::{entry, letter_entry, Entry};
use rmatrix::RMatrixBundle;
use scalars::Coeff;
use std::collections::BTreeMap;

/// Element of H ⊗ H as a sum of c · (left word ⊗ right word), both sides
/// in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<C> {
    pub terms: BTreeMap<(Word, Word), C>,
}

impl<C: Coeff> Tensor<C> {
    fn add_term(&mut self, key: (Word, Word), c: C) {
        let v = match self.terms.remove(&key) {
            Some(x) => x + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    fn from_pair(a: &NcPoly<C>, b: &NcPoly<C>) -> Self {
        let mut t = Tensor { terms: BTreeMap::new() };
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                t.add_term((u.clone(), v.clone()), x.clone() * y);
            }
        }
        t
    }

    fn mul(&self, o: &Self, h: &Presentation<C>) -> Result<Self, DecouplingError> {
        let mut t = Tensor { terms: BTreeMap::new() };
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let l = h.nf(&NcPoly::word(a.concat(c)))?;
                let r = h.nf(&NcPoly::word(b.concat(d)))?;
                for (k, v) in Tensor::from_pair(&l, &r).terms {
                    t.add_term(k, v * x * y);
                }
            }
        }
        Ok(t)
    }

    /// Applies `f` to the left factor and `g` to the right one and
    /// multiplies the results in `h`.
    pub fn contract(
        &self,
        h: &Presentation<C>,
        f: impl Fn(&NcPoly<C>) -> Result<NcPoly<C>, DecouplingError>,
        g: impl Fn(&NcPoly<C>) -> Result<NcPoly<C>, DecouplingError>,
    ) -> Result<NcPoly<C>, DecouplingError> {
        let mut out = NcPoly::zero();
        for ((a, b), c) in &self.terms {
            let t = h.mul(&f(&NcPoly::word(a.clone()))?, &g(&NcPoly::word(b.clone()))?)?;
            out.add_scaled(&t, c);
        }
        Ok(out)
    }
}

/// Coproduct, counit and antipode of the FRT algebra on its generators,
/// extended (anti)multiplicatively.
pub struct Hopf<'a, C: Coeff> {
    pub frt: &'a Presentation<C>,
    pub bundle: &'a RMatrixBundle<C>,
}

impl<C: Coeff> Hopf<'_, C> {
    fn entry_of(&self, l: ncengine::Letter) -> Result<Entry, DecouplingError> {
        letter_entry(self.frt, l)
            .ok_or_else(|| DecouplingError::Index(format!("{} is not an FRT letter", self.frt.registry.letter_name(l))))
    }

    /// Δ(L^i_j) = Σ_h L^i_h ⊗ L^h_j.
    pub fn coproduct(&self, p: &NcPoly<C>) -> Result<Tensor<C>, DecouplingError> {
        let mut out = Tensor { terms: BTreeMap::new() };
        for (w, c) in p.terms() {
            let mut acc = Tensor::from_pair(&NcPoly::one(), &NcPoly::one());
            for &l in w.letters() {
                let e = self.entry_of(l)?;
                let mut d = Tensor { terms: BTreeMap::new() };
                for h in self.bundle.weights.indices() {
                    let x = entry(self.frt, e.sign, e.i, h);
                    let y = entry(self.frt, e.sign, h, e.j);
                    for (k, v) in Tensor::from_pair(&x, &y).terms {
                        d.add_term(k, v);
                    }
                }
                acc = acc.mul(&d, self.frt)?;
            }
            for (k, v) in acc.terms {
                out.add_term(k, v * c);
            }
        }
        Ok(out)
    }

    /// ε(L^i_j) = δ^i_j.
    pub fn counit(&self, p: &NcPoly<C>) -> Result<C, DecouplingError> {
        let mut out = C::zero();
        for (w, c) in p.terms() {
            let mut all = true;
            for &l in w.letters() {
                let e = self.entry_of(l)?;
                all &= e.i == e.j;
            }
            if all {
                out = out + c;
            }
        }
        Ok(out)
    }

    /// S(L^j_h) = g_{h,−h} g^{−j,j} L^{−h}_{−j}, antimultiplicative.
    pub fn antipode(&self, p: &NcPoly<C>) -> Result<NcPoly<C>, DecouplingError> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::constant(c.clone());
            for &l in w.letters().iter().rev() {
                let e = self.entry_of(l)?;
                let (k, s) = antipode(self.bundle, e.sign, e.i, e.j);
                acc = self.frt.mul(&acc, &entry(self.frt, s.sign, s.i, s.j).scale(&k))?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

use crate::word::{Letter, Word};
use scalars::Coeff;
use std::collections::BTreeMap;

/// Linear combination of words. Zero coefficients are never stored, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NcPoly<C> {
    fn default() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> NcPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, C::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::from_letters(&[l]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// The constant term if the polynomial is a scalar.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Word::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// self += k·other
    pub fn add_scaled(&mut self, other: &Self, k: &C) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c.clone() * k));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one());
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.clone() * k)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    /// Concatenation product, bilinear, no reduction beyond cancelling
    /// g·g⁻¹ at the junction.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1.clone() * c2));
            }
        }
        out
    }

    /// Commutator self·other − x·other·self.
    pub fn q_commutator(&self, other: &Self, x: &C) -> Self {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-x.clone());
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> NcPoly<D> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff, E>(&self, mut f: impl FnMut(&C) -> Result<D, E>) -> Result<NcPoly<D>, E> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Rewrites every letter through `f`, keeping coefficients.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut nw = Word::one();
            for &l in w.letters() {
                nw.push(f(l));
            }
            out.add_term(nw, c);
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl<C: Coeff> FromIterator<(Word, C)> for NcPoly<C> {
    fn from_iter<I: IntoIterator<Item = (Word, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in iter {
            p.add_term(w, &c);
        }
        p
    }
}

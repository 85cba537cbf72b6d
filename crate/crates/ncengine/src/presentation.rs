use crate::registry::{Kind, Registry};
use crate::word::{gen_of, inverse, is_inverse, letter, Letter, Word};
use crate::{EngineError, NcPoly};
use scalars::Coeff;
use serde_json::{Map, Value};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    Euclidean,
    Frt,
    Cross,
}

impl Algebra {
    pub fn as_str(self) -> &'static str {
        match self {
            Algebra::Euclidean => "euclidean",
            Algebra::Frt => "frt",
            Algebra::Cross => "cross",
        }
    }

    pub fn parse(s: &str) -> Option<Algebra> {
        Some(match s {
            "euclidean" => Algebra::Euclidean,
            "frt" => Algebra::Frt,
            "cross" => Algebra::Cross,
            _ => return None,
        })
    }
}

/// g^power = value, applied only by `is_zero_mod`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRule<C> {
    pub gen: usize,
    pub power: usize,
    pub value: NcPoly<C>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Default)]
pub struct OverlapReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

const MAX_DEPTH: usize = 4096;

type Cache<C> = RwLock<HashMap<(Word, Letter), Arc<NcPoly<C>>>>;

/// left·right = value, read off a root relation: the reduced root value
/// has a single term of top degree, which is a two-letter word.
#[derive(Debug, Clone)]
struct PairRoot<C> {
    left: Letter,
    right: Letter,
    value: NcPoly<C>,
}

/// Pair roots derived from the first `.0` root relations.
type PairCache<C> = RwLock<Option<(usize, Arc<Vec<PairRoot<C>>>)>>;

/// Ordered generators with two-letter rewrite rules. Immutable once built;
/// normal forms are memoized internally.
#[derive(Debug)]
pub struct Presentation<C: Coeff> {
    pub dim: usize,
    pub algebra: Algebra,
    pub registry: Registry,
    rules: Vec<Option<NcPoly<C>>>,
    pub roots: Vec<RootRule<C>>,
    /// Names that are not generators but denote polynomials, such as the
    /// diagonal and eliminated FRT entries.
    pub aliases: BTreeMap<String, NcPoly<C>>,
    /// Defining relations, each of which must reduce to zero.
    pub relations: Vec<(String, NcPoly<C>)>,
    pub metadata: Map<String, Value>,
    pub degree_cap: usize,
    cache: Cache<C>,
    pairs: PairCache<C>,
}

impl<C: Coeff> Clone for Presentation<C> {
    fn clone(&self) -> Self {
        Presentation {
            dim: self.dim,
            algebra: self.algebra,
            registry: self.registry.clone(),
            rules: self.rules.clone(),
            roots: self.roots.clone(),
            aliases: self.aliases.clone(),
            relations: self.relations.clone(),
            metadata: self.metadata.clone(),
            degree_cap: self.degree_cap,
            cache: RwLock::default(),
            pairs: RwLock::default(),
        }
    }
}

impl<C: Coeff> Presentation<C> {
    pub fn new(dim: usize, algebra: Algebra, registry: Registry) -> Self {
        let nl = 2 * registry.len();
        Presentation {
            dim,
            algebra,
            registry,
            rules: vec![None; nl * nl],
            roots: Vec::new(),
            aliases: BTreeMap::new(),
            relations: Vec::new(),
            metadata: Map::new(),
            degree_cap: 12,
            cache: RwLock::default(),
            pairs: RwLock::default(),
        }
    }

    fn nl(&self) -> usize {
        2 * self.registry.len()
    }

    pub fn letter(&self, base: &str, indices: &[i32]) -> Option<Letter> {
        self.registry.letter(base, indices)
    }

    pub fn gen(&self, base: &str, indices: &[i32]) -> NcPoly<C> {
        NcPoly::letter(self.letter(base, indices).unwrap_or_else(|| panic!("no generator {base}{indices:?}")))
    }

    pub fn set_rule(&mut self, a: Letter, b: Letter, rhs: NcPoly<C>) {
        let nl = self.nl();
        self.rules[a as usize * nl + b as usize] = Some(rhs);
        self.cache.write().unwrap().clear();
    }

    pub fn rule(&self, a: Letter, b: Letter) -> Option<&NcPoly<C>> {
        self.rules[a as usize * self.nl() + b as usize].as_ref()
    }

    /// All rules in letter order.
    pub fn rules(&self) -> impl Iterator<Item = (Letter, Letter, &NcPoly<C>)> {
        let nl = self.nl();
        self.rules.iter().enumerate().filter_map(move |(k, r)| {
            r.as_ref().map(|r| ((k / nl) as Letter, (k % nl) as Letter, r))
        })
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    pub fn clear_cache(&self) {
        self.cache.write().unwrap().clear();
        *self.pairs.write().unwrap() = None;
    }

    pub fn kind(&self, l: Letter) -> Kind {
        self.registry.kind(l)
    }

    /// Letters that count towards the degree: those of non-invertible
    /// generators. Scaling and Cartan letters are weight-zero.
    pub fn degree(&self, w: &Word) -> usize {
        w.letters().iter().filter(|&&l| !self.registry.get(gen_of(l)).invertible).count()
    }

    fn reducible(&self, a: Letter, b: Letter) -> bool {
        a == inverse(b) || self.rule(a, b).is_some()
    }

    /// Out-of-order adjacent pairs that have no rule.
    pub fn missing_rules(&self) -> Vec<(Letter, Letter)> {
        let ls = self.registry.letters();
        let mut out = Vec::new();
        for &a in &ls {
            for &b in &ls {
                if gen_of(a) > gen_of(b) && self.rule(a, b).is_none() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Rules whose right side is not in normal order under the rule table.
    pub fn non_normal_rules(&self) -> Vec<(Letter, Letter)> {
        self.rules()
            .filter(|(_, _, rhs)| rhs.terms().any(|(w, _)| w.letters().windows(2).any(|p| self.reducible(p[0], p[1]))))
            .map(|(a, b, _)| (a, b))
            .collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !w.letters().windows(2).any(|p| self.reducible(p[0], p[1]))
    }

    fn cap_check(&self, w: &Word, cap: usize) -> Result<(), EngineError> {
        if self.degree(w) > cap {
            return Err(EngineError::DegreeCap { word: self.registry.fmt_word(w), cap });
        }
        Ok(())
    }

    /// Normal form of w·l for a normal word w.
    fn append(&self, w: &Word, l: Letter, depth: usize, cap: usize) -> Result<Arc<NcPoly<C>>, EngineError> {
        if depth > MAX_DEPTH {
            return Err(EngineError::NonTerminating(self.registry.fmt_word(w)));
        }
        let key = (w.clone(), l);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = match w.letters().last() {
            None => NcPoly::letter(l),
            Some(&last) if last == inverse(l) => {
                let mut p = w.clone();
                p.0.pop();
                NcPoly::word(p)
            }
            Some(&last) => match self.rule(last, l) {
                Some(rhs) => {
                    let mut prefix = w.clone();
                    prefix.0.pop();
                    let mut acc = NcPoly::zero();
                    for (u, c) in rhs.terms() {
                        acc.add_scaled(&self.extend(&prefix, u, depth + 1, cap)?, c);
                    }
                    acc
                }
                None => {
                    let mut nw = w.clone();
                    nw.0.push(l);
                    self.cap_check(&nw, cap)?;
                    NcPoly::word(nw)
                }
            },
        };
        let out = Arc::new(out);
        self.cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of w·u for a normal word w.
    fn extend(&self, w: &Word, u: &Word, depth: usize, cap: usize) -> Result<NcPoly<C>, EngineError> {
        let mut cur = NcPoly::word(w.clone());
        for &l in u.letters() {
            let mut next = NcPoly::zero();
            for (v, c) in cur.terms() {
                next.add_scaled(&*self.append(v, l, depth, cap)?, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn nf_word(&self, w: &Word) -> Result<NcPoly<C>, EngineError> {
        self.cap_check(w, self.degree_cap)?;
        self.extend(&Word::one(), w, 0, self.degree_cap)
    }

    /// Normal form: every word rewritten until no rule applies.
    pub fn nf(&self, p: &NcPoly<C>) -> Result<NcPoly<C>, EngineError> {
        self.nf_capped(p, self.degree_cap)
    }

    fn nf_capped(&self, p: &NcPoly<C>, cap: usize) -> Result<NcPoly<C>, EngineError> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            self.cap_check(w, cap)?;
            out.add_scaled(&self.extend(&Word::one(), w, 0, cap)?, c);
        }
        Ok(out)
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &NcPoly<C>, b: &NcPoly<C>) -> Result<NcPoly<C>, EngineError> {
        let mut out = NcPoly::zero();
        for (w, c) in a.terms() {
            for (u, d) in b.terms() {
                out.add_scaled(&self.extend(w, u, 0, self.degree_cap)?, &(c.clone() * d));
            }
        }
        // `extend` assumes its first argument is normal; renormalize when
        // the left factor was not.
        if a.terms().all(|(w, _)| self.is_normal(w)) {
            Ok(out)
        } else {
            self.nf(&out)
        }
    }

    pub fn product(&self, factors: &[&NcPoly<C>]) -> Result<NcPoly<C>, EngineError> {
        let mut acc = NcPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// [a, b]_x = ab − x·ba in normal form.
    pub fn commutator(&self, a: &NcPoly<C>, b: &NcPoly<C>, x: &C) -> Result<NcPoly<C>, EngineError> {
        let mut out = self.mul(a, b)?;
        out.add_scaled(&self.mul(b, a)?, &-x.clone());
        Ok(out)
    }

    /// Canonical forms modulo the root relations; see `reduce_roots`.
    pub fn canonical_forms(&self, polys: &[NcPoly<C>]) -> Result<Vec<NcPoly<C>>, EngineError> {
        polys.iter().map(|p| self.reduce_roots(p)).collect()
    }

    /// Roots X^k = v with v a single letter, as letter → X^k.
    fn monomial_roots(&self) -> HashMap<Letter, Word> {
        let mut subst = HashMap::new();
        for r in &self.roots {
            let mut t = r.value.terms();
            if let (Some((w, c)), None) = (t.next(), t.next()) {
                if w.len() == 1 && c.is_one() {
                    subst.insert(w.letters()[0], Word(std::iter::repeat_n(letter(r.gen, false), r.power).collect()));
                }
            }
        }
        subst
    }

    fn pair_roots(&self) -> Result<Arc<Vec<PairRoot<C>>>, EngineError> {
        if let Some((n, p)) = &*self.pairs.read().unwrap() {
            if *n == self.roots.len() {
                return Ok(p.clone());
            }
        }
        let mono = self.monomial_roots();
        let mut pairs = Vec::new();
        for r in &self.roots {
            let v = self.reduce_with(&r.value, &mono, &pairs)?;
            let top = v.terms().map(|(w, _)| self.degree(w)).max().unwrap_or(0);
            let mut lead = v.terms().filter(|(w, _)| self.degree(w) == top);
            let (w, a) = match (lead.next(), lead.next()) {
                (Some((w, a)), None) if w.len() == 2 && top == 2 => (w.clone(), a.clone()),
                _ => continue,
            };
            // left·right = a⁻¹ (X^k − (v − a·left·right)).
            let mut rest = v.clone();
            rest.add_term(w.clone(), &-a.clone());
            let xk = NcPoly::word(Word(std::iter::repeat_n(letter(r.gen, false), r.power).collect()));
            let value = self.nf(&xk.sub(&rest).scale(&a.inv().map_err(EngineError::Scalar)?))?;
            pairs.push(PairRoot { left: w.letters()[0], right: w.letters()[1], value });
        }
        let pairs = Arc::new(pairs);
        *self.pairs.write().unwrap() = Some((self.roots.len(), pairs.clone()));
        Ok(pairs)
    }

    /// Canonical form modulo the root relations. Generators that a root
    /// identifies with a scaling monomial (p^0 = (√p^0)²) are replaced by
    /// it, and every other root X^k = v is used in the degree-lowering
    /// direction: the top term of v (p^{−a}p^a for the radii) is traded for
    /// X^k and lower terms. Normal words with arbitrary scaling exponents
    /// and no such pair form a basis, so the result is zero exactly when
    /// `p` vanishes modulo the roots. Also the display form of φ̃ images.
    pub fn reduce_roots(&self, p: &NcPoly<C>) -> Result<NcPoly<C>, EngineError> {
        let pairs = self.pair_roots()?;
        self.reduce_with(p, &self.monomial_roots(), &pairs)
    }

    fn reduce_with(
        &self,
        p: &NcPoly<C>,
        mono: &HashMap<Letter, Word>,
        pairs: &[PairRoot<C>],
    ) -> Result<NcPoly<C>, EngineError> {
        let mut cur = self.nf(p)?;
        // Each pass removes a p^0 (reordering translations can bring one
        // back) or lowers the degree of a word, so this terminates.
        loop {
            let mut changed = false;
            let mut next = NcPoly::zero();
            for (w, c) in cur.terms() {
                if w.letters().iter().any(|l| mono.contains_key(l)) {
                    let mut nw = Word::one();
                    for &l in w.letters() {
                        match mono.get(&l) {
                            Some(u) => u.letters().iter().for_each(|&x| nw.push(x)),
                            None => nw.push(l),
                        }
                    }
                    next.add_scaled(&self.nf_word(&nw)?, c);
                    changed = true;
                } else if let Some(r) = self.reduce_pair(w, pairs)? {
                    next.add_scaled(&r, c);
                    changed = true;
                } else {
                    next.add_term(w.clone(), c);
                }
            }
            cur = next;
            if !changed {
                return Ok(cur);
            }
        }
    }

    /// Rewrites one occurrence of a pair root in a normal word. The left
    /// letter is moved right to meet the right letter, which needs every
    /// letter in between to q-commute with it; otherwise the pair is
    /// skipped.
    fn reduce_pair(&self, w: &Word, pairs: &[PairRoot<C>]) -> Result<Option<NcPoly<C>>, EngineError> {
        let ls = w.letters();
        'pairs: for pr in pairs {
            let (Some(i), Some(j)) = (
                ls.iter().rposition(|&l| l == pr.left),
                ls.iter().position(|&l| l == pr.right),
            ) else {
                continue;
            };
            if i > j {
                continue;
            }
            let mut coeff = C::one();
            for &m in &ls[i + 1..j] {
                // left·m = c⁻¹ m·left when m·left → c left·m.
                let Some(rhs) = self.rule(m, pr.left) else { continue 'pairs };
                let mut t = rhs.terms();
                match (t.next(), t.next()) {
                    (Some((u, c)), None) if u.letters() == [pr.left, m] => {
                        coeff = coeff * &c.inv().map_err(EngineError::Scalar)?;
                    }
                    _ => continue 'pairs,
                }
            }
            let mut pre: Vec<Letter> = ls[..i].to_vec();
            pre.extend_from_slice(&ls[i + 1..j]);
            let pre = NcPoly::word(Word(pre.as_slice().into()));
            let post = NcPoly::word(Word(ls[j + 1..].into()));
            let out = self.nf(&pre.mul(&pr.value).mul(&post))?;
            return Ok(Some(out.scale(&coeff)));
        }
        Ok(None)
    }

    /// Zero test modulo the root relations. Returns `None` when `p`
    /// vanishes, otherwise the canonical residual as witness.
    pub fn is_zero_mod(&self, p: &NcPoly<C>) -> Result<Option<NcPoly<C>>, EngineError> {
        let r = self.reduce_roots(p)?;
        Ok(if r.is_zero() { None } else { Some(r) })
    }

    /// Rewrites w at position k with the rule (or cancellation) there.
    fn rewrite_at(&self, w: &Word, k: usize) -> NcPoly<C> {
        let ls = w.letters();
        let pre = NcPoly::word(Word(ls[..k].into()));
        let post = NcPoly::word(Word(ls[k + 2..].into()));
        let mid = if ls[k] == inverse(ls[k + 1]) {
            NcPoly::one()
        } else {
            self.rule(ls[k], ls[k + 1]).cloned().unwrap_or_default()
        };
        pre.mul(&mid).mul(&post)
    }

    /// Resolves every chain of `degree` letters in which each adjacent pair
    /// is reducible, along each reducible position, and compares the
    /// results modulo the root relations.
    pub fn check_overlaps(&self, degree: usize) -> Result<OverlapReport, EngineError> {
        let ls = self.registry.letters();
        let mut chains: Vec<Vec<Letter>> = ls.iter().map(|&l| vec![l]).collect();
        for _ in 1..degree {
            let mut next = Vec::new();
            for c in &chains {
                let last = *c.last().unwrap();
                for &l in &ls {
                    if self.reducible(last, l) {
                        let mut d = c.clone();
                        d.push(l);
                        next.push(d);
                    }
                }
            }
            chains = next;
        }
        use rayon::prelude::*;
        let results: Vec<Result<Option<Mismatch>, EngineError>> = chains
            .par_iter()
            .map(|c| {
                // Built from raw letters; `Word(..)` skips cancellation.
                let w = Word(c.as_slice().into());
                let first = self.nf(&self.rewrite_at(&w, 0))?;
                for k in 1..degree - 1 {
                    let r = self.nf(&self.rewrite_at(&w, k))?;
                    if self.is_zero_mod(&first.sub(&r))?.is_some() {
                        return Ok(Some(Mismatch {
                            word: self.registry.fmt_word(&w),
                            left: self.registry.fmt_poly(&first),
                            right: self.registry.fmt_poly(&r),
                        }));
                    }
                }
                Ok(None)
            })
            .collect();
        let mut report = OverlapReport { checked: results.len(), mismatches: Vec::new() };
        for r in results {
            if let Some(m) = r? {
                report.mismatches.push(m);
            }
        }
        Ok(report)
    }

    /// Same presentation with every coefficient mapped through `f`.
    pub fn try_map_coeffs<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Presentation<D>, E> {
        let m = |p: &NcPoly<C>| p.try_map_coeffs(&f);
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            rules.push(match r {
                Some(p) => Some(m(p)?),
                None => None,
            });
        }
        Ok(Presentation {
            dim: self.dim,
            algebra: self.algebra,
            registry: self.registry.clone(),
            rules,
            roots: self
                .roots
                .iter()
                .map(|r| Ok(RootRule { gen: r.gen, power: r.power, value: m(&r.value)? }))
                .collect::<Result<_, E>>()?,
            aliases: self.aliases.iter().map(|(k, v)| Ok((k.clone(), m(v)?))).collect::<Result<_, E>>()?,
            relations: self.relations.iter().map(|(k, v)| Ok((k.clone(), m(v)?))).collect::<Result<_, E>>()?,
            metadata: self.metadata.clone(),
            degree_cap: self.degree_cap,
            cache: RwLock::default(),
            pairs: RwLock::default(),
        })
    }

    /// Looks up a generator or alias by printed name.
    pub fn named(&self, base: &str, indices: &[i32]) -> Option<NcPoly<C>> {
        if let Some(l) = self.letter(base, indices) {
            return Some(NcPoly::letter(l));
        }
        let name = crate::registry::Generator::new(base, indices, Kind::Translation, false).name();
        self.aliases.get(&name).cloned()
    }

    /// Moves a polynomial over another registry into this one by
    /// generator names.
    pub fn import(&self, p: &NcPoly<C>, from: &Registry) -> Result<NcPoly<C>, EngineError> {
        let map = from
            .embedding(&self.registry)
            .ok_or_else(|| EngineError::UnknownGenerator("registry is not a subset".into()))?;
        Ok(p.map_letters(|l| letter(map[gen_of(l)], is_inverse(l))))
    }
}

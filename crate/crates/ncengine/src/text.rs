//! Canonical printing, the expression grammar, and presentation JSON.

use crate::presentation::{Algebra, Presentation, RootRule};
use crate::registry::{Generator, Kind, Registry};
use crate::word::{gen_of, is_inverse, Letter, Word};
use crate::{EngineError, NcPoly};
use scalars::{parse_with, Coeff, Grammar, Scalar};
use serde_json::{json, Map, Value};

fn fmt_coeff<C: Coeff>(c: &C) -> String {
    let s = c.to_string();
    let plain = s.strip_prefix('-').unwrap_or(&s);
    if !plain.is_empty() && plain.chars().all(|ch| ch.is_ascii_digit()) {
        s
    } else {
        format!("({s})")
    }
}

impl Registry {
    pub fn fmt_letter_power(&self, l: Letter, k: usize) -> String {
        let g = self.get(gen_of(l));
        match (is_inverse(l), k) {
            (false, 1) => g.name(),
            (false, k) => format!("{g}^{k}"),
            (true, k) => format!("{g}^-{k}"),
        }
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w.runs().into_iter().map(|(l, k)| self.fmt_letter_power(l, k)).collect();
        parts.join("*")
    }

    /// Canonical text; parses back to the same polynomial.
    pub fn fmt_poly<C: Coeff>(&self, p: &NcPoly<C>) -> String {
        let mut out = String::new();
        for (w, c) in p.terms() {
            let t = if w.is_empty() {
                fmt_coeff(c)
            } else if c.is_one() {
                self.fmt_word(w)
            } else if (-c.clone()).is_one() {
                format!("-{}", self.fmt_word(w))
            } else {
                format!("{}*{}", fmt_coeff(c), self.fmt_word(w))
            };
            if out.is_empty() {
                out = t;
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Grammar over a presentation: atoms are generators and aliases.
pub struct PolyGrammar<'a> {
    pres: &'a Presentation<Scalar>,
}

impl Grammar for PolyGrammar<'_> {
    type Value = NcPoly<Scalar>;

    fn scalar(&self, s: Scalar) -> Self::Value {
        NcPoly::constant(s)
    }

    fn atom(&self, name: &str, indices: &[i64]) -> Result<Self::Value, String> {
        let idx: Vec<i32> = indices.iter().map(|&i| i as i32).collect();
        if let Some(p) = self.pres.named(name, &idx) {
            return Ok(p);
        }
        // Matrix entries outside the triangular support vanish.
        let n = (self.pres.dim / 2) as i32;
        let valid = |i: i32| i.abs() <= n && (i != 0 || self.pres.dim % 2 == 1);
        if (name == "L+" || name == "L-") && idx.len() == 2 && idx.iter().all(|&i| valid(i)) {
            return Ok(NcPoly::zero());
        }
        let shown = if idx.is_empty() { name.to_string() } else { format!("{name}{idx:?}") };
        Err(format!("unknown generator {shown}"))
    }

    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        a.add(&b)
    }

    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        a.mul(&b)
    }

    fn neg(&self, a: Self::Value) -> Self::Value {
        a.neg()
    }

    fn pow(&self, a: Self::Value, k: i64) -> Result<Self::Value, String> {
        let base = if k >= 0 { a } else { self.invert(&a)? };
        let mut acc = NcPoly::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String> {
        match b.as_constant() {
            Some(c) => Ok(a.scale(&c.inv().map_err(|e| e.to_string())?)),
            None => Err("division by a non-scalar".into()),
        }
    }
}

impl PolyGrammar<'_> {
    /// Inverse of a monomial in invertible letters.
    fn invert(&self, a: &NcPoly<Scalar>) -> Result<NcPoly<Scalar>, String> {
        let mut terms = a.terms();
        let (w, c) = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            _ => return Err("only monomials can be inverted".into()),
        };
        for &l in w.letters() {
            if !self.pres.registry.get(gen_of(l)).invertible {
                return Err(format!("{} is not invertible", self.pres.registry.letter_name(l)));
            }
        }
        let c = c.inv().map_err(|e| e.to_string())?;
        Ok(NcPoly::term(w.inverse(), c))
    }
}

impl Presentation<Scalar> {
    /// Parses an expression over this presentation's generators. The
    /// result is not normal ordered.
    pub fn parse(&self, input: &str) -> Result<NcPoly<Scalar>, EngineError> {
        Ok(parse_with(&PolyGrammar { pres: self }, input)?)
    }

    pub fn parse_nf(&self, input: &str) -> Result<NcPoly<Scalar>, EngineError> {
        self.nf(&self.parse(input)?)
    }

    pub fn from_json(v: &Value) -> Result<Self, EngineError> {
        let bad = |m: &str| EngineError::Json(m.to_string());
        let dim = v["N"].as_u64().ok_or_else(|| bad("N"))? as usize;
        let algebra = Algebra::parse(v["algebra"].as_str().ok_or_else(|| bad("algebra"))?)
            .ok_or_else(|| bad("algebra"))?;
        let mut gens = Vec::new();
        for g in v["generators"].as_array().ok_or_else(|| bad("generators"))? {
            let name = g["name"].as_str().ok_or_else(|| bad("generator name"))?;
            let base = name.split('[').next().unwrap_or(name);
            let indices: Vec<i32> = g["indices"]
                .as_array()
                .ok_or_else(|| bad("indices"))?
                .iter()
                .map(|i| i.as_i64().map(|i| i as i32).ok_or_else(|| bad("index")))
                .collect::<Result<_, _>>()?;
            let kind = Kind::parse(g["kind"].as_str().unwrap_or("")).ok_or_else(|| bad("kind"))?;
            let invertible = g["invertible"].as_bool().ok_or_else(|| bad("invertible"))?;
            gens.push(Generator::new(base, &indices, kind, invertible));
        }
        let mut p = Presentation::new(dim, algebra, Registry::new(gens));
        if let Some(cap) = v["degree_cap"].as_u64() {
            p.degree_cap = cap as usize;
        }
        for a in v["aliases"].as_array().ok_or_else(|| bad("aliases"))? {
            let name = a["name"].as_str().ok_or_else(|| bad("alias name"))?;
            let val = p.parse(a["value"].as_str().ok_or_else(|| bad("alias value"))?)?;
            p.aliases.insert(name.to_string(), val);
        }
        for r in v["rules"].as_array().ok_or_else(|| bad("rules"))? {
            let lhs = p.parse(r["lhs"].as_str().ok_or_else(|| bad("lhs"))?)?;
            let rhs = p.parse(r["rhs"].as_str().ok_or_else(|| bad("rhs"))?)?;
            let (w, c) = lhs.terms().next().ok_or_else(|| bad("empty lhs"))?;
            if lhs.len() != 1 || !c.is_one() || w.len() != 2 {
                return Err(bad("rule lhs must be a two-letter word"));
            }
            let (a, b) = (w.letters()[0], w.letters()[1]);
            p.set_rule(a, b, rhs);
        }
        for r in v["roots"].as_array().ok_or_else(|| bad("roots"))? {
            let lhs = p.parse(r["lhs"].as_str().ok_or_else(|| bad("root lhs"))?)?;
            let value = p.parse(r["rhs"].as_str().ok_or_else(|| bad("root rhs"))?)?;
            let (w, _) = lhs.terms().next().ok_or_else(|| bad("empty root lhs"))?;
            let l = *w.letters().first().ok_or_else(|| bad("root lhs"))?;
            p.roots.push(RootRule { gen: gen_of(l), power: w.len(), value });
        }
        for r in v["relations"].as_array().ok_or_else(|| bad("relations"))? {
            let id = r["id"].as_str().ok_or_else(|| bad("relation id"))?;
            let val = p.parse(r["poly"].as_str().ok_or_else(|| bad("relation poly"))?)?;
            p.relations.push((id.to_string(), val));
        }
        p.metadata = v["metadata"].as_object().cloned().unwrap_or_default();
        Ok(p)
    }
}

impl<C: Coeff> Presentation<C> {
    pub fn fmt_poly(&self, p: &NcPoly<C>) -> String {
        self.registry.fmt_poly(p)
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        self.registry.fmt_word(w)
    }

    pub fn to_json(&self) -> Value {
        let r = &self.registry;
        let gens: Vec<Value> = r
            .gens()
            .iter()
            .enumerate()
            .map(|(rank, g)| {
                json!({
                    "name": g.name(),
                    "kind": g.kind.as_str(),
                    "indices": g.indices,
                    "rank": rank,
                    "invertible": g.invertible,
                })
            })
            .collect();
        let rules: Vec<Value> = self
            .rules()
            .map(|(a, b, rhs)| json!({"lhs": format!("{}*{}", r.letter_name(a), r.letter_name(b)), "rhs": r.fmt_poly(rhs)}))
            .collect();
        let roots: Vec<Value> = self
            .roots
            .iter()
            .map(|rr| {
                let l = crate::word::letter(rr.gen, false);
                json!({"lhs": r.fmt_letter_power(l, rr.power), "rhs": r.fmt_poly(&rr.value)})
            })
            .collect();
        let aliases: Vec<Value> =
            self.aliases.iter().map(|(k, v)| json!({"name": k, "value": r.fmt_poly(v)})).collect();
        let relations: Vec<Value> =
            self.relations.iter().map(|(k, v)| json!({"id": k, "poly": r.fmt_poly(v)})).collect();
        let mut m = Map::new();
        m.insert("N".into(), json!(self.dim));
        m.insert("algebra".into(), json!(self.algebra.as_str()));
        m.insert("degree_cap".into(), json!(self.degree_cap));
        m.insert("generators".into(), Value::Array(gens));
        m.insert("rules".into(), Value::Array(rules));
        m.insert("roots".into(), Value::Array(roots));
        m.insert("aliases".into(), Value::Array(aliases));
        m.insert("relations".into(), Value::Array(relations));
        m.insert("metadata".into(), Value::Object(self.metadata.clone()));
        Value::Object(m)
    }
}

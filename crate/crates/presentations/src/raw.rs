//! Defining relations of the FRT algebra written over raw matrix entries,
//! so they can be evaluated under any assignment of the entries.

use crate::{support, Sign};
use ncengine::NcPoly;
use rmatrix::RMatrixBundle;
use scalars::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub sign: Sign,
    pub i: i32,
    pub j: i32,
}

/// Σ coefficient · (product of entries); the empty product is 1.
#[derive(Debug, Clone)]
pub struct RawRelation<C> {
    pub id: String,
    pub terms: Vec<(C, Vec<Entry>)>,
}

impl<C: Coeff> RawRelation<C> {
    /// Evaluates the relation with each entry replaced by `f(entry)` and
    /// products taken by `mul`.
    pub fn eval<E>(
        &self,
        f: &mut impl FnMut(Entry) -> Result<NcPoly<C>, E>,
        mul: &impl Fn(&NcPoly<C>, &NcPoly<C>) -> Result<NcPoly<C>, E>,
    ) -> Result<NcPoly<C>, E> {
        let mut acc = NcPoly::zero();
        for (c, es) in &self.terms {
            let mut t = NcPoly::one();
            for &e in es {
                t = mul(&t, &f(e)?)?;
            }
            acc.add_scaled(&t, c);
        }
        Ok(acc)
    }
}

fn in_support(sup: &[(i32, i32)], i: i32, j: i32) -> bool {
    sup.contains(&(i, j))
}

/// RLL relations for one sign:
/// R̂^{ca}_{xm} L^m_d L^x_b − L^a_x L^c_m R̂^{mx}_{bd}, with R̂⁻¹ for L⁻.
fn rll<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign) -> Vec<RawRelation<C>> {
    let idx = b.weights.indices();
    let sup = support(b, sign);
    let r = |i, j, k, l| match sign {
        Sign::Plus => b.r(i, j, k, l),
        Sign::Minus => b.r_inv(i, j, k, l),
    };
    let e = |i, j| Entry { sign, i, j };
    let mut out = Vec::new();
    for &a in &idx {
        for &bb in &idx {
            for &c in &idx {
                for &d in &idx {
                    let mut terms = Vec::new();
                    for &x in &idx {
                        for &m in &idx {
                            let v = r(c, a, x, m);
                            if !v.is_zero() && in_support(&sup, m, d) && in_support(&sup, x, bb) {
                                terms.push((v, vec![e(m, d), e(x, bb)]));
                            }
                            let v = r(m, x, bb, d);
                            if !v.is_zero() && in_support(&sup, a, x) && in_support(&sup, c, m) {
                                terms.push((-v, vec![e(a, x), e(c, m)]));
                            }
                        }
                    }
                    if !terms.is_empty() {
                        let s = if sign == Sign::Plus { '+' } else { '-' };
                        out.push(RawRelation { id: format!("rll{s}({a},{bb},{c},{d})"), terms });
                    }
                }
            }
        }
    }
    out
}

/// S(L^j_h) = g_{h,−h} g^{−j,j} L^{−h}_{−j}, as (coefficient, entry).
pub fn antipode<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign, j: i32, h: i32) -> (C, Entry) {
    (b.g(h, -h) * &b.g_inv(-j, j), Entry { sign, i: -h, j: -j })
}

/// Σ_h S(L^j_h) L^h_i = δ^j_i and Σ_h L^j_h S(L^h_i) = δ^j_i.
fn antipode_relations<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign) -> Vec<RawRelation<C>> {
    let idx = b.weights.indices();
    let sup = support(b, sign);
    let s = if sign == Sign::Plus { '+' } else { '-' };
    let e = |i, j| Entry { sign, i, j };
    let mut out = Vec::new();
    for &j in &idx {
        for &i in &idx {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for &h in &idx {
                let (c, sl) = antipode(b, sign, j, h);
                if in_support(&sup, sl.i, sl.j) && in_support(&sup, h, i) {
                    left.push((c, vec![sl, e(h, i)]));
                }
                let (c, sr) = antipode(b, sign, h, i);
                if in_support(&sup, j, h) && in_support(&sup, sr.i, sr.j) {
                    right.push((c, vec![e(j, h), sr]));
                }
            }
            if i == j {
                left.push((-C::one(), vec![]));
                right.push((-C::one(), vec![]));
            }
            out.push(RawRelation { id: format!("antipode{s}L({j},{i})"), terms: left });
            out.push(RawRelation { id: format!("antipode{s}R({j},{i})"), terms: right });
        }
    }
    out
}

/// RLL and antipode relations of one Borel half.
pub fn frt_relations<C: Coeff>(b: &RMatrixBundle<C>, sign: Sign) -> Vec<RawRelation<C>> {
    let mut out = rll(b, sign);
    out.extend(antipode_relations(b, sign));
    out
}

/// Mixed relations R̂⁻¹^{ca}_{xm} L⁻^m_d L⁺^x_b = L⁺^a_x L⁻^c_m R̂⁻¹^{mx}_{bd}.
pub fn mixed_relations<C: Coeff>(b: &RMatrixBundle<C>) -> Vec<RawRelation<C>> {
    let idx = b.weights.indices();
    let (sm, sp) = (support(b, Sign::Minus), support(b, Sign::Plus));
    let em = |i, j| Entry { sign: Sign::Minus, i, j };
    let ep = |i, j| Entry { sign: Sign::Plus, i, j };
    let mut out = Vec::new();
    for &a in &idx {
        for &bb in &idx {
            for &c in &idx {
                for &d in &idx {
                    let mut terms = Vec::new();
                    for &x in &idx {
                        for &m in &idx {
                            let v = b.r_inv(c, a, x, m);
                            if !v.is_zero() && in_support(&sm, m, d) && in_support(&sp, x, bb) {
                                terms.push((v, vec![em(m, d), ep(x, bb)]));
                            }
                            let v = b.r_inv(m, x, bb, d);
                            if !v.is_zero() && in_support(&sp, a, x) && in_support(&sm, c, m) {
                                terms.push((-v, vec![ep(a, x), em(c, m)]));
                            }
                        }
                    }
                    if !terms.is_empty() {
                        out.push(RawRelation { id: format!("mixed({a},{bb},{c},{d})"), terms });
                    }
                }
            }
        }
    }
    out
}

/// Identification of the Cartan entries of the two Borel halves:
/// L⁺^a_a L⁻^a_a = 1 and L⁺^{−a}_{−a} = L⁻^a_a.
pub fn cartan_relations<C: Coeff>(b: &RMatrixBundle<C>) -> Vec<RawRelation<C>> {
    let em = |i, j| Entry { sign: Sign::Minus, i, j };
    let ep = |i, j| Entry { sign: Sign::Plus, i, j };
    let mut out = Vec::new();
    for &a in b.weights.indices().iter().filter(|&&a| a != 0) {
        out.push(RawRelation {
            id: format!("diag({a})"),
            terms: vec![(C::one(), vec![ep(a, a), em(a, a)]), (-C::one(), vec![])],
        });
        out.push(RawRelation {
            id: format!("shared({a})"),
            terms: vec![(C::one(), vec![ep(-a, -a)]), (-C::one(), vec![em(a, a)])],
        });
    }
    out
}

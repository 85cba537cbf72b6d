use crate::gamma::{fixed, gamma_default, gamma_indices, GammaConfig};
use crate::maps::phi_entry;
use crate::DecouplingError;
use exactlinalg::Echelon;
use ncengine::NcPoly;
use presentations::{euclidean_presentation, mixed_relations, support, Entry, Sign};
use rmatrix::RMatrixBundle;
use scalars::Scalar;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Finds γ̄ for which φ̃⁻ (with the default γ) and φ̃⁺ glue into one map
/// preserving the mixed RLL relations.
pub fn solve_gluing(dim: usize) -> Result<GammaConfig, DecouplingError> {
    solve_gluing_from(dim, gamma_default(dim))
}

/// As [`solve_gluing`], keeping the γ of `base` and solving for γ̄.
/// φ̃⁺(L⁺^i_j) is linear in γ̄_{−i} and every mixed relation has one L⁺
/// factor per term, so the residuals are affine in the γ̄ not fixed
/// outright: each canonical word modulo roots gives one linear equation.
/// Unknowns left free by the system keep their value from `base`.
pub fn solve_gluing_from(dim: usize, base: GammaConfig) -> Result<GammaConfig, DecouplingError> {
    if dim.is_multiple_of(2) {
        return Err(DecouplingError::EvenGluing);
    }
    let b = RMatrixBundle::<Scalar>::new(dim)?;
    let eu = euclidean_presentation(&b)?;
    let unknowns: Vec<i32> = gamma_indices(dim).into_iter().filter(|&a| fixed(dim, a, true).is_none()).collect();
    // Column 0 is the constant; unknown γ̄_a sits in column 1 + position.
    let col: HashMap<i32, usize> = unknowns.iter().enumerate().map(|(x, &a)| (a, x + 1)).collect();
    let mut unit = base.clone();
    for &a in &unknowns {
        unit.set(a, true, Scalar::one());
    }
    let mut img = HashMap::new();
    for sign in [Sign::Minus, Sign::Plus] {
        for (i, j) in support(&b, sign) {
            let e = Entry { sign, i, j };
            img.insert(e, phi_entry(&eu, &b, &unit, e)?);
        }
    }

    let mut ech = Echelon::new();
    let mut system = Vec::new();
    for r in mixed_relations(&b) {
        let mut parts = vec![NcPoly::zero(); unknowns.len() + 1];
        for (c, es) in &r.terms {
            let mut t = NcPoly::constant(c.clone());
            let mut at = 0;
            for e in es {
                if e.sign == Sign::Plus {
                    at = col.get(&-e.i).copied().unwrap_or(0);
                }
                t = eu.mul(&t, &img.get(e).cloned().unwrap_or_default())?;
            }
            parts[at] = parts[at].add(&t);
        }
        let canon = eu.canonical_forms(&parts)?;
        let words: BTreeSet<_> = canon.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
        for w in words {
            let row: BTreeMap<usize, Scalar> = canon
                .iter()
                .enumerate()
                .map(|(x, p)| (x, p.coeff(&w)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            system.push(format!("{}: {}", r.id, equation(&row, &unknowns)));
            ech.insert(row)?;
        }
    }
    if ech.row(0).is_some() {
        return Err(DecouplingError::Gluing(format!(
            "no solution in Q(s); residual system:\n{}",
            system.join("\n")
        )));
    }

    let mut out = base.clone();
    let free: Vec<usize> = (1..=unknowns.len()).filter(|c| ech.row(*c).is_none()).collect();
    for (p, row) in ech.rows() {
        let mut v = -row.get(&0).cloned().unwrap_or_else(Scalar::zero);
        for &f in &free {
            if let Some(x) = row.get(&f) {
                v = v - &(x.clone() * base.get(unknowns[f - 1], true)?);
            }
        }
        out.set(unknowns[p - 1], true, v);
    }
    let bad = out.violations(dim);
    if !bad.is_empty() {
        return Err(DecouplingError::Gluing(format!(
            "solution violates the constraints: {}; residual system:\n{}",
            bad.join("; "),
            system.join("\n")
        )));
    }
    Ok(out)
}

fn equation(row: &BTreeMap<usize, Scalar>, unknowns: &[i32]) -> String {
    let mut terms = Vec::new();
    for (&c, v) in row {
        if c == 0 {
            terms.push(format!("({v})"));
        } else {
            terms.push(format!("({v})*gammabar[{}]", unknowns[c - 1]));
        }
    }
    format!("{} = 0", terms.join(" + "))
}

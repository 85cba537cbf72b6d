//! Identity suites over the R-matrix, the presentations and the maps
//! φ̃, ζ̃, run exactly over Q(s) or at seeded rational sample points.

mod plan;
mod report;
mod suites;

pub use plan::eval_mode_plan;
pub use report::{Mode, Report};
pub use suites::Suite;

use decoupling::{gamma_default, solve_gluing, DecouplingError, GammaConfig, Maps};
use rayon::prelude::*;
use rmatrix::{Check, RMatrixBundle};
use scalars::Scalar;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Decoupling(#[from] DecouplingError),
    #[error(transparent)]
    RMatrix(#[from] rmatrix::RMatrixError),
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Overrides the γ configuration; the mixed suite otherwise uses
    /// the glued constants from `solve_gluing`.
    pub gamma: Option<GammaConfig>,
    pub degree_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { gamma: None, degree_cap: 12 }
    }
}

/// Runs one suite (or all suites applicable to N) and collects a report
/// with checks sorted by id.
pub fn verify(suite: Suite, n: usize, mode: &Mode, cfg: &Config) -> Result<Report, VerifyError> {
    if n < 3 {
        return Err(VerifyError::Usage(format!("N must be at least 3, got {n}")));
    }
    if suite == Suite::HomomorphismMixed && n.is_multiple_of(2) {
        return Err(VerifyError::Usage("homomorphism-mixed requires odd N: gluing unavailable for even N".into()));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::ALL.iter().copied().filter(|s| *s != Suite::HomomorphismMixed || n % 2 == 1).collect(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    let needs_maps = suites.iter().any(|s| *s != Suite::Rmatrix);
    let plain = if needs_maps {
        let gamma = cfg.gamma.clone().unwrap_or_else(|| gamma_default(n));
        Some(with_cap(Maps::new(n, gamma)?, cfg.degree_cap))
    } else {
        None
    };
    let glued = if suites.contains(&Suite::HomomorphismMixed) {
        let gamma = match &cfg.gamma {
            Some(g) => g.clone(),
            None => solve_gluing(n)?,
        };
        Some(with_cap(Maps::new(n, gamma)?, cfg.degree_cap))
    } else {
        None
    };

    for s in suites {
        let prefix = s.as_str();
        let run = |maps: Option<&Maps<Scalar>>| -> Result<Vec<Check>, VerifyError> {
            // R-matrix and metric check ids are already namespaced.
            let tag = |cs: Vec<Check>| {
                cs.into_iter().map(|mut c| {
                    if s != Suite::Rmatrix {
                        c.id = format!("{prefix}/{}", c.id);
                    }
                    c
                })
            };
            match mode {
                Mode::Exact => {
                    let out = match maps {
                        Some(m) => s.run(m),
                        None => suites::rmatrix(&RMatrixBundle::<Scalar>::new(n)?),
                    };
                    Ok(tag(out).collect())
                }
                Mode::Eval { samples, seed } => {
                    let points = eval_mode_plan(n, *samples, *seed);
                    let per: Vec<Result<Vec<Check>, VerifyError>> = points
                        .par_iter()
                        .map(|s0| {
                            let mut cs = match maps {
                                Some(m) => {
                                    let e = m.eval(s0)?;
                                    s.run(&e)
                                }
                                None => suites::rmatrix(&RMatrixBundle::<Scalar>::new(n)?.eval(s0)?),
                            };
                            for c in cs.iter_mut() {
                                if let Some(w) = c.witness.take() {
                                    c.witness = Some(format!("at s = {s0}: {w}"));
                                }
                            }
                            Ok(cs)
                        })
                        .collect();
                    let mut by_id: std::collections::BTreeMap<String, Vec<Check>> = Default::default();
                    for r in per {
                        for c in r? {
                            by_id.entry(c.id.clone()).or_default().push(c);
                        }
                    }
                    Ok(tag(by_id.into_iter().map(|(id, parts)| Check::merge(id, parts)).collect()).collect())
                }
            }
        };
        let maps = match s {
            Suite::Rmatrix => None,
            Suite::HomomorphismMixed => glued.as_ref(),
            _ => plain.as_ref(),
        };
        checks.extend(run(maps)?);
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report::new(suite, n, mode.clone(), checks))
}

fn with_cap(mut m: Maps<Scalar>, cap: usize) -> Maps<Scalar> {
    m.eu.degree_cap = cap;
    m.frt.degree_cap = cap;
    m.cross.degree_cap = cap;
    m
}

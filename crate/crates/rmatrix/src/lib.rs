//! Braid matrix R̂, metric g and projector decomposition of U_q so(N) in the
//! N-dimensional vector representation.
//!
//! Matrix convention: R̂^{ij}_{kl} sits at row (i,j), column (k,l), and
//! e^a_b ⊗ e^c_d contributes at row (a,c), column (b,d).

mod check;

pub use check::Check;

use exactlinalg::{Axis, IndexSet, LinalgError, SparseMat};
use num_rational::BigRational;
use scalars::{Coeff, Rat, Scalar, ScalarError};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RMatrixError {
    #[error("so(N) needs N >= 3, got {0}")]
    Dimension(usize),
    #[error("characteristic identity fails; first residual entry {0}")]
    Characteristic(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Weights ρ_i, stored doubled so they are integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub dim: usize,
    pub rank: usize,
    rho2: BTreeMap<i32, i32>,
}

impl WeightData {
    pub fn new(dim: usize) -> Result<Self, RMatrixError> {
        if dim < 3 {
            return Err(RMatrixError::Dimension(dim));
        }
        let n = (dim / 2) as i32;
        // Listed from i = −n upwards.
        let vals: Vec<i32> = if dim % 2 == 1 {
            (0..n).map(|k| 2 * n - 1 - 2 * k).chain([0]).chain((0..n).map(|k| -(2 * k + 1))).collect()
        } else {
            (0..n).map(|k| 2 * (n - 1 - k)).chain((0..n).map(|k| -2 * k)).collect()
        };
        let idx = IndexSet::new(dim)?;
        let rho2 = idx.labels().iter().copied().zip(vals).collect();
        Ok(WeightData { dim, rank: n as usize, rho2 })
    }

    pub fn indices(&self) -> Vec<i32> {
        self.rho2.keys().copied().collect()
    }

    /// 2ρ_i.
    pub fn rho2(&self, i: i32) -> i32 {
        self.rho2[&i]
    }

    /// ρ_i as an exact rational.
    pub fn rho(&self, i: i32) -> BigRational {
        BigRational::new(self.rho2(i).into(), 2.into())
    }
}

/// g_{ij} = q^{−ρ_i} δ_{i,−j}; the inverse g^{ij} has the same entries.
pub fn metric_entry(w: &WeightData, i: i32, j: i32) -> Scalar {
    if i == -j {
        Scalar::s_pow(-w.rho2(i))
    } else {
        Scalar::zero()
    }
}

pub fn build_metric(dim: usize) -> Result<SparseMat<Scalar>, RMatrixError> {
    let w = WeightData::new(dim)?;
    let ax = Axis::vector(dim)?;
    let mut g = SparseMat::zeros(ax.clone(), ax);
    for i in w.indices() {
        g.set(&[i], &[-i], metric_entry(&w, i, -i))?;
    }
    Ok(g)
}

pub fn build_rhat(dim: usize) -> Result<SparseMat<Scalar>, RMatrixError> {
    let w = WeightData::new(dim)?;
    let pair = Axis::power(dim, 2)?;
    let mut r = SparseMat::zeros(pair.clone(), pair);
    let q = Scalar::q();
    let k = Scalar::k();
    let idx = w.indices();
    // e^a_b ⊗ e^c_d
    let mut add = |a: i32, b: i32, c: i32, d: i32, v: Scalar| r.accumulate(&[a, c], &[b, d], &v);
    for &i in idx.iter().filter(|&&i| i != 0) {
        add(i, i, i, i, q.clone())?;
        add(-i, i, i, -i, Scalar::q_pow(-1))?;
    }
    for &i in &idx {
        for &j in &idx {
            if (i != j && i != -j) || (i == 0 && j == 0) {
                add(j, i, i, j, Scalar::one())?;
            }
            if i < j {
                add(i, i, j, j, k.clone())?;
                let c = -(k.clone() * &Scalar::s_pow(w.rho2(j) - w.rho2(i)));
                add(-j, i, j, -i, c)?;
            }
        }
    }
    Ok(r)
}

#[derive(Debug, Clone)]
pub struct RMatrixBundle<C> {
    pub weights: WeightData,
    pub rhat: SparseMat<C>,
    pub rhat_inv: SparseMat<C>,
    pub g: SparseMat<C>,
    pub g_inv: SparseMat<C>,
    pub pa: SparseMat<C>,
    pub ps: SparseMat<C>,
    pub pt: SparseMat<C>,
    /// Eigenvalues q, −q⁻¹, q^{1−N} in this field.
    pub eigen: [C; 3],
}

fn eigenvalues(dim: usize) -> [Scalar; 3] {
    [Scalar::q(), -Scalar::q_pow(-1), Scalar::q_pow(1 - dim as i32)]
}

/// Lagrange interpolation projectors (Pa, Ps, Pt) onto the eigenvalues
/// −q⁻¹, q, q^{1−N} of R̂.
pub fn build_projectors(
    rhat: &SparseMat<Scalar>,
    dim: usize,
) -> Result<(SparseMat<Scalar>, SparseMat<Scalar>, SparseMat<Scalar>), RMatrixError> {
    let [ls, la, lt] = eigenvalues(dim);
    let f = |x: &Scalar| rhat.shift_diag(x);
    let char_res = f(&ls)?.mul(&f(&la)?)?.mul(&f(&lt)?)?;
    if let Some(e) = char_res.first_entry() {
        return Err(RMatrixError::Characteristic(format!("{:?},{:?}: {}", e.0, e.1, e.2)));
    }
    let proj = |x: &Scalar, y: &Scalar, z: &Scalar| -> Result<SparseMat<Scalar>, RMatrixError> {
        let d = (x.clone() - y) * &(x.clone() - z);
        Ok(f(y)?.mul(&f(z)?)?.scale(&d.inv()?))
    };
    Ok((proj(&la, &ls, &lt)?, proj(&ls, &la, &lt)?, proj(&lt, &ls, &la)?))
}

impl RMatrixBundle<Scalar> {
    pub fn new(dim: usize) -> Result<Self, RMatrixError> {
        let weights = WeightData::new(dim)?;
        let rhat = build_rhat(dim)?;
        let (pa, ps, pt) = build_projectors(&rhat, dim)?;
        let g = build_metric(dim)?;
        let mut b = RMatrixBundle {
            weights,
            rhat_inv: rhat.clone(),
            rhat,
            g_inv: g.clone(),
            g,
            pa,
            ps,
            pt,
            eigen: eigenvalues(dim),
        };
        b.rhat_inv = b.spectral_inverse()?;
        Ok(b)
    }

    /// The bundle at s = s0.
    pub fn eval(&self, s0: &BigRational) -> Result<RMatrixBundle<Rat>, RMatrixError> {
        let e = |m: &SparseMat<Scalar>| m.eval(s0);
        let ev = |x: &Scalar| x.eval(s0).map(Rat);
        Ok(RMatrixBundle {
            weights: self.weights.clone(),
            rhat: e(&self.rhat)?,
            rhat_inv: e(&self.rhat_inv)?,
            g: e(&self.g)?,
            g_inv: e(&self.g_inv)?,
            pa: e(&self.pa)?,
            ps: e(&self.ps)?,
            pt: e(&self.pt)?,
            eigen: [ev(&self.eigen[0])?, ev(&self.eigen[1])?, ev(&self.eigen[2])?],
        })
    }

    pub fn to_json(&self) -> Value {
        let rho: BTreeMap<String, String> =
            self.weights.indices().iter().map(|&i| (i.to_string(), self.weights.rho(i).to_string())).collect();
        json!({
            "N": self.weights.dim,
            "rho": rho,
            "rhat": self.rhat.to_json(),
            "rhat_inv": self.rhat_inv.to_json(),
            "g": self.g.to_json(),
            "Pa": self.pa.to_json(),
            "Ps": self.ps.to_json(),
            "Pt": self.pt.to_json(),
        })
    }
}

fn witness<C: Coeff>(m: &SparseMat<C>) -> Option<String> {
    m.first_entry().map(|(r, c, v)| format!("residual at row {r:?}, col {c:?}: {v}"))
}

fn residual<C: Coeff>(r: Result<SparseMat<C>, LinalgError>) -> Option<String> {
    match r {
        Ok(m) => witness(&m),
        Err(e) => Some(e.to_string()),
    }
}

impl<C: Coeff> RMatrixBundle<C> {
    pub fn dim(&self) -> usize {
        self.weights.dim
    }

    fn id(&self, m: &SparseMat<C>) -> SparseMat<C> {
        SparseMat::identity(m.rows().clone())
    }

    /// q⁻¹Ps − qPa + q^{N−1}Pt.
    pub fn spectral_inverse(&self) -> Result<SparseMat<C>, RMatrixError> {
        let [a, b, c] = &self.eigen;
        Ok(self.ps.scale(&a.inv()?).add(&self.pa.scale(&b.inv()?))?.add(&self.pt.scale(&c.inv()?))?)
    }

    pub fn entry(&self, m: &SparseMat<C>, i: i32, j: i32, k: i32, l: i32) -> C {
        m.get(&[i, j], &[k, l]).expect("labels in range")
    }

    /// R̂^{ij}_{kl}.
    pub fn r(&self, i: i32, j: i32, k: i32, l: i32) -> C {
        self.entry(&self.rhat, i, j, k, l)
    }

    /// (R̂⁻¹)^{ij}_{kl}.
    pub fn r_inv(&self, i: i32, j: i32, k: i32, l: i32) -> C {
        self.entry(&self.rhat_inv, i, j, k, l)
    }

    pub fn g(&self, i: i32, j: i32) -> C {
        self.g.get(&[i], &[j]).expect("labels in range")
    }

    pub fn g_inv(&self, i: i32, j: i32) -> C {
        self.g_inv.get(&[i], &[j]).expect("labels in range")
    }

    pub fn check_ybe(&self) -> Check {
        Check::run("rmatrix.ybe", || {
            let r = || -> Result<SparseMat<C>, LinalgError> {
                let i = SparseMat::identity(Axis::vector(self.dim())?);
                let a = self.rhat.kron(&i);
                let b = i.kron(&self.rhat);
                a.mul(&b)?.mul(&a)?.sub(&b.mul(&a)?.mul(&b)?)
            };
            residual(r())
        })
    }

    pub fn check_characteristic(&self) -> Check {
        Check::run("rmatrix.characteristic", || {
            let f = |x: &C| self.rhat.shift_diag(x);
            let [a, b, c] = &self.eigen;
            residual((|| f(a)?.mul(&f(b)?)?.mul(&f(c)?))())
        })
    }

    pub fn check_spectral(&self) -> Check {
        Check::run("rmatrix.spectral-decomposition", || {
            let [a, b, c] = &self.eigen;
            residual((|| {
                self.ps.scale(a).add(&self.pa.scale(b))?.add(&self.pt.scale(c))?.sub(&self.rhat)
            })())
        })
    }

    pub fn check_inverse(&self) -> Check {
        Check::run("rmatrix.inverse", || {
            residual((|| self.rhat.mul(&self.rhat_inv)?.sub(&self.id(&self.rhat)))())
        })
    }

    pub fn check_projectors(&self) -> Vec<Check> {
        let ps = [("Pa", &self.pa), ("Ps", &self.ps), ("Pt", &self.pt)];
        let mut out = Vec::new();
        out.push(Check::run("rmatrix.projectors.idempotent", || {
            ps.iter().find_map(|(n, p)| residual(p.mul(p).and_then(|pp| pp.sub(p))).map(|w| format!("{n}: {w}")))
        }));
        out.push(Check::run("rmatrix.projectors.orthogonal", || {
            let mut w = None;
            for (x, a) in &ps {
                for (y, b) in &ps {
                    if x != y && w.is_none() {
                        w = residual(a.mul(b)).map(|r| format!("{x}·{y}: {r}"));
                    }
                }
            }
            w
        }));
        out.push(Check::run("rmatrix.projectors.complete", || {
            residual((|| self.pa.add(&self.ps)?.add(&self.pt)?.sub(&self.id(&self.pa)))())
        }));
        out.push(Check::run("rmatrix.projectors.traces", || {
            let n = self.dim() as i64;
            let want = [n * (n - 1) / 2, n * (n + 1) / 2 - 1, 1];
            for ((name, p), w) in ps.iter().zip(want) {
                match p.trace() {
                    Ok(t) if t == C::from_int(w) => {}
                    Ok(t) => return Some(format!("trace {name} = {t}, expected {w}")),
                    Err(e) => return Some(e.to_string()),
                }
            }
            None
        }));
        out.push(Check::run("rmatrix.projectors.trace-rank-one", || {
            // Pt must be a multiple of the rank-one map g^{ij} g_{kl}.
            let idx = self.weights.indices();
            let mut gg = SparseMat::zeros(self.pt.rows().clone(), self.pt.cols().clone());
            for &i in &idx {
                for &k in &idx {
                    let v = self.g_inv(i, -i) * &self.g(k, -k);
                    gg.set(&[i, -i], &[k, -k], v).ok()?;
                }
            }
            let (r, c, v) = gg.first_entry()?;
            let lam = match self.pt.get(&r, &c).ok()?.clone() * &v.inv().ok()? {
                l if l.is_zero() => return Some("Pt vanishes on g".into()),
                l => l,
            };
            residual(self.pt.sub(&gg.scale(&lam)))
        }));
        out
    }

    pub fn check_metric(&self) -> Vec<Check> {
        let mut out = Vec::new();
        out.push(Check::run("metric.inverse", || {
            residual((|| self.g_inv.mul(&self.g)?.sub(&self.id(&self.g)))())
        }));
        out.push(Check::run("metric.covariance", || {
            // R̂^{ij}_{kl} g^{kl} = q^{1−N} g^{ij}
            let idx = self.weights.indices();
            for &i in &idx {
                for &j in &idx {
                    let mut lhs = C::zero();
                    for &k in &idx {
                        lhs = lhs + &(self.r(i, j, k, -k) * &self.g_inv(k, -k));
                    }
                    let rhs = self.eigen[2].clone() * &self.g_inv(i, j);
                    if lhs != rhs {
                        return Some(format!("entry ({i},{j}): {lhs} vs {rhs}"));
                    }
                }
            }
            None
        }));
        out
    }
}

use crate::DecouplingError;
use rmatrix::WeightData;
use scalars::{omega, Scalar};
use serde_json::{Map, Value};
use std::collections::BTreeMap;

/// Normalization constants γ_a (for φ̃⁻) and γ̄_a (for φ̃⁺).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaConfig {
    pub values: BTreeMap<i32, (Scalar, Scalar)>,
}

/// Indices a carrying a constant: all weights for odd N, a ≠ 0 for even N.
pub fn gamma_indices(dim: usize) -> Vec<i32> {
    let n = (dim / 2) as i32;
    (-n..=n).filter(|&a| a != 0 || dim % 2 == 1).collect()
}

/// Required value of γ_a γ_{−a} (or γ̄_a γ̄_{−a}) for a ≥ 1, when only the
/// product is fixed.
fn product(w: &WeightData, a: i32, bar: bool) -> Option<Scalar> {
    let odd = w.dim % 2 == 1;
    let qq = if bar { Scalar::q() } else { Scalar::q_pow(-1) };
    if a == 1 {
        return odd.then(|| -qq * &Scalar::h().pow(-2).unwrap());
    }
    let om = omega(w.rho2(a)) * &omega(w.rho2(a - 1));
    Some(-qq * &Scalar::k().pow(-2).unwrap() * &om)
}

/// Values fixed outright: γ_0, γ̄_0 for odd N and γ_{±1}, γ̄_{±1} for even N.
pub(crate) fn fixed(dim: usize, a: i32, bar: bool) -> Option<Scalar> {
    if dim % 2 == 1 && a == 0 {
        let h_inv = Scalar::h().inv().unwrap();
        return Some(if bar { Scalar::s() * &h_inv } else { -(Scalar::s_pow(-1) * &h_inv) });
    }
    if dim.is_multiple_of(2) && a.abs() == 1 {
        let k_inv = Scalar::k().inv().unwrap();
        return Some(if bar { k_inv } else { -k_inv });
    }
    None
}

/// Fixed values where they are fixed; otherwise γ_a = h⁻¹ (odd N, a = 1)
/// or k⁻¹ (a > 1) and γ_{−a} from the product, likewise for γ̄.
pub fn gamma_default(dim: usize) -> GammaConfig {
    let w = WeightData::new(dim).expect("dimension at least 3");
    let mut values = BTreeMap::new();
    for a in gamma_indices(dim).into_iter().filter(|&a| a >= 0) {
        let pick = |bar: bool| -> (Scalar, Scalar) {
            if let Some(v) = fixed(dim, a, bar) {
                return (v.clone(), fixed(dim, -a, bar).unwrap_or(v));
            }
            let up = if a == 1 { Scalar::h().inv().unwrap() } else { Scalar::k().inv().unwrap() };
            let down = product(&w, a, bar).unwrap().div(&up).unwrap();
            (up, down)
        };
        let (g, gm) = pick(false);
        let (gb, gbm) = pick(true);
        values.insert(a, (g, gb));
        values.insert(-a, (gm, gbm));
    }
    GammaConfig { values }
}

impl GammaConfig {
    pub fn get(&self, a: i32, bar: bool) -> Result<&Scalar, DecouplingError> {
        let (g, gb) = self.values.get(&a).ok_or_else(|| DecouplingError::Gamma(format!("no constant for a = {a}")))?;
        Ok(if bar { gb } else { g })
    }

    pub fn set(&mut self, a: i32, bar: bool, v: Scalar) {
        let e = self.values.entry(a).or_insert_with(|| (Scalar::zero(), Scalar::zero()));
        if bar {
            e.1 = v;
        } else {
            e.0 = v;
        }
    }

    /// Every violated constraint, as readable text; empty when valid.
    pub fn violations(&self, dim: usize) -> Vec<String> {
        let w = WeightData::new(dim).expect("dimension at least 3");
        let mut out = Vec::new();
        let want = gamma_indices(dim);
        let have: Vec<i32> = self.values.keys().copied().collect();
        if have != want {
            out.push(format!("indices {have:?}, expected {want:?}"));
            return out;
        }
        for bar in [false, true] {
            let name = if bar { "gammabar" } else { "gamma" };
            for &a in &want {
                let v = self.get(a, bar).unwrap();
                if v.is_zero() {
                    out.push(format!("{name}[{a}] = 0"));
                }
                if let Some(f) = fixed(dim, a, bar) {
                    if *v != f {
                        out.push(format!("{name}[{a}] = {v}, expected {f}"));
                    }
                }
                if a >= 1 {
                    if let Some(p) = product(&w, a, bar) {
                        let got = v.clone() * self.get(-a, bar).unwrap();
                        if got != p {
                            out.push(format!("{name}[{a}]*{name}[{}] = {got}, expected {p}", -a));
                        }
                    }
                }
            }
        }
        out
    }

    /// {"a": ["γ_a", "γ̄_a"]} with scalars in the q syntax.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (a, (g, gb)) in &self.values {
            m.insert(a.to_string(), Value::Array(vec![Value::String(g.to_string()), Value::String(gb.to_string())]));
        }
        Value::Object(m)
    }

    /// Reads the JSON form and checks it against the constraints for N.
    pub fn from_json(v: &Value, dim: usize) -> Result<Self, DecouplingError> {
        let bad = |m: String| DecouplingError::Gamma(m);
        let obj = v.as_object().ok_or_else(|| bad("gamma file must be a JSON object".into()))?;
        let mut values = BTreeMap::new();
        for (k, x) in obj {
            let a: i32 = k.parse().map_err(|_| bad(format!("key {k:?} is not an index")))?;
            let pair = x
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| bad(format!("value for {k} must be [gamma, gammabar]")))?;
            let read = |y: &Value| -> Result<Scalar, DecouplingError> {
                let t = y.as_str().ok_or_else(|| bad(format!("value for {k} must be strings")))?;
                t.parse().map_err(|e| bad(format!("{k}: {e}")))
            };
            values.insert(a, (read(&pair[0])?, read(&pair[1])?));
        }
        let cfg = GammaConfig { values };
        let v = cfg.violations(dim);
        if !v.is_empty() {
            return Err(bad(v.join("; ")));
        }
        Ok(cfg)
    }
}

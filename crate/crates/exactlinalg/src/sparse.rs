use crate::{Axis, LinalgError};
use scalars::{Coeff, Rat, Scalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Sub,
    Mul,
    Kron,
}

/// Sparse matrix stored by rows. Zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat<C> {
    rows: Axis,
    cols: Axis,
    data: Vec<BTreeMap<usize, C>>,
}

impl<C: Coeff> SparseMat<C> {
    pub fn zeros(rows: Axis, cols: Axis) -> Self {
        let data = vec![BTreeMap::new(); rows.len()];
        SparseMat { rows, cols, data }
    }

    pub fn identity(axis: Axis) -> Self {
        let mut m = Self::zeros(axis.clone(), axis);
        for (i, r) in m.data.iter_mut().enumerate() {
            r.insert(i, C::one());
        }
        m
    }

    /// The matrix unit e^i_j on a single index set: 1 at row i, column j.
    pub fn matrix_unit(dim: usize, i: i32, j: i32) -> Result<Self, LinalgError> {
        let ax = Axis::vector(dim)?;
        let mut m = Self::zeros(ax.clone(), ax);
        m.set(&[i], &[j], C::one())?;
        Ok(m)
    }

    pub fn rows(&self) -> &Axis {
        &self.rows
    }

    pub fn cols(&self) -> &Axis {
        &self.cols
    }

    pub fn shape(&self) -> String {
        format!("{}→{}", self.cols, self.rows)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, row: &[i32], col: &[i32]) -> Result<C, LinalgError> {
        let (r, c) = (self.rows.flatten(row)?, self.cols.flatten(col)?);
        Ok(self.data[r].get(&c).cloned().unwrap_or_else(C::zero))
    }

    pub fn set(&mut self, row: &[i32], col: &[i32], v: C) -> Result<(), LinalgError> {
        let (r, c) = (self.rows.flatten(row)?, self.cols.flatten(col)?);
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
        Ok(())
    }

    /// Adds `v` to an entry, dropping it if the sum cancels.
    pub fn accumulate(&mut self, row: &[i32], col: &[i32], v: &C) -> Result<(), LinalgError> {
        let (r, c) = (self.rows.flatten(row)?, self.cols.flatten(col)?);
        add_into(&mut self.data[r], c, v);
        Ok(())
    }

    /// Nonzero entries as (row label, col label, value) in label order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<i32>, Vec<i32>, &C)> + '_ {
        self.data.iter().enumerate().flat_map(move |(r, row)| {
            row.iter().map(move |(&c, v)| (self.rows.label(r), self.cols.label(c), v))
        })
    }

    pub fn first_entry(&self) -> Option<(Vec<i32>, Vec<i32>, C)> {
        self.entries().next().map(|(r, c, v)| (r, c, v.clone()))
    }

    pub fn arith(&self, other: &Self, op: MatOp) -> Result<Self, LinalgError> {
        match op {
            MatOp::Add => self.add(other),
            MatOp::Sub => self.sub(other),
            MatOp::Mul => self.mul(other),
            MatOp::Kron => Ok(self.kron(other)),
        }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        let mut out = self.clone();
        for (r, row) in other.data.iter().enumerate() {
            for (&c, v) in row {
                add_into(&mut out.data[r], c, v);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "sub")?;
        self.add(&other.scale(&-C::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch { op: "mul", left: self.shape(), right: other.shape() });
        }
        let mut out = Self::zeros(self.rows.clone(), other.cols.clone());
        for (r, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[r];
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    add_into(acc, c, &(a.clone() * b));
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows.tensor(&other.rows), self.cols.tensor(&other.cols));
        let (br, bc) = (other.rows.len(), other.cols.len());
        for (r1, row1) in self.data.iter().enumerate() {
            for (&c1, a) in row1 {
                for (r2, row2) in other.data.iter().enumerate() {
                    for (&c2, b) in row2 {
                        out.data[r1 * br + r2].insert(c1 * bc + c2, a.clone() * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zeros(self.rows.clone(), self.cols.clone());
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(&c, v)| (c, v.clone() * k)).collect())
            .collect();
        SparseMat { rows: self.rows.clone(), cols: self.cols.clone(), data }
    }

    /// self − k·I.
    pub fn shift_diag(&self, k: &C) -> Result<Self, LinalgError> {
        self.sub(&Self::identity(self.rows.clone()).scale(k))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols.clone(), self.rows.clone());
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                out.data[c].insert(r, v.clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Result<C, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch { op: "trace", left: self.shape(), right: self.shape() });
        }
        let mut t = C::zero();
        for (r, row) in self.data.iter().enumerate() {
            if let Some(v) = row.get(&r) {
                t = t + v;
            }
        }
        Ok(t)
    }

    /// Entrywise map into another coefficient field; errors name the entry.
    pub fn try_map<D: Coeff>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, scalars::ScalarError>,
    ) -> Result<SparseMat<D>, LinalgError> {
        let mut out = SparseMat::<D>::zeros(self.rows.clone(), self.cols.clone());
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                let d = f(v).map_err(|source| LinalgError::Entry {
                    row: self.rows.label(r),
                    col: self.cols.label(c),
                    source,
                })?;
                if !d.is_zero() {
                    out.data[r].insert(c, d);
                }
            }
        }
        Ok(out)
    }

    /// Byte-stable JSON: entries sorted by (row label, col label).
    pub fn to_json(&self) -> Value {
        let labels = |a: &Axis| (0..a.len()).map(|i| json!(a.label(i))).collect::<Vec<_>>();
        let entries: Vec<Value> = self.entries().map(|(r, c, v)| json!([r, c, v.to_string()])).collect();
        json!({
            "dims": [self.rows.len(), self.cols.len()],
            "row_labels": labels(&self.rows),
            "col_labels": labels(&self.cols),
            "entries": entries,
        })
    }
}

impl SparseMat<Scalar> {
    pub fn eval(&self, s0: &num_rational::BigRational) -> Result<SparseMat<Rat>, LinalgError> {
        self.try_map(|v| v.eval(s0).map(Rat))
    }

    /// Reads back the output of `to_json` over V^{⊗k} axes.
    pub fn from_json(v: &Value, dim: usize) -> Result<Self, LinalgError> {
        let bad = |m: &str| LinalgError::Json(m.to_string());
        let arity = |key: &str| -> Result<usize, LinalgError> {
            let first = v[key].as_array().and_then(|a| a.first()).ok_or_else(|| bad(key))?;
            Ok(first.as_array().ok_or_else(|| bad(key))?.len())
        };
        let rows = Axis::power(dim, arity("row_labels")?)?;
        let cols = Axis::power(dim, arity("col_labels")?)?;
        let mut m = Self::zeros(rows, cols);
        let to_label = |x: &Value| -> Result<Vec<i32>, LinalgError> {
            x.as_array()
                .ok_or_else(|| bad("label"))?
                .iter()
                .map(|i| i.as_i64().map(|i| i as i32).ok_or_else(|| bad("label")))
                .collect()
        };
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let r = to_label(&e[0])?;
            let c = to_label(&e[1])?;
            let s: Scalar = e[2].as_str().ok_or_else(|| bad("entry"))?.parse().map_err(|e| bad(&format!("{e}")))?;
            m.set(&r, &c, s)?;
        }
        Ok(m)
    }
}

fn add_into<C: Coeff>(row: &mut BTreeMap<usize, C>, c: usize, v: &C) {
    if v.is_zero() {
        return;
    }
    match row.get_mut(&c) {
        Some(x) => {
            *x = x.clone() + v;
            if x.is_zero() {
                row.remove(&c);
            }
        }
        None => {
            row.insert(c, v.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_drops_entries() {
        let i = SparseMat::<Scalar>::identity(Axis::vector(3).unwrap());
        assert!(i.sub(&i).unwrap().is_zero());
        assert_eq!(i.sub(&i).unwrap().nnz(), 0);
    }

    #[test]
    fn mismatch_names_shapes() {
        let a = SparseMat::<Scalar>::identity(Axis::vector(3).unwrap());
        let b = SparseMat::<Scalar>::identity(Axis::vector(4).unwrap());
        let e = a.mul(&b).unwrap_err().to_string();
        assert!(e.contains("3→3") && e.contains("4→4"), "{e}");
    }
}

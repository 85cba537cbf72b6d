use crate::LinalgError;
use std::fmt;

/// The vector indices −n..n of the N-dimensional representation, with 0
/// present only for odd N.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    dim: usize,
    labels: Vec<i32>,
}

impl IndexSet {
    pub fn new(dim: usize) -> Result<Self, LinalgError> {
        if dim == 0 {
            return Err(LinalgError::BadDimension(dim));
        }
        let n = (dim / 2) as i32;
        let labels = (-n..=n).filter(|&i| i != 0 || dim % 2 == 1).collect();
        Ok(IndexSet { dim, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.dim / 2
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn position(&self, label: i32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }
}

/// One side of a matrix: a tensor product of index sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Axis(Vec<IndexSet>);

impl Axis {
    pub fn new(factors: Vec<IndexSet>) -> Self {
        Axis(factors)
    }

    pub fn vector(dim: usize) -> Result<Self, LinalgError> {
        Ok(Axis(vec![IndexSet::new(dim)?]))
    }

    /// V^{⊗k}.
    pub fn power(dim: usize, k: usize) -> Result<Self, LinalgError> {
        let s = IndexSet::new(dim)?;
        Ok(Axis(vec![s; k]))
    }

    pub fn factors(&self) -> &[IndexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|s| s.dim()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tensor(&self, other: &Axis) -> Axis {
        let mut f = self.0.clone();
        f.extend(other.0.iter().cloned());
        Axis(f)
    }

    pub fn flatten(&self, label: &[i32]) -> Result<usize, LinalgError> {
        if label.len() != self.0.len() {
            return Err(LinalgError::BadLabel(label.to_vec()));
        }
        let mut at = 0;
        for (s, &l) in self.0.iter().zip(label) {
            let p = s.position(l).ok_or_else(|| LinalgError::BadLabel(label.to_vec()))?;
            at = at * s.dim() + p;
        }
        Ok(at)
    }

    pub fn label(&self, mut at: usize) -> Vec<i32> {
        let mut out = vec![0; self.0.len()];
        for (k, s) in self.0.iter().enumerate().rev() {
            out[k] = s.labels()[at % s.dim()];
            at /= s.dim();
        }
        out
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.0.iter().map(|s| s.dim().to_string()).collect();
        write!(f, "{}", dims.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_sets_skip_zero() {
        assert_eq!(IndexSet::new(4).unwrap().labels(), &[-2, -1, 1, 2]);
        assert_eq!(IndexSet::new(3).unwrap().labels(), &[-1, 0, 1]);
    }

    #[test]
    fn flatten_roundtrip() {
        let a = Axis::power(5, 3).unwrap();
        for at in 0..a.len() {
            assert_eq!(a.flatten(&a.label(at)).unwrap(), at);
        }
    }
}

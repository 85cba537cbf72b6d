//! Incremental reduced row echelon form over sparse rows.
//!
//! The pivot of a row is its largest column, so callers control
//! elimination order by how they number columns.

use scalars::{Coeff, ScalarError};
use std::collections::BTreeMap;

pub type Row<C> = BTreeMap<usize, C>;

#[derive(Debug, Clone)]
pub struct Echelon<C> {
    /// pivot column → row with that pivot, normalized to 1 there and zero in
    /// every other pivot column.
    rows: BTreeMap<usize, Row<C>>,
}

impl<C: Coeff> Default for Echelon<C> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

fn axpy<C: Coeff>(dst: &mut Row<C>, k: &C, src: &Row<C>) {
    for (&c, v) in src {
        let t = k.clone() * v;
        match dst.get_mut(&c) {
            Some(x) => {
                *x = x.clone() + &t;
                if x.is_zero() {
                    dst.remove(&c);
                }
            }
            None => {
                if !t.is_zero() {
                    dst.insert(c, t);
                }
            }
        }
    }
}

impl<C: Coeff> Echelon<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &Row<C>)> {
        self.rows.iter().map(|(&p, r)| (p, r))
    }

    pub fn row(&self, pivot: usize) -> Option<&Row<C>> {
        self.rows.get(&pivot)
    }

    /// Residual of `v` modulo the row space.
    pub fn reduce(&self, mut v: Row<C>) -> Row<C> {
        // Walk pivots from the top; eliminating a pivot only touches smaller
        // non-pivot columns, so one descending pass suffices.
        let mut cursor = v.keys().next_back().copied();
        while let Some(c) = cursor {
            if let (Some(row), Some(x)) = (self.rows.get(&c), v.get(&c).cloned()) {
                axpy(&mut v, &-x, row);
            }
            cursor = v.range(..c).next_back().map(|(&k, _)| k);
        }
        v
    }

    /// Adds `v` to the row space. Returns the new pivot if `v` was
    /// independent.
    pub fn insert(&mut self, v: Row<C>) -> Result<Option<usize>, ScalarError> {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next_back() else {
            return Ok(None);
        };
        let inv = lead.inv()?;
        for x in r.values_mut() {
            *x = x.clone() * &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(x) = other.get(&p).cloned() {
                axpy(other, &-x, &r);
            }
        }
        self.rows.insert(p, r);
        Ok(Some(p))
    }
}

/// Rank of a list of sparse rows.
pub fn rank<C: Coeff>(rows: impl IntoIterator<Item = Row<C>>) -> Result<usize, ScalarError> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r)?;
    }
    Ok(e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalars::Scalar;

    fn row(v: &[(usize, i64)]) -> Row<Scalar> {
        v.iter().map(|&(c, x)| (c, Scalar::from_int(x))).collect()
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let rows = vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)]), row(&[(2, 1)])];
        assert_eq!(rank(rows).unwrap(), 2);
    }

    #[test]
    fn stays_fully_reduced() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (1, 1)])).unwrap();
        e.insert(row(&[(1, 1), (2, 1)])).unwrap();
        // The pivot-1 row must have been cleared in column 2's row and vice versa.
        for (p, r) in e.rows() {
            for q in e.pivots() {
                if q != p {
                    assert!(!r.contains_key(&q));
                }
            }
        }
        assert!(e.reduce(row(&[(0, 1), (2, -1)])).is_empty());
    }
}

//! Reduced row echelon form, maintained incrementally.
//!
//! Constraint systems in this crate are tall and very sparse (thousands of
//! rows, at most a few hundred unknowns), so rows are streamed into a
//! [`RowReducer`] that keeps its state fully reduced after every insertion
//! and stops doing work once the rank saturates.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::Scalar;

/// The result of [`rref`]: the unique RREF with zero rows removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Incremental Gauss-Jordan elimination.
///
/// Invariant: `rows` are sorted by pivot column, each has a leading 1 at its
/// pivot, and every other row is zero in that column.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_saturated(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the current rows in place. Returns the residual's
    /// first nonzero column, if any.
    fn reduce(&self, v: &mut [Scalar]) -> Option<usize> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v.iter().position(|x| !x.is_zero())
    }

    /// True iff `v` lies in the current row space.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w).is_none()
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn push(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.cols, "row length does not match");
        if self.is_saturated() {
            return false;
        }
        let Some(p) = self.reduce(&mut v) else {
            return false;
        };
        if !v[p].is_one() {
            let inv = v[p].recip();
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn finish(self) -> Echelon {
        let rank = self.rows.len();
        let data = self.rows.into_iter().flatten().collect();
        Echelon {
            matrix: Matrix::from_vec(rank, self.cols, data),
            rank,
            pivots: self.pivots,
        }
    }
}

/// Unique reduced row echelon form of `m`, zero rows dropped.
pub fn rref(m: &Matrix) -> Echelon {
    let mut red = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        red.push(m.row(i).to_vec());
    }
    red.finish()
}

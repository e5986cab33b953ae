// Elimination code reads clearest with explicit row/column indices.
#![allow(clippy::needless_range_loop)]

use super::elem::{FieldElem, FieldTag};
use crate::error::{Error, Result};

/// Dense row-major matrix over one of the ground fields.
///
/// All entries carry the same tag, checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    tag: FieldTag,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, tag: FieldTag, entries: Vec<FieldElem>) -> Result<Self> {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        if entries.iter().any(|e| e.tag() != tag) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix {
            rows,
            cols,
            tag,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        tag: FieldTag,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, tag, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.cols + j]
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = FieldElem::zero(self.tag);
                for j in 0..self.cols {
                    acc += &(self.at(i, j) * &v[j]);
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot column of each row used.
    fn rref(&self) -> (Vec<Vec<FieldElem>>, Vec<usize>) {
        let mut m: Vec<Vec<FieldElem>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].inv().expect("pivot is nonzero");
            for j in col..self.cols {
                m[row][j] = &m[row][j] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in col..self.cols {
                        let t = &factor * &m[row][j];
                        m[r][j] = &m[r][j] - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the right nullspace `{v : M v = 0}` by Gaussian elimination.
    ///
    /// One basis vector per free column, in ascending column order, each with
    /// its first nonzero entry normalized to 1. Empty iff the matrix is
    /// injective as a map on column vectors.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        let (m, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FieldElem::zero(self.tag); self.cols];
            v[free] = FieldElem::one(self.tag);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][free];
            }
            let first = v
                .iter()
                .position(|e| !e.is_zero())
                .expect("free column entry is 1");
            let inv = v[first].inv().expect("first nonzero entry");
            basis.push(v.iter().map(|e| e * &inv).collect());
        }
        basis
    }

    /// Determinant by fraction-full Gaussian elimination; square input only.
    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<FieldElem>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = FieldElem::one(self.tag);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return FieldElem::zero(self.tag);
            };
            if p != col {
                m.swap(col, p);
                det = -det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for j in col..n {
                    let t = &factor * &m[col][j];
                    m[r][j] = &m[r][j] - &t;
                }
            }
        }
        det
    }
}

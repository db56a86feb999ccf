use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::Rational;
use crate::error::{Error, Result};

pub type RatVector = Vec<Rational>;

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<RatVector>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// `A·x`.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<RatVector> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `yᵀ·A`.
    pub fn left_mul(&self, y: &[Rational]) -> Result<RatVector> {
        if y.len() != self.rows {
            return Err(Error::ShapeMismatch {
                expected: self.rows,
                found: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (r, coeff) in y.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(r)) {
                if !a.is_zero() {
                    *o += coeff * a;
                }
            }
        }
        Ok(out)
    }
}

pub(crate) fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .zip(y)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

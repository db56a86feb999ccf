use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::matrix::dot;
use super::{normalize_integer_vector, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};

/// Outcome of solving `A·x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineOutcome {
    /// `particular` solves the system (free variables set to zero) and
    /// `nullspace_basis` spans the solutions of `A·x = 0`.
    Solution {
        particular: RatVector,
        nullspace_basis: Vec<RatVector>,
        rank: usize,
    },
    /// `certificateᵀ·A = 0` while `certificateᵀ·b ≠ 0`.
    Inconsistent { certificate: RatVector },
}

impl AffineOutcome {
    pub fn is_consistent(&self) -> bool {
        matches!(self, AffineOutcome::Solution { .. })
    }
}

/// Gauss–Jordan elimination of `rows` over the first `pivot_cols` columns.
/// Columns are scanned left to right and the first row at or below the
/// current rank with a nonzero entry becomes the pivot row. Returns the
/// pivot columns; rows `0..rank` are the pivot rows afterwards.
pub(crate) fn rref(rows: &mut [Vec<Rational>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        let rank = pivots.len();
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].recip();
        if !inv.is_one() {
            for v in rows[rank].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (o, p) in other.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *o -= &factor * p;
                }
            }
        }
        pivots.push(col);
    }
    pivots
}

pub(crate) fn augmented(a: &RatMatrix, b: &[Rational]) -> Vec<Vec<Rational>> {
    (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect()
}

/// Solves `A·x = b` by exact Gauss–Jordan elimination.
///
/// When the system is inconsistent the certificate is the orthogonal
/// projection of `b` onto the left null space of `A` (found by carrying an
/// identity block through the elimination), rescaled to the shortest integer
/// vector with a positive leading entry. Every nonzero vector of the left null
/// space is a valid certificate unless it is orthogonal to `b`; the projection
/// is the one of least Euclidean norm among those pairing to the same value,
/// which makes the result independent of pivoting choices.
pub fn solve_affine(a: &RatMatrix, b: &[Rational]) -> Result<AffineOutcome> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let cols = a.cols();
    let mut rows = augmented(a, b);
    let pivots = rref(&mut rows, cols);
    let rank = pivots.len();

    if rows[rank..].iter().any(|row| !row[cols].is_zero()) {
        let certificate = certificate(a, b)?;
        return Ok(AffineOutcome::Inconsistent { certificate });
    }

    let mut particular = alloc::vec![Rational::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        particular[col] = rows[row][cols].clone();
    }

    let nullspace_basis = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -rows[row][free].clone();
            }
            v
        })
        .collect();

    Ok(AffineOutcome::Solution {
        particular,
        nullspace_basis,
        rank,
    })
}

/// Basis of `{y : yᵀ·A = 0}` read off the identity block of `[A | I]`.
pub(crate) fn left_nullspace(a: &RatMatrix) -> Vec<RatVector> {
    let m = a.rows();
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.extend((0..m).map(|k| if k == r { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let rank = rref(&mut rows, a.cols()).len();
    rows.drain(..rank);
    rows.into_iter()
        .map(|mut row| row.split_off(a.cols()))
        .collect()
}

fn certificate(a: &RatMatrix, b: &[Rational]) -> Result<RatVector> {
    let basis = left_nullspace(a);
    let k = basis.len();
    let gram = RatMatrix::from_rows(
        k,
        basis
            .iter()
            .map(|u| basis.iter().map(|v| dot(u, v)).collect())
            .collect(),
    )?;
    let rhs: RatVector = basis.iter().map(|u| dot(u, b)).collect();
    let coeffs = match solve_affine(&gram, &rhs)? {
        AffineOutcome::Solution { particular, .. } => particular,
        AffineOutcome::Inconsistent { .. } => unreachable!("Gram matrix of a basis is invertible"),
    };
    let mut y = alloc::vec![Rational::zero(); a.rows()];
    for (c, u) in coeffs.iter().zip(&basis) {
        if c.is_zero() {
            continue;
        }
        for (yi, ui) in y.iter_mut().zip(u) {
            if !ui.is_zero() {
                *yi += c * ui;
            }
        }
    }
    Ok(normalize_integer_vector(&y))
}

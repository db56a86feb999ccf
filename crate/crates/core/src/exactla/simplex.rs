use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::affine::{augmented, rref};
use super::{RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};

/// Answer to "is there an `x ≥ 0` with `A·x = b`?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RatVector),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether `A·x = b` has a componentwise nonnegative solution.
///
/// The system is first brought to reduced row echelon form, which drops
/// redundant rows and detects plain inconsistency. The remaining rows go
/// through an exact phase-1 simplex (one artificial per row, Bland's rule for
/// both entering and leaving choices).
pub fn nonneg_feasible(a: &RatMatrix, b: &[Rational]) -> Result<Feasibility> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut rows = augmented(a, b);
    let rank = rref(&mut rows, n).len();
    if rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(Feasibility::Infeasible);
    }
    rows.truncate(rank);
    Phase1::new(rows, n).run()
}

/// Phase-1 tableau. Columns `0..n` are structural, `n..n+m` artificial and the
/// last column holds the right-hand side.
struct Phase1 {
    tableau: Vec<Vec<Rational>>,
    /// Reduced costs of the auxiliary objective (sum of artificials) followed
    /// by minus its current value.
    costs: Vec<Rational>,
    basis: Vec<usize>,
    n: usize,
    cap: u64,
}

impl Phase1 {
    fn new(mut rows: Vec<Vec<Rational>>, n: usize) -> Self {
        let m = rows.len();
        let width = n + m + 1;
        let mut tableau = Vec::with_capacity(m);
        for (i, row) in rows.iter_mut().enumerate() {
            if row[n].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            let mut t = vec![Rational::zero(); width];
            t[..n].clone_from_slice(&row[..n]);
            t[n + i] = Rational::one();
            t[width - 1] = row[n].clone();
            tableau.push(t);
        }
        let mut costs = vec![Rational::zero(); width];
        for row in &tableau {
            for j in (0..n).chain(core::iter::once(width - 1)) {
                if !row[j].is_zero() {
                    costs[j] -= &row[j];
                }
            }
        }
        Self {
            tableau,
            costs,
            basis: (n..n + m).collect(),
            n,
            cap: binomial(n as u64 + m as u64, m as u64),
        }
    }

    fn run(mut self) -> Result<Feasibility> {
        let width = self.n + self.basis.len() + 1;
        let mut iterations = 0u64;
        while let Some(enter) = (0..width - 1).find(|&j| self.costs[j].is_negative()) {
            let leave = self.ratio_test(enter);
            let Some(leave) = leave else {
                // Phase-1 objective is bounded below by zero.
                unreachable!("unbounded auxiliary objective");
            };
            iterations += 1;
            if iterations > self.cap {
                return Err(Error::IterationCap(self.cap));
            }
            self.pivot(leave, enter);
        }
        // costs[last] holds minus the objective value.
        if !self.costs[width - 1].is_zero() {
            return Ok(Feasibility::Infeasible);
        }
        let mut x = vec![Rational::zero(); self.n];
        for (row, &var) in self.basis.iter().enumerate() {
            if var < self.n {
                x[var] = self.tableau[row][width - 1].clone();
            }
        }
        Ok(Feasibility::Feasible(x))
    }

    /// Minimum ratio row; ties go to the row whose basic variable has the
    /// smallest index.
    fn ratio_test(&self, enter: usize) -> Option<usize> {
        let rhs = self.tableau.first().map_or(0, |r| r.len() - 1);
        let mut best: Option<(Rational, usize)> = None;
        for (row, t) in self.tableau.iter().enumerate() {
            if !t[enter].is_positive() {
                continue;
            }
            let ratio = &t[rhs] / &t[enter];
            let better = match &best {
                None => true,
                Some((b, r)) => ratio < *b || (ratio == *b && self.basis[row] < self.basis[*r]),
            };
            if better {
                best = Some((ratio, row));
            }
        }
        best.map(|(_, row)| row)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.tableau[row][col].recip();
        for v in self.tableau[row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.tableau[row].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            if target[col].is_zero() {
                return;
            }
            let factor = target[col].clone();
            for (t, p) in target.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *t -= &factor * p;
                }
            }
        };
        for (r, t) in self.tableau.iter_mut().enumerate() {
            if r != row {
                eliminate(t);
            }
        }
        eliminate(&mut self.costs);
        self.basis[row] = col;
    }
}

/// `C(n, k)` saturating at `u64::MAX`.
fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

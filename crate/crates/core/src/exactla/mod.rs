//! Exact rational arithmetic and the two linear engines the extension
//! procedures run on: affine solving with inconsistency certificates, and
//! nonnegative feasibility by phase-1 simplex.

mod affine;
mod matrix;
mod rational;
mod simplex;

pub use affine::{solve_affine, AffineOutcome};
pub use matrix::{RatMatrix, RatVector};
pub use rational::{format_rational, normalize_integer_vector, parse_rational, rat, Rational};
pub use simplex::{nonneg_feasible, Feasibility};

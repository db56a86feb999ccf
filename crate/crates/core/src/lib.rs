//! Finite concrete quantum logics and the extension of their states.
//!
//! A logic is a family of subsets of a finite universe that contains the
//! universe, is closed under complements, and is closed under unions of
//! disjoint members. This crate builds such families by closure, checks
//! states on them, and decides with exact rational arithmetic whether a
//! state extends to the whole power set as a signed measure or as a state.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
mod error;
pub mod exactla;
pub mod extend;
pub mod setlogic;
pub mod states;

pub use error::{Error, Result};
pub use exactla::{rat, AffineOutcome, Feasibility, RatMatrix, RatVector, Rational};
pub use extend::{
    check_subadditivity_criterion, classify_state, even_extension_masses, pair_combination,
    solve_signed_extension, solve_state_extension, Classification, ExtensionOutcome,
    SubadditivityVerdict,
};
pub use setlogic::{
    atoms_are_intersections, boolean_atoms, concrete_closure, difference_closure,
    make_even_logic, validate_logic, Family, LogicReport, SubsetMask, Universe,
};
pub use states::{
    complete_state, is_dirac, is_subadditive, is_two_valued, sample_state_even,
    state_from_masses, validate_state, PartialState, SampleMode, SignedPointMeasure, StateTable,
    StateViolation, Subadditivity,
};

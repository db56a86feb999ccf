//! Extension of states from a logic to the whole power set.
//!
//! A point-mass vector `m̄` extends a state `s` when `Σ_{x∈A} m̄(x) = s(A)` for
//! every member `A`. Signed extensions are decided by exact elimination on
//! this incidence system, state extensions by phase-1 simplex on the same
//! system with `m̄ ≥ 0`. On the even logic the signed extension also has a
//! closed form built from pair values.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{nonneg_feasible, solve_affine, AffineOutcome, Feasibility, RatMatrix, RatVector, Rational};
use crate::setlogic::{atoms_are_intersections, boolean_atoms, Family, SubsetMask};
use crate::states::{is_dirac, is_subadditive, is_two_valued, scaled, SignedPointMeasure, StateTable};

/// Whether a state extends to the power set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionOutcome {
    /// `witness` extends the state; `unique` iff the incidence system has
    /// full column rank.
    Feasible {
        witness: SignedPointMeasure,
        unique: bool,
    },
    /// No extension. For signed extensions the certificate `λ`, indexed by
    /// member, satisfies `Σ λ_A·χ_A ≡ 0` while `Σ λ_A·s(A) ≠ 0`.
    Infeasible { certificate: Option<RatVector> },
}

impl ExtensionOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ExtensionOutcome::Feasible { .. })
    }

    pub fn witness(&self) -> Option<&SignedPointMeasure> {
        match self {
            ExtensionOutcome::Feasible { witness, .. } => Some(witness),
            ExtensionOutcome::Infeasible { .. } => None,
        }
    }
}

/// Member-by-point incidence matrix: row `i` is the indicator of member `i`.
pub fn incidence_matrix(family: &Family) -> RatMatrix {
    let n = family.universe().size();
    let mut a = RatMatrix::zeros(family.len(), n);
    for (i, m) in family.members().iter().enumerate() {
        for p in m.points() {
            a.set(i, p, Rational::one());
        }
    }
    a
}

/// Checks a signed-extension certificate against a family and state values.
pub fn certificate_is_sound(family: &Family, values: &[Rational], certificate: &[Rational]) -> bool {
    if certificate.len() != family.len() || values.len() != family.len() {
        return false;
    }
    let a = incidence_matrix(family);
    let Ok(combination) = a.left_mul(certificate) else {
        return false;
    };
    let pairing = certificate
        .iter()
        .zip(values)
        .fold(Rational::zero(), |acc, (c, v)| acc + c * v);
    combination.iter().all(Zero::is_zero) && !pairing.is_zero()
}

/// `Σ λ_A·s(A)` for a certificate `λ`.
pub fn certificate_pairing(values: &[Rational], certificate: &[Rational]) -> Rational {
    certificate
        .iter()
        .zip(values)
        .fold(Rational::zero(), |acc, (c, v)| acc + c * v)
}

fn require_even(state: &StateTable) -> Result<()> {
    if state.family().is_even_logic() {
        Ok(())
    } else {
        Err(Error::NotEvenLogic)
    }
}

fn pair_value(state: &StateTable, x: usize, y: usize) -> &Rational {
    let pair = SubsetMask((1 << x) | (1 << y));
    state.value(pair).expect("even logic contains every pair")
}

/// `s({x,u}) + s({x,v}) − s({u,v})` for a state on an even logic. Half of it
/// is the point mass of `x` in the signed extension, whatever `u`, `v`.
pub fn pair_combination(state: &StateTable, x: usize, u: usize, v: usize) -> Result<Rational> {
    require_even(state)?;
    let size = state.family().universe().size();
    if let Some(&point) = [x, u, v].iter().find(|&&p| p >= size) {
        return Err(Error::PointOutOfRange { point, size });
    }
    if x == u || x == v || u == v {
        return Err(Error::PointsNotDistinct(x, u, v));
    }
    Ok(pair_value(state, x, u) + pair_value(state, x, v) - pair_value(state, u, v))
}

/// Closed-form signed extension of a state on the even logic: the mass of
/// `x` is half of [`pair_combination`] with `u`, `v` the two smallest points
/// other than `x`. On two points the symmetric split `(1/2, 1/2)` is
/// returned.
pub fn even_extension_masses(state: &StateTable) -> Result<SignedPointMeasure> {
    require_even(state)?;
    let n = state.family().universe().size();
    let half = Rational::new(1.into(), 2.into());
    if n == 2 {
        return Ok(SignedPointMeasure::new(alloc::vec![half.clone(), half]));
    }
    let masses = (0..n)
        .map(|x| {
            let mut others = (0..n).filter(|&p| p != x);
            let (u, v) = (others.next().expect("n >= 4"), others.next().expect("n >= 4"));
            pair_combination(state, x, u, v).map(|f| f * &half)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignedPointMeasure::new(masses))
}

/// Decides whether the state extends to the power set as a signed measure.
pub fn solve_signed_extension(state: &StateTable) -> Result<ExtensionOutcome> {
    let family = state.family();
    let a = incidence_matrix(family);
    Ok(match solve_affine(&a, state.values())? {
        AffineOutcome::Solution { particular, rank, .. } => ExtensionOutcome::Feasible {
            witness: SignedPointMeasure::new(particular),
            unique: rank == a.cols(),
        },
        AffineOutcome::Inconsistent { certificate } => ExtensionOutcome::Infeasible {
            certificate: Some(certificate),
        },
    })
}

/// Decides whether the state extends to the power set as a state, i.e. with
/// nonnegative point masses. Infeasibility carries no certificate.
pub fn solve_state_extension(state: &StateTable) -> Result<ExtensionOutcome> {
    let a = incidence_matrix(state.family());
    let rank = match solve_affine(&a, state.values())? {
        AffineOutcome::Solution { rank, .. } => rank,
        AffineOutcome::Inconsistent { .. } => {
            return Ok(ExtensionOutcome::Infeasible { certificate: None })
        }
    };
    Ok(match nonneg_feasible(&a, state.values())? {
        Feasibility::Feasible(x) => ExtensionOutcome::Feasible {
            witness: SignedPointMeasure::new(x),
            unique: rank == a.cols(),
        },
        Feasibility::Infeasible => ExtensionOutcome::Infeasible { certificate: None },
    })
}

/// Result of testing "subadditive iff the signed extension is a state" on
/// one difference-closed logic and state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubadditivityVerdict {
    /// Every Boolean atom is an intersection of two members.
    pub hypothesis_holds: bool,
    pub signed_extendable: bool,
    pub subadditive: bool,
    /// Whether the signed extension is nonnegative on every atom of the
    /// Boolean algebra generated by the family. Absent without an extension.
    pub extension_is_state: Option<bool>,
    /// `s(A) + s(B) − s(A δ B) = 2·m(A ∩ B)` for all members, checked when an
    /// extension exists.
    pub identity_holds: Option<bool>,
    /// Nonnegative point masses obtained by spreading each atom's mass
    /// evenly over its points, when `extension_is_state` is true.
    pub state_extension: Option<SignedPointMeasure>,
    pub consistent_with_theorem: bool,
}

/// Sums of the witness over each atom.
fn atom_masses(atoms: &[SubsetMask], witness: &SignedPointMeasure) -> Vec<Rational> {
    atoms.iter().map(|&a| witness.measure(a)).collect()
}

/// Spreads each atom's mass evenly over its points.
pub fn split_atoms(n: usize, atoms: &[SubsetMask], masses: &[Rational]) -> SignedPointMeasure {
    let mut points = alloc::vec![Rational::zero(); n];
    for (atom, mass) in atoms.iter().zip(masses) {
        let share = mass / Rational::from_integer(atom.len().into());
        for p in atom.points() {
            points[p] = share.clone();
        }
    }
    SignedPointMeasure::new(points)
}

fn intersection_identity(state: &StateTable, witness: &SignedPointMeasure) -> bool {
    let family = state.family();
    let members = family.members();
    let mut joint: Vec<Rational> = state.values().to_vec();
    joint.extend_from_slice(witness.masses());
    if let Some((nums, _)) = scaled(&joint) {
        let (values, masses) = nums.split_at(members.len());
        let measure = |m: SubsetMask| m.points().map(|p| masses[p]).sum::<i128>();
        return identity_scan(family, |i, j, k, meet| {
            values[i] + values[j] - values[k] == 2 * measure(meet)
        });
    }
    let values = state.values();
    let two = Rational::from_integer(2.into());
    identity_scan(family, |i, j, k, meet| {
        &values[i] + &values[j] - &values[k] == &two * witness.measure(meet)
    })
}

fn identity_scan(family: &Family, mut check: impl FnMut(usize, usize, usize, SubsetMask) -> bool) -> bool {
    let members = family.members();
    members.iter().enumerate().all(|(i, &a)| {
        members.iter().enumerate().skip(i).all(|(j, &b)| {
            let k = family
                .index_of(a.sym_diff(b))
                .expect("difference-closed family contains every symmetric difference");
            check(i, j, k, a.intersection(b))
        })
    })
}

/// Runs the atom hypothesis, the signed extension and the subadditivity scan
/// on a difference-closed logic and reports whether "`s` subadditive iff its
/// signed extension is a state" holds whenever its premises do.
pub fn check_subadditivity_criterion(state: &StateTable) -> Result<SubadditivityVerdict> {
    let family = state.family();
    let subadditive = is_subadditive(state)?.holds();
    let hypothesis_holds = atoms_are_intersections(family);
    let outcome = solve_signed_extension(state)?;
    let signed_extendable = outcome.is_feasible();
    let (mut extension_is_state, mut identity_holds, mut state_extension) = (None, None, None);
    if let Some(witness) = outcome.witness() {
        let atoms = boolean_atoms(family);
        let masses = atom_masses(&atoms, witness);
        let nonneg = masses.iter().all(|m| !m.is_negative());
        extension_is_state = Some(nonneg);
        identity_holds = Some(intersection_identity(state, witness));
        if nonneg {
            state_extension = Some(split_atoms(family.universe().size(), &atoms, &masses));
        }
    }
    let consistent_with_theorem =
        !hypothesis_holds || !signed_extendable || Some(subadditive) == extension_is_state;
    Ok(SubadditivityVerdict {
        hypothesis_holds,
        signed_extendable,
        subadditive,
        extension_is_state,
        identity_holds,
        state_extension,
        consistent_with_theorem,
    })
}

/// One-call summary of a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub signed_extendable: bool,
    pub state_extendable: bool,
    /// Absent when the family is not difference-closed.
    pub subadditive: Option<bool>,
    pub two_valued: bool,
    pub dirac: Option<usize>,
}

pub fn classify_state(state: &StateTable) -> Result<Classification> {
    let subadditive = if state.family().is_difference_closed() {
        Some(is_subadditive(state)?.holds())
    } else {
        None
    };
    Ok(Classification {
        signed_extendable: solve_signed_extension(state)?.is_feasible(),
        state_extendable: solve_state_extension(state)?.is_feasible(),
        subadditive,
        two_valued: is_two_valued(state),
        dirac: is_dirac(state),
    })
}

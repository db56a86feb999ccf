//! States on a family: validation, completion of partial assignments,
//! subadditivity, states induced by point masses, and a seeded sampler.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::setlogic::{make_even_logic, Family, SubsetMask};

/// First constraint a candidate state breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateViolation {
    MissingUniverse,
    UniverseNotOne,
    EmptyNotZero,
    Negative(SubsetMask),
    AboveOne(SubsetMask),
    NotAdditive(SubsetMask, SubsetMask),
}

impl fmt::Display for StateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingUniverse => f.write_str("the universe is not a member"),
            Self::UniverseNotOne => f.write_str("value of the universe is not 1"),
            Self::EmptyNotZero => f.write_str("value of the empty set is not 0"),
            Self::Negative(m) => write!(f, "value of {m} is negative"),
            Self::AboveOne(m) => write!(f, "value of {m} exceeds 1"),
            Self::NotAdditive(a, b) => write!(f, "value of {} differs from {} + {}", a.union(*b), a, b),
        }
    }
}

/// A state on a family: one value per member in canonical member order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateTable {
    family: Family,
    values: Vec<Rational>,
}

impl StateTable {
    /// Validates `values` against `family` (see [`validate_state`]).
    pub fn new(family: Family, values: Vec<Rational>) -> Result<Self> {
        validate_state(&family, &values)?;
        Ok(Self { family, values })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, mask: SubsetMask) -> Option<&Rational> {
        self.family.index_of(mask).map(|i| &self.values[i])
    }

    /// Members paired with their values.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &Rational)> {
        self.family.members().iter().copied().zip(&self.values)
    }
}

/// Values assigned to some members only.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialState {
    pub assignments: Vec<(SubsetMask, Rational)>,
}

impl PartialState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, mask: SubsetMask, value: Rational) -> Self {
        self.assignments.push((mask, value));
        self
    }
}

/// Point masses `m̄(x)`; a subset gets the sum over its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPointMeasure {
    masses: Vec<Rational>,
}

impl SignedPointMeasure {
    pub fn new(masses: Vec<Rational>) -> Self {
        Self { masses }
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    pub fn into_masses(self) -> Vec<Rational> {
        self.masses
    }

    pub fn measure(&self, set: SubsetMask) -> Rational {
        set.points()
            .filter_map(|p| self.masses.get(p))
            .fold(Rational::zero(), |acc, m| acc + m)
    }

    pub fn total(&self) -> Rational {
        self.masses.iter().fold(Rational::zero(), |acc, m| acc + m)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.masses.iter().all(|m| !m.is_negative())
    }
}

/// Values rescaled to integers over a common denominator, when that fits in
/// machine words. The pairwise scans run on these instead of big fractions.
pub(crate) fn scaled(values: &[Rational]) -> Option<(Vec<i128>, i128)> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scale = lcm.to_i64()?;
    let nums = values
        .iter()
        .map(|v| (v.numer() * (&lcm / v.denom())).to_i64().map(i128::from))
        .collect::<Option<Vec<_>>>()?;
    Some((nums, i128::from(scale)))
}

trait Exact: Ord + Clone + Zero + for<'a> Add<&'a Self, Output = Self> {}
impl<T: Ord + Clone + Zero + for<'a> Add<&'a T, Output = T>> Exact for T {}

fn first_violation<T: Exact>(family: &Family, values: &[T], one: &T) -> Option<StateViolation> {
    let universe = family.universe();
    let Some(top) = family.index_of(universe.full()) else {
        return Some(StateViolation::MissingUniverse);
    };
    if values[top] != *one {
        return Some(StateViolation::UniverseNotOne);
    }
    if let Some(bottom) = family.index_of(SubsetMask::EMPTY) {
        if !values[bottom].is_zero() {
            return Some(StateViolation::EmptyNotZero);
        }
    }
    let members = family.members();
    for (m, v) in members.iter().zip(values) {
        if *v < T::zero() {
            return Some(StateViolation::Negative(*m));
        }
        if v > one {
            return Some(StateViolation::AboveOne(*m));
        }
    }
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) {
                continue;
            }
            if let Some(k) = family.index_of(a.union(b)) {
                if values[i].clone() + &values[j] != values[k] {
                    return Some(StateViolation::NotAdditive(a, b));
                }
            }
        }
    }
    None
}

/// Checks that `values` is a state on `family`: the universe is a member
/// with value 1, the empty set (when present) has value 0, every value lies
/// in `[0, 1]`, and values add up over every disjoint pair whose union is a
/// member.
pub fn validate_state(family: &Family, values: &[Rational]) -> Result<()> {
    if values.len() != family.len() {
        return Err(Error::ShapeMismatch {
            expected: family.len(),
            found: values.len(),
        });
    }
    let violation = match scaled(values) {
        Some((nums, scale)) => first_violation(family, &nums, &scale),
        None => first_violation(family, values, &Rational::one()),
    };
    match violation {
        Some(v) => Err(Error::InvalidState(v)),
        None => Ok(()),
    }
}

/// Fills in a partial assignment and validates the result.
///
/// Unassigned members whose complement is assigned get one minus that value.
/// Each remaining complement pair gets `default` on the member that comes
/// first in canonical order and `1 − default` on the other. The empty set and
/// the universe default to 0 and 1.
pub fn complete_state(family: &Family, partial: &PartialState, default: &Rational) -> Result<StateTable> {
    let universe = family.universe();
    let mut values: Vec<Option<Rational>> = vec![None; family.len()];
    for (mask, value) in &partial.assignments {
        let i = family.index_of(*mask).ok_or(Error::NotMember(*mask))?;
        if values[i].replace(value.clone()).is_some() {
            return Err(Error::DuplicateAssignment(*mask));
        }
    }
    for (mask, fixed) in [(SubsetMask::EMPTY, Rational::zero()), (universe.full(), Rational::one())] {
        if let Some(i) = family.index_of(mask) {
            values[i].get_or_insert(fixed);
        }
    }
    let complement_index: Vec<Option<usize>> = family
        .members()
        .iter()
        .map(|&m| family.index_of(universe.complement(m)))
        .collect();
    for i in 0..values.len() {
        if values[i].is_none() {
            if let Some(v) = complement_index[i].and_then(|c| values[c].clone()) {
                values[i] = Some(Rational::one() - v);
            }
        }
    }
    for i in 0..values.len() {
        if values[i].is_none() {
            values[i] = Some(default.clone());
            if let Some(c) = complement_index[i] {
                if values[c].is_none() {
                    values[c] = Some(Rational::one() - default);
                }
            }
        }
    }
    let values = values.into_iter().map(|v| v.expect("every member filled")).collect();
    StateTable::new(family.clone(), values)
}

/// Restricts the set function induced by `masses` to `family`.
pub fn state_from_masses(family: &Family, masses: &SignedPointMeasure) -> Result<StateTable> {
    let n = family.universe().size();
    if masses.masses().len() != n {
        return Err(Error::ShapeMismatch {
            expected: n,
            found: masses.masses().len(),
        });
    }
    let total = masses.total();
    if !total.is_one() {
        return Err(Error::MassesNotNormalized(total.to_string()));
    }
    let values: Vec<Rational> = family.members().iter().map(|&m| masses.measure(m)).collect();
    if let Some((m, _)) = family.members().iter().zip(&values).find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeValue { member: *m });
    }
    StateTable::new(family.clone(), values)
}

/// Result of the subadditivity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subadditivity {
    Holds,
    /// First pair in canonical order with `s(A δ B) > s(A) + s(B)`.
    Violated(SubsetMask, SubsetMask),
}

impl Subadditivity {
    pub fn holds(self) -> bool {
        self == Subadditivity::Holds
    }
}

fn first_superadditive_pair<T: Exact>(family: &Family, values: &[T]) -> Option<(usize, usize)> {
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            let k = family
                .index_of(a.sym_diff(b))
                .expect("difference-closed family contains every symmetric difference");
            if values[k] > values[i].clone() + &values[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether `s(A δ B) ≤ s(A) + s(B)` for all members `A`, `B`. The family must
/// be closed under symmetric difference.
pub fn is_subadditive(state: &StateTable) -> Result<Subadditivity> {
    let family = state.family();
    if !family.is_difference_closed() {
        return Err(Error::NotDifferenceClosed);
    }
    let pair = match scaled(state.values()) {
        Some((nums, _)) => first_superadditive_pair(family, &nums),
        None => first_superadditive_pair(family, state.values()),
    };
    Ok(match pair {
        Some((i, j)) => Subadditivity::Violated(family.members()[i], family.members()[j]),
        None => Subadditivity::Holds,
    })
}

pub fn is_two_valued(state: &StateTable) -> bool {
    state.values().iter().all(|v| v.is_zero() || v.is_one())
}

/// The point whose membership indicator equals the state, if any.
pub fn is_dirac(state: &StateTable) -> Option<usize> {
    (0..state.family().universe().size()).find(|&p| {
        state
            .iter()
            .all(|(m, v)| if m.contains(p) { v.is_one() } else { v.is_zero() })
    })
}

/// Sign pattern of sampled point masses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleMode {
    /// Every mass nonnegative.
    NonNegative,
    /// Exactly one strictly negative mass, no larger in absolute value than
    /// the smallest of the others.
    OneNegative,
}

const SAMPLE_ATTEMPTS: usize = 1000;
const MAX_MASS: i64 = 20;

/// Seeded point masses summing to 1 that induce a state on the even logic of
/// `n` points.
pub fn sample_masses(n: usize, seed: u64, mode: SampleMode) -> Result<SignedPointMeasure> {
    if !n.is_multiple_of(2) || !(4..=12).contains(&n) {
        return Err(Error::SampleSize(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let raw: Vec<i64> = match mode {
            SampleMode::NonNegative => (0..n).map(|_| rng.gen_range(0..=MAX_MASS)).collect(),
            SampleMode::OneNegative => {
                let mut raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=MAX_MASS)).collect();
                let negative = rng.gen_range(0..n);
                let floor = raw
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != negative)
                    .map(|(_, &m)| m)
                    .min()
                    .expect("n >= 4");
                raw[negative] = -rng.gen_range(1..=floor);
                raw
            }
        };
        let total: i64 = raw.iter().sum();
        if total <= 0 {
            continue;
        }
        let masses = raw
            .into_iter()
            .map(|m| Rational::new(m.into(), total.into()))
            .collect();
        let masses = SignedPointMeasure::new(masses);
        if masses_induce_even_state(&masses) {
            return Ok(masses);
        }
    }
    Err(Error::SamplerExhausted(SAMPLE_ATTEMPTS))
}

/// Seeded state on the even logic of `n` points, induced by
/// [`sample_masses`].
pub fn sample_state_even(n: usize, seed: u64, mode: SampleMode) -> Result<StateTable> {
    let masses = sample_masses(n, seed, mode)?;
    state_from_masses(&make_even_logic(n)?, &masses)
}

/// Closed-form test for masses summing to 1: the induced set function is
/// nonnegative on every even subset iff at most one mass is negative and its
/// absolute value does not exceed any other mass.
pub fn masses_induce_even_state(masses: &SignedPointMeasure) -> bool {
    let m = masses.masses();
    let negatives: Vec<usize> = (0..m.len()).filter(|&i| m[i].is_negative()).collect();
    match negatives.as_slice() {
        [] => true,
        [x] => m
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != *x)
            .all(|(_, v)| v + &m[*x] >= Rational::zero()),
        _ => false,
    }
}

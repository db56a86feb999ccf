//! Built-in families and states used by the reproduction suite and tests.
//!
//! Point labels are 0-based.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactla::{rat, Rational};
use crate::setlogic::{concrete_closure, difference_closure, make_even_logic, Family, SubsetMask, Universe};
use crate::states::{complete_state, PartialState, StateTable};

fn set(n: usize, points: &[usize]) -> SubsetMask {
    Universe::new(n)
        .and_then(|u| u.subset(points.iter().copied()))
        .expect("catalog sets fit their universe")
}

fn q(p: i64, d: i64) -> Rational {
    rat(p, d).expect("nonzero denominator")
}

/// `A = {0,1,2}`, `B = {1,2,3}`, `C = {2,3,4}`, `D = {0,2,4}` on six points.
pub fn mo4_generators() -> [SubsetMask; 4] {
    [
        set(6, &[0, 1, 2]),
        set(6, &[1, 2, 3]),
        set(6, &[2, 3, 4]),
        set(6, &[0, 2, 4]),
    ]
}

/// Smallest logic containing [`mo4_generators`]; ten members, a copy of MO4.
pub fn mo4_logic() -> Family {
    concrete_closure(Universe::new(6).expect("6 points"), &mo4_generators()).expect("closure")
}

/// Two-valued state with `A ↦ 0`, `B ↦ 1`, `C ↦ 0`, `D ↦ 1`. It has no
/// signed extension to the power set.
pub fn mo4_two_valued_state() -> StateTable {
    let [a, b, c, d] = mo4_generators();
    let partial = PartialState::new()
        .with(a, Rational::zero())
        .with(b, Rational::one())
        .with(c, Rational::zero())
        .with(d, Rational::one());
    complete_state(&mo4_logic(), &partial, &q(1, 2)).expect("valid two-valued state")
}

/// State on the even logic of `2k` points given by its pair values: pairs
/// through point 0 get 0, every other pair gets `1/(k−1)`. Values of larger
/// even sets follow by splitting them into disjoint pairs.
pub fn forced_negative_state(k: usize) -> StateTable {
    assert!(k >= 2, "needs k >= 2");
    let pair_value = q(1, k as i64 - 1);
    even_state_from_pairs(2 * k, |x, _| {
        if x == 0 {
            Rational::zero()
        } else {
            pair_value.clone()
        }
    })
}

/// State on the even logic of `n` points from a symmetric pair function
/// `pair(x, y)` with `x < y`. Each even set is split into consecutive pairs
/// of its sorted points; validation rejects pair data that is not additive.
pub fn even_state_from_pairs(n: usize, pair: impl Fn(usize, usize) -> Rational) -> StateTable {
    let family = make_even_logic(n).expect("even size");
    let values = family
        .members()
        .iter()
        .map(|m| {
            let pts: Vec<usize> = m.points().collect();
            pts.chunks(2)
                .fold(Rational::zero(), |acc, p| acc + pair(p[0], p[1]))
        })
        .collect();
    StateTable::new(family, values).expect("pair data defines a state")
}

/// Dirac state at `point` on the even logic of `n` points.
pub fn dirac_even_state(n: usize, point: usize) -> StateTable {
    let family = make_even_logic(n).expect("even size");
    let values = family
        .members()
        .iter()
        .map(|m| if m.contains(point) { Rational::one() } else { Rational::zero() })
        .collect();
    StateTable::new(family, values).expect("Dirac state")
}

/// `A = {0,1,4,7}`, `B = {0,2,5,8}`, `C = {0,1,2,3}`, `D = {0,4,5,6}` on ten
/// points.
pub fn mo15_generators() -> [SubsetMask; 4] {
    [
        set(10, &[0, 1, 4, 7]),
        set(10, &[0, 2, 5, 8]),
        set(10, &[0, 1, 2, 3]),
        set(10, &[0, 4, 5, 6]),
    ]
}

/// Smallest difference-closed logic containing [`mo15_generators`]: 32
/// members, a copy of MO15.
pub fn mo15_logic() -> Family {
    difference_closure(Universe::new(10).expect("10 points"), &mo15_generators()).expect("span")
}

/// `A, C, A δ B ↦ 1` and `B, D, C δ D ↦ 0`, completed by complements and 1/2.
/// The two intersection identities through point 0 disagree, so there is no
/// signed extension.
pub fn mo15_two_valued_state() -> StateTable {
    let [a, b, c, d] = mo15_generators();
    let partial = PartialState::new()
        .with(a, Rational::one())
        .with(c, Rational::one())
        .with(a.sym_diff(b), Rational::one())
        .with(b, Rational::zero())
        .with(d, Rational::zero())
        .with(c.sym_diff(d), Rational::zero());
    complete_state(&mo15_logic(), &partial, &q(1, 2)).expect("valid state")
}

/// `A ↦ 1/3`, `B ↦ 1/4`, `C ↦ 2/5`, complements `1 − value`, and 1/2 on
/// every other member apart from the empty set and the universe. Subadditive
/// yet without a signed extension.
pub fn mo15_subadditive_state() -> StateTable {
    let [a, b, c, _] = mo15_generators();
    let partial = PartialState::new()
        .with(a, q(1, 3))
        .with(b, q(1, 4))
        .with(c, q(2, 5));
    complete_state(&mo15_logic(), &partial, &q(1, 2)).expect("valid state")
}

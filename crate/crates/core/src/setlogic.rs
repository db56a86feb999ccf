//! Subsets of a finite universe as bit masks, families of subsets, and the
//! two closures that turn generator sets into logics.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest GF(2) rank whose span is materialized as a family.
pub const MAX_SPAN_RANK: u32 = 20;

/// Largest universe accepted by [`make_even_logic`].
pub const MAX_EVEN_LOGIC: usize = 20;

/// A finite universe `{0, …, n−1}` with `1 ≤ n ≤ 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(u8);

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if (1..=64).contains(&size) {
            Ok(Self(size as u8))
        } else {
            Err(Error::UniverseSize(size))
        }
    }

    pub fn size(self) -> usize {
        usize::from(self.0)
    }

    /// The whole universe as a mask.
    pub fn full(self) -> SubsetMask {
        if self.0 == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << self.0) - 1)
        }
    }

    pub fn check(self, mask: SubsetMask) -> Result<SubsetMask> {
        if mask.0 & !self.full().0 == 0 {
            Ok(mask)
        } else {
            Err(Error::MaskOutOfRange {
                mask,
                size: self.size(),
            })
        }
    }

    pub fn complement(self, mask: SubsetMask) -> SubsetMask {
        SubsetMask(self.full().0 & !mask.0)
    }

    pub fn subset(self, points: impl IntoIterator<Item = usize>) -> Result<SubsetMask> {
        let mut bits = 0u64;
        for p in points {
            if p >= self.size() {
                return Err(Error::PointOutOfRange {
                    point: p,
                    size: self.size(),
                });
            }
            bits |= 1 << p;
        }
        Ok(SubsetMask(bits))
    }
}

/// Characteristic vector of a subset; bit `i` set iff point `i` belongs.
///
/// Ordered by the integer value of the bit pattern, which is the canonical
/// member order of every [`Family`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        point < 64 && self.0 >> point & 1 == 1
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn sym_diff(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Points in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }
}

impl fmt::Display for SubsetMask {
    /// Set literal such as `{0,2,5}`; the empty set is `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A duplicate-free collection of subsets of one universe, kept in
/// ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    universe: Universe,
    members: Vec<SubsetMask>,
}

impl Family {
    /// Sorts and deduplicates `members`; every mask must fit the universe.
    pub fn new(universe: Universe, members: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut members = members
            .into_iter()
            .map(|m| universe.check(m))
            .collect::<Result<Vec<_>>>()?;
        members.sort_unstable();
        members.dedup();
        Ok(Self { universe, members })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, mask: SubsetMask) -> Option<usize> {
        self.members.binary_search(&mask).ok()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.index_of(mask).is_some()
    }

    /// Closed under symmetric difference. A family is a GF(2) subspace
    /// exactly when its size equals the size of the span of its members.
    pub fn is_difference_closed(&self) -> bool {
        if self.members.is_empty() {
            return true;
        }
        let rank = XorBasis::from_masks(self.members.iter().copied()).rank();
        1u64.checked_shl(rank) == Some(self.members.len() as u64)
    }

    /// Same member list as the logic of all even subsets of an even universe.
    pub fn is_even_logic(&self) -> bool {
        let n = self.universe.size();
        n.is_multiple_of(2)
            && n <= MAX_EVEN_LOGIC
            && self.members.len() == 1 << (n - 1)
            && self.members.iter().all(|m| m.len() % 2 == 0)
    }
}

/// X_even: all subsets of even cardinality of a universe of even size `n`.
pub fn make_even_logic(n: usize) -> Result<Family> {
    if !n.is_multiple_of(2) || !(2..=MAX_EVEN_LOGIC).contains(&n) {
        return Err(Error::EvenLogicSize {
            n,
            max: MAX_EVEN_LOGIC,
        });
    }
    let universe = Universe::new(n)?;
    let members = (0..1u64 << n)
        .filter(|b| b.count_ones() % 2 == 0)
        .map(SubsetMask)
        .collect();
    Ok(Family { universe, members })
}

/// Smallest logic containing `generators`: adds the universe, then
/// complements and unions of disjoint pairs until nothing new appears.
pub fn concrete_closure(universe: Universe, generators: &[SubsetMask]) -> Result<Family> {
    let mut members = BTreeSet::new();
    let mut pending = vec![universe.full()];
    for &g in generators {
        pending.push(universe.check(g)?);
    }
    while let Some(next) = pending.pop() {
        if !members.insert(next) {
            continue;
        }
        let complement = universe.complement(next);
        if !members.contains(&complement) {
            pending.push(complement);
        }
        for &m in &members {
            if m.is_disjoint(next) {
                let u = m.union(next);
                if !members.contains(&u) {
                    pending.push(u);
                }
            }
        }
    }
    Family::new(universe, members)
}

/// Smallest difference-closed logic containing `generators`: the GF(2)
/// span of the generators together with the universe.
pub fn difference_closure(universe: Universe, generators: &[SubsetMask]) -> Result<Family> {
    let mut basis = XorBasis::default();
    basis.insert(universe.full());
    for &g in generators {
        basis.insert(universe.check(g)?);
    }
    let rank = basis.rank();
    if rank > MAX_SPAN_RANK {
        return Err(Error::SpanTooLarge { rank });
    }
    Family::new(universe, basis.span())
}

/// Row-reduced GF(2) basis over 64-bit masks, one vector per leading bit.
#[derive(Debug, Default, Clone)]
struct XorBasis {
    by_lead: Vec<u64>,
}

impl XorBasis {
    fn from_masks(masks: impl IntoIterator<Item = SubsetMask>) -> Self {
        let mut basis = Self::default();
        for m in masks {
            basis.insert(m);
        }
        basis
    }

    fn insert(&mut self, mask: SubsetMask) {
        let mut v = mask.0;
        for &b in &self.by_lead {
            v = v.min(v ^ b);
        }
        if v != 0 {
            // Keep the basis sorted by leading bit, descending, so the
            // `min` reduction above clears leading bits in order.
            let pos = self.by_lead.partition_point(|&b| b > v);
            self.by_lead.insert(pos, v);
        }
    }

    fn rank(&self) -> u32 {
        self.by_lead.len() as u32
    }

    fn span(&self) -> Vec<SubsetMask> {
        let mut out = Vec::with_capacity(1 << self.by_lead.len());
        out.push(SubsetMask::EMPTY);
        for &b in &self.by_lead {
            let len = out.len();
            for i in 0..len {
                out.push(SubsetMask(out[i].0 ^ b));
            }
        }
        out
    }
}

/// Outcome of the exhaustive axiom checks on a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogicReport {
    pub contains_universe: bool,
    /// First member (canonical order) whose complement is missing.
    pub complement_violation: Option<SubsetMask>,
    /// First disjoint pair whose union is missing.
    pub disjoint_union_violation: Option<(SubsetMask, SubsetMask)>,
    pub difference_closed: bool,
}

impl LogicReport {
    pub fn complement_closed(&self) -> bool {
        self.complement_violation.is_none()
    }

    pub fn disjoint_union_closed(&self) -> bool {
        self.disjoint_union_violation.is_none()
    }

    pub fn is_logic(&self) -> bool {
        self.contains_universe && self.complement_closed() && self.disjoint_union_closed()
    }
}

/// Checks containment of the universe, complement closure, closure under
/// disjoint unions and closure under symmetric differences, pair by pair.
pub fn validate_logic(family: &Family) -> LogicReport {
    let universe = family.universe();
    let members = family.members();
    let complement_violation = members
        .iter()
        .copied()
        .find(|&m| !family.contains(universe.complement(m)));
    let mut disjoint_union_violation = None;
    let mut difference_closed = true;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            if disjoint_union_violation.is_none() && a.is_disjoint(b) && !family.contains(a.union(b)) {
                disjoint_union_violation = Some((a, b));
            }
            if difference_closed && !family.contains(a.sym_diff(b)) {
                difference_closed = false;
            }
        }
    }
    LogicReport {
        contains_universe: family.contains(universe.full()),
        complement_violation,
        disjoint_union_violation,
        difference_closed,
    }
}

/// Atoms of the Boolean algebra generated by the family: the universe split
/// into blocks of points that no member separates. Blocks are ordered by
/// their smallest point.
pub fn boolean_atoms(family: &Family) -> Vec<SubsetMask> {
    let mut blocks = vec![family.universe().full()];
    for &m in family.members() {
        let mut next = Vec::with_capacity(blocks.len() * 2);
        for b in blocks {
            for part in [b.intersection(m), b.difference(m)] {
                if !part.is_empty() {
                    next.push(part);
                }
            }
        }
        blocks = next;
    }
    blocks.sort_unstable_by_key(|b| b.0.trailing_zeros());
    blocks
}

/// How the atom hypothesis behind the subadditivity criterion is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AtomHypothesis {
    /// Every atom equals `A ∩ B` for some members `A`, `B` (possibly equal).
    #[default]
    AtomIsIntersection,
    /// The Boolean algebra generated by all pairwise intersections has the
    /// same atoms as the one generated by the family. Holds for every family
    /// since each member is its own intersection with itself.
    IntersectionsGenerate,
}

/// The atom hypothesis under the default reading.
pub fn atoms_are_intersections(family: &Family) -> bool {
    atom_hypothesis_holds(family, AtomHypothesis::default())
}

pub fn atom_hypothesis_holds(family: &Family, reading: AtomHypothesis) -> bool {
    let members = family.members();
    let intersections = || {
        members
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| members[i..].iter().map(move |&b| a.intersection(b)))
    };
    let atoms = boolean_atoms(family);
    match reading {
        AtomHypothesis::AtomIsIntersection => {
            let meets: BTreeSet<SubsetMask> = intersections().collect();
            atoms.iter().all(|a| meets.contains(a))
        }
        AtomHypothesis::IntersectionsGenerate => {
            let generated = Family {
                universe: family.universe(),
                members: intersections().collect::<BTreeSet<_>>().into_iter().collect(),
            };
            boolean_atoms(&generated) == atoms
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn u(n: usize) -> Universe {
        Universe::new(n).unwrap()
    }

    #[test]
    fn universe_bounds() {
        assert!(Universe::new(0).is_err());
        assert!(Universe::new(65).is_err());
        assert_eq!(u(64).full().0, u64::MAX);
        assert_eq!(u(3).full().0, 0b111);
    }

    #[test]
    fn subset_display() {
        assert_eq!(alloc::format!("{}", u(6).subset([0, 2, 5]).unwrap()), "{0,2,5}");
        assert_eq!(alloc::format!("{}", SubsetMask::EMPTY), "{}");
        assert!(u(3).subset([3]).is_err());
    }

    #[test]
    fn even_logic_sizes() {
        let f4 = make_even_logic(4).unwrap();
        assert_eq!(f4.len(), 8);
        assert_eq!(f4.members().iter().filter(|m| m.len() == 2).count(), 6);
        assert_eq!(make_even_logic(6).unwrap().len(), 32);
        let f2 = make_even_logic(2).unwrap();
        assert_eq!(f2.members(), &[SubsetMask(0), SubsetMask(0b11)]);
        assert!(f4.is_even_logic());
        assert!(make_even_logic(3).is_err());
        assert!(make_even_logic(0).is_err());
        assert!(make_even_logic(22).is_err());
    }

    #[test]
    fn closure_of_four_generators_has_ten_members() {
        let family = catalog::mo4_logic();
        let x = family.universe();
        let mut expected = vec![SubsetMask::EMPTY, x.full()];
        for g in catalog::mo4_generators() {
            expected.push(g);
            expected.push(x.complement(g));
        }
        expected.sort();
        assert_eq!(family.members(), expected.as_slice());
    }

    #[test]
    fn closure_without_generators() {
        for n in [1, 3, 7] {
            let fam = concrete_closure(u(n), &[]).unwrap();
            assert_eq!(fam.members(), &[SubsetMask::EMPTY, u(n).full()]);
            let fam = difference_closure(u(n), &[]).unwrap();
            assert_eq!(fam.members(), &[SubsetMask::EMPTY, u(n).full()]);
        }
    }

    #[test]
    fn closure_of_singletons_is_power_set() {
        let x = u(3);
        let gens: Vec<_> = (0..3).map(|p| x.subset([p]).unwrap()).collect();
        let fam = concrete_closure(x, &gens).unwrap();
        assert_eq!(fam.len(), 8);
    }

    #[test]
    fn difference_closure_of_pairs_is_even_logic() {
        let x = u(6);
        let mut gens = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                gens.push(x.subset([i, j]).unwrap());
            }
        }
        assert_eq!(difference_closure(x, &gens).unwrap(), make_even_logic(6).unwrap());
    }

    #[test]
    fn mo15_family_shape() {
        let fam = catalog::mo15_logic();
        assert_eq!(fam.len(), 32);
        let fours: Vec<_> = fam.members().iter().filter(|m| m.len() == 4).copied().collect();
        let sixes = fam.members().iter().filter(|m| m.len() == 6).count();
        assert_eq!(fours.len(), 15);
        assert_eq!(sixes, 15);
        for (i, a) in fours.iter().enumerate() {
            for b in &fours[i + 1..] {
                assert!(!a.is_disjoint(*b));
            }
        }
    }

    #[test]
    fn reports() {
        let r = validate_logic(&make_even_logic(6).unwrap());
        assert!(r.is_logic() && r.difference_closed);

        let mo4 = catalog::mo4_logic();
        let r = validate_logic(&mo4);
        assert!(r.is_logic());
        assert!(!r.difference_closed);
        let [a, b, ..] = catalog::mo4_generators();
        assert_eq!(a.sym_diff(b), u(6).subset([0, 3]).unwrap());
        assert!(!mo4.contains(a.sym_diff(b)));

        let only_empty = Family::new(u(3), [SubsetMask::EMPTY]).unwrap();
        assert!(!validate_logic(&only_empty).contains_universe);

        let broken = Family::new(u(3), [SubsetMask(0), SubsetMask(1), SubsetMask(2), SubsetMask(7)]).unwrap();
        let r = validate_logic(&broken);
        assert_eq!(r.complement_violation, Some(SubsetMask(1)));
        assert_eq!(r.disjoint_union_violation, Some((SubsetMask(1), SubsetMask(2))));
    }

    #[test]
    fn atoms() {
        let trivial = concrete_closure(u(5), &[]).unwrap();
        assert_eq!(boolean_atoms(&trivial), vec![u(5).full()]);
        let even = make_even_logic(6).unwrap();
        assert_eq!(boolean_atoms(&even), (0..6).map(|p| SubsetMask(1 << p)).collect::<Vec<_>>());
        assert_eq!(boolean_atoms(&catalog::mo4_logic()).len(), 6);
        let coarse = concrete_closure(u(4), &[SubsetMask(0b0011)]).unwrap();
        assert_eq!(boolean_atoms(&coarse), vec![SubsetMask(0b0011), SubsetMask(0b1100)]);
    }

    #[test]
    fn atom_hypothesis() {
        assert!(atoms_are_intersections(&make_even_logic(4).unwrap()));
        assert!(atoms_are_intersections(&make_even_logic(8).unwrap()));
        assert!(atoms_are_intersections(&concrete_closure(u(4), &[]).unwrap()));
        // Regression value from an exhaustive scan: every singleton of the
        // MO15 family is the meet of a four-point and a six-point member.
        let mo15 = catalog::mo15_logic();
        assert_eq!(boolean_atoms(&mo15).len(), 10);
        assert!(atoms_are_intersections(&mo15));
        let coarse = concrete_closure(u(4), &[SubsetMask(0b0011)]).unwrap();
        assert!(atoms_are_intersections(&coarse));
        assert!(atoms_are_intersections(&catalog::mo4_logic()));
        // Two crossing pairs on three points: atom {2} = {0,2} ∩ {1,2}, but
        // the closure under complements is needed for {0} and {1}.
        let sparse = Family::new(u(3), [SubsetMask(0b101), SubsetMask(0b110), SubsetMask(0b111)]).unwrap();
        assert!(!atoms_are_intersections(&sparse));
        assert!(atom_hypothesis_holds(&mo15, AtomHypothesis::IntersectionsGenerate));
    }

    fn brute_force_closure(x: Universe, gens: &[SubsetMask]) -> BTreeSet<SubsetMask> {
        let mut set: BTreeSet<_> = gens.iter().copied().collect();
        set.insert(x.full());
        loop {
            let current: Vec<_> = set.iter().copied().collect();
            let before = set.len();
            for &a in &current {
                set.insert(x.complement(a));
                for &b in &current {
                    set.insert(a.sym_diff(b));
                    if a.is_disjoint(b) {
                        set.insert(a.union(b));
                    }
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    fn generators() -> impl Strategy<Value = (Universe, Vec<SubsetMask>)> {
        (1usize..=8).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 0..5)
                .prop_map(move |g| (u(n), g.into_iter().map(SubsetMask).collect()))
        })
    }

    proptest! {
        #[test]
        fn difference_closure_matches_brute_force((x, gens) in generators()) {
            let fam = difference_closure(x, &gens).unwrap();
            let expect: Vec<_> = brute_force_closure(x, &gens).into_iter().collect();
            prop_assert_eq!(fam.members(), expect.as_slice());
            prop_assert!(fam.len().is_power_of_two());
            let report = validate_logic(&fam);
            prop_assert!(report.is_logic() && report.difference_closed);
            prop_assert!(fam.is_difference_closed());
        }

        #[test]
        fn concrete_closure_is_idempotent_and_inside_span((x, gens) in generators()) {
            let fam = concrete_closure(x, &gens).unwrap();
            prop_assert!(validate_logic(&fam).is_logic());
            let again = concrete_closure(x, fam.members()).unwrap();
            prop_assert_eq!(&again, &fam);
            let span = difference_closure(x, &gens).unwrap();
            prop_assert!(fam.members().iter().all(|m| span.contains(*m)));
        }

        #[test]
        fn fast_difference_check_matches_exhaustive(
            n in 1usize..=6,
            masks in proptest::collection::vec(0u64..64, 0..12),
        ) {
            let x = u(n);
            let fam = Family::new(x, masks.into_iter().map(|m| SubsetMask(m & x.full().0))).unwrap();
            prop_assert_eq!(fam.is_difference_closed(), validate_logic(&fam).difference_closed);
        }
    }
}

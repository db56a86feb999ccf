//! Brute-force reference implementations, kept independent of the library's
//! own engines.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use qlogic_core::{Family, Rational, SubsetMask, Universe};

/// Closure under complement, symmetric difference and disjoint union,
/// seeded with the universe, by repeated full sweeps.
pub fn brute_force_closure(x: Universe, gens: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut set: BTreeSet<SubsetMask> = gens.iter().copied().collect();
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
            return set.into_iter().collect();
        }
    }
}

/// Solution of `A·x = b` by elimination with columns scanned right to left
/// and the last eligible row as pivot. `None` if inconsistent; otherwise the
/// rank and, when the rank equals the column count, the unique solution.
pub fn eliminate(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<(usize, Option<Vec<Rational>>)> {
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; rows.len()];
    for col in (0..cols).rev() {
        let Some(p) = (0..rows.len()).rev().find(|&r| !used[r] && !rows[r][col].is_zero()) else {
            continue;
        };
        used[p] = true;
        let pivot = rows[p].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != p && !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for c in 0..=cols {
                    let delta = &f * &pivot[c];
                    row[c] -= delta;
                }
            }
        }
        pivots.push((p, col));
    }
    for (r, row) in rows.iter().enumerate() {
        if !used[r] && !row[cols].is_zero() {
            return None;
        }
    }
    let rank = pivots.len();
    if rank < cols {
        return Some((rank, None));
    }
    let mut x = vec![Rational::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = &rows[r][cols] / &rows[r][c];
    }
    Some((rank, Some(x)))
}

/// Nonnegative feasibility of `A·x = b` by enumerating every column support:
/// a feasible system has a basic solution supported on independent columns.
pub fn nonneg_by_vertices(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    for support in 0u32..(1 << cols) {
        let picked: Vec<usize> = (0..cols).filter(|c| support >> c & 1 == 1).collect();
        let sub: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| picked.iter().map(|&c| row[c].clone()).collect())
            .collect();
        if let Some((_, Some(x))) = eliminate(&sub, b, picked.len()) {
            if x.iter().all(|v| !v.is_negative()) {
                let mut full = vec![Rational::zero(); cols];
                for (v, &c) in x.into_iter().zip(&picked) {
                    full[c] = v;
                }
                return Some(full);
            }
        }
    }
    None
}

pub fn incidence_rows(family: &Family) -> Vec<Vec<Rational>> {
    let n = family.universe().size();
    family
        .members()
        .iter()
        .map(|m| {
            (0..n)
                .map(|p| if m.contains(p) { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// All {0,1}-valued states of a logic, by depth-first assignment of
/// complement pairs with pruning on disjoint-pair additivity. Stops after
/// `limit` states.
pub fn two_valued_states(family: &Family, limit: usize) -> Vec<Vec<bool>> {
    let x = family.universe();
    let members = family.members();
    let mut order: Vec<usize> = Vec::new();
    let mut seen = vec![false; members.len()];
    for (i, &m) in members.iter().enumerate() {
        if !seen[i] {
            let c = family.index_of(x.complement(m)).expect("complement-closed");
            seen[i] = true;
            seen[c] = true;
            order.push(i);
        }
    }
    let mut assignment: Vec<Option<bool>> = vec![None; members.len()];
    let mut out = Vec::new();
    dfs(family, &order, 0, &mut assignment, &mut out, limit);
    out
}

fn consistent(family: &Family, assignment: &[Option<bool>]) -> bool {
    let members = family.members();
    if let Some(Some(true)) = family.index_of(SubsetMask::EMPTY).map(|i| assignment[i]) {
        return false;
    }
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) {
                continue;
            }
            let k = family.index_of(a.union(b)).expect("disjoint-union-closed");
            if let (Some(va), Some(vb), Some(vk)) = (assignment[i], assignment[j], assignment[k]) {
                if u8::from(va) + u8::from(vb) != u8::from(vk) {
                    return false;
                }
            }
        }
    }
    true
}

fn dfs(
    family: &Family,
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<Option<bool>>,
    out: &mut Vec<Vec<bool>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if depth == order.len() {
        out.push(assignment.iter().map(|v| v.expect("assigned")).collect());
        return;
    }
    let i = order[depth];
    let x = family.universe();
    let c = family.index_of(x.complement(family.members()[i])).unwrap();
    for value in [false, true] {
        assignment[i] = Some(value);
        assignment[c] = Some(!value);
        if consistent(family, assignment) {
            dfs(family, order, depth + 1, assignment, out, limit);
        }
        assignment[i] = None;
        assignment[c] = None;
    }
}

/// Whether the induced set function of `masses` is nonnegative on every
/// even-cardinality subset.
pub fn masses_nonnegative_on_even_sets(masses: &[Rational]) -> bool {
    let n = masses.len();
    (0..1u64 << n).filter(|b| b.count_ones() % 2 == 0).all(|b| {
        let total = (0..n)
            .filter(|p| b >> p & 1 == 1)
            .fold(Rational::zero(), |acc, p| acc + &masses[p]);
        !total.is_negative()
    })
}

//! QSF, the state file format.
//!
//! ```text
//! state over logic.qlf
//! value {} 0
//! value {0,1,2} 1/3
//! ```
//!
//! Set literals list ascending point indices without spaces. Values use the
//! exact `p/q` text form.

use std::collections::HashSet;
use std::fmt::Write;

use qlogic_core::exactla::{format_rational, parse_rational};
use qlogic_core::{complete_state, Family, PartialState, Rational, StateTable, SubsetMask};

use crate::error::FormatError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFile {
    /// Path of the logic file named in the header, as written.
    pub over: String,
    /// `(line, set, value)` in file order.
    pub entries: Vec<(usize, SubsetMask, Rational)>,
}

#[derive(Debug, thiserror::Error)]
pub enum ResolveError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    State(#[from] qlogic_core::Error),
}

/// Parses `{i1,i2,...}`.
pub fn parse_set_literal(text: &str) -> Option<SubsetMask> {
    let inner = text.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(SubsetMask::EMPTY);
    }
    let mut bits = 0u64;
    let mut last: Option<usize> = None;
    for part in inner.split(',') {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let p: usize = part.parse().ok()?;
        if p >= 64 || last.is_some_and(|l| p <= l) {
            return None;
        }
        last = Some(p);
        bits |= 1 << p;
    }
    Some(SubsetMask(bits))
}

pub fn parse_qsf(text: &str) -> Result<StateFile, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| FormatError::new(1, "missing `state over <logic-file>` line"))?;
    let over = header
        .strip_prefix("state over ")
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .ok_or_else(|| FormatError::new(line_no, "expected `state over <logic-file>`"))?;

    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in lines {
        let words: Vec<&str> = line.split_whitespace().collect();
        let ["value", set, value] = words.as_slice() else {
            return Err(FormatError::new(line_no, "expected `value {i1,...} p/q`"));
        };
        let mask = parse_set_literal(set)
            .ok_or_else(|| FormatError::new(line_no, format!("bad set literal `{set}`")))?;
        let value = parse_rational(value).map_err(|e| FormatError::new(line_no, e.to_string()))?;
        if !seen.insert(mask) {
            return Err(FormatError::new(line_no, format!("{mask} assigned twice")));
        }
        entries.push((line_no, mask, value));
    }
    Ok(StateFile {
        over: over.to_string(),
        entries,
    })
}

impl StateFile {
    /// Binds the values to `family`. Sets outside the family are rejected.
    /// Members without a value are an error unless `fill` is given, in which
    /// case the assignment is completed by complements and `fill`.
    pub fn resolve(&self, family: &Family, fill: Option<&Rational>) -> Result<StateTable, ResolveError> {
        for (line, mask, _) in &self.entries {
            if !family.contains(*mask) {
                return Err(FormatError::new(*line, format!("{mask} is not a member of the logic")).into());
            }
        }
        if self.entries.len() == family.len() {
            let mut values = vec![Rational::from_integer(0.into()); family.len()];
            for (_, mask, value) in &self.entries {
                values[family.index_of(*mask).expect("checked above")] = value.clone();
            }
            return Ok(StateTable::new(family.clone(), values)?);
        }
        let Some(fill) = fill else {
            let assigned: HashSet<SubsetMask> = self.entries.iter().map(|(_, m, _)| *m).collect();
            let missing = family
                .members()
                .iter()
                .find(|m| !assigned.contains(m))
                .expect("fewer entries than members");
            let last = self.entries.last().map_or(1, |(l, _, _)| *l);
            return Err(FormatError::new(last, format!("no value for {missing} (use a fill value)")).into());
        };
        let partial = PartialState {
            assignments: self.entries.iter().map(|(_, m, v)| (*m, v.clone())).collect(),
        };
        Ok(complete_state(family, &partial, fill)?)
    }
}

/// Serializes every member's value in canonical order.
pub fn write_qsf(state: &StateTable, over: &str) -> String {
    let mut out = format!("state over {over}\n");
    for (mask, value) in state.iter() {
        writeln!(out, "value {mask} {}", format_rational(value)).unwrap();
    }
    out
}

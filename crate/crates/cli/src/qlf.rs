//! QLF, the line-oriented logic file format.
//!
//! ```text
//! # comment
//! universe 6
//! set A 0 1 2
//! set Ac 3 4 5
//! ```
//!
//! The first non-comment line declares the universe size. Each `set` line
//! names a subset by strictly increasing point indices; a `set` line without
//! indices is the empty set.

use std::collections::HashSet;
use std::fmt::Write;

use qlogic_core::{Family, SubsetMask, Universe};

use crate::error::FormatError;

/// A parsed logic file: the universe and the named sets in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicFile {
    pub universe: Universe,
    pub sets: Vec<(String, SubsetMask)>,
}

impl LogicFile {
    /// The listed sets as a family (canonical order).
    pub fn family(&self) -> Family {
        Family::new(self.universe, self.sets.iter().map(|(_, m)| *m))
            .expect("parser only admits masks inside the universe")
    }

    pub fn masks(&self) -> Vec<SubsetMask> {
        self.sets.iter().map(|(_, m)| *m).collect()
    }

    /// Name of each family member, aligned with canonical order.
    pub fn member_names(&self) -> Vec<String> {
        let family = self.family();
        let mut names = vec![String::new(); family.len()];
        for (name, mask) in &self.sets {
            let i = family.index_of(*mask).expect("listed set is a member");
            names[i] = name.clone();
        }
        names
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_qlf(text: &str) -> Result<LogicFile, FormatError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| FormatError::new(1, "missing `universe <n>` line"))?;
    let universe = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["universe", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| FormatError::new(line_no, format!("bad universe size `{n}`")))?;
            Universe::new(n).map_err(|e| FormatError::new(line_no, e.to_string()))?
        }
        _ => return Err(FormatError::new(line_no, "expected `universe <n>`")),
    };

    let mut sets = Vec::new();
    let mut names = HashSet::new();
    let mut masks = HashSet::new();
    for (line_no, line) in lines {
        let mut words = line.split_whitespace();
        if words.next() != Some("set") {
            return Err(FormatError::new(line_no, "expected `set <name> <indices...>`"));
        }
        let name = words
            .next()
            .ok_or_else(|| FormatError::new(line_no, "missing set name"))?;
        let mut points = Vec::new();
        for w in words {
            let p: usize = w
                .parse()
                .map_err(|_| FormatError::new(line_no, format!("bad index `{w}`")))?;
            if points.last().is_some_and(|&last| p <= last) {
                return Err(FormatError::new(line_no, "indices must be strictly increasing"));
            }
            points.push(p);
        }
        let mask = universe
            .subset(points)
            .map_err(|e| FormatError::new(line_no, e.to_string()))?;
        if !names.insert(name.to_string()) {
            return Err(FormatError::new(line_no, format!("duplicate set name `{name}`")));
        }
        if !masks.insert(mask) {
            return Err(FormatError::new(line_no, format!("set {mask} listed twice")));
        }
        sets.push((name.to_string(), mask));
    }
    Ok(LogicFile { universe, sets })
}

/// Serializes a family in canonical member order. Members are named
/// `S0, S1, …` unless `names` (aligned with the members) is given.
pub fn write_qlf(family: &Family, names: Option<&[String]>) -> String {
    let mut out = String::new();
    writeln!(out, "universe {}", family.universe().size()).unwrap();
    for (i, m) in family.members().iter().enumerate() {
        let name = match names {
            Some(names) if !names[i].is_empty() => names[i].clone(),
            _ => format!("S{i}"),
        };
        out.push_str("set ");
        out.push_str(&name);
        for p in m.points() {
            write!(out, " {p}").unwrap();
        }
        out.push('\n');
    }
    out
}

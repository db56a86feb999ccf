//! Single-line machine output.
//!
//! ```text
//! FEASIBLE unique=1 masses=-1/2,1/2,1/2,1/2
//! INFEASIBLE cert=1:1,2:-1,...
//! SUBADDITIVE true
//! SUBADDITIVE false {0,1} {0,2}
//! ```
//!
//! Certificates list nonzero coefficients by canonical member index.

use qlogic_core::exactla::{format_rational, parse_rational};
use qlogic_core::{
    Classification, ExtensionOutcome, LogicReport, Rational, SignedPointMeasure, StateViolation,
    Subadditivity,
};

fn join_rationals(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

pub fn extension_line(outcome: &ExtensionOutcome) -> String {
    match outcome {
        ExtensionOutcome::Feasible { witness, unique } => format!(
            "FEASIBLE unique={} masses={}",
            u8::from(*unique),
            join_rationals(witness.masses())
        ),
        ExtensionOutcome::Infeasible { certificate } => {
            let terms: Vec<String> = certificate
                .iter()
                .flatten()
                .enumerate()
                .filter(|(_, c)| *c != &Rational::from_integer(0.into()))
                .map(|(i, c)| format!("{i}:{}", format_rational(c)))
                .collect();
            format!("INFEASIBLE cert={}", terms.join(","))
        }
    }
}

/// Inverse of [`extension_line`]; needs the member count to rebuild a dense
/// certificate. An empty `cert=` reads back as no certificate.
pub fn parse_extension_line(line: &str, members: usize) -> Option<ExtensionOutcome> {
    if let Some(rest) = line.strip_prefix("FEASIBLE unique=") {
        let (flag, masses) = rest.split_once(" masses=")?;
        let unique = match flag {
            "0" => false,
            "1" => true,
            _ => return None,
        };
        let masses = if masses.is_empty() {
            Vec::new()
        } else {
            masses
                .split(',')
                .map(|m| parse_rational(m).ok())
                .collect::<Option<Vec<_>>>()?
        };
        return Some(ExtensionOutcome::Feasible {
            witness: SignedPointMeasure::new(masses),
            unique,
        });
    }
    let terms = line.strip_prefix("INFEASIBLE cert=")?;
    if terms.is_empty() {
        return Some(ExtensionOutcome::Infeasible { certificate: None });
    }
    let mut cert = vec![Rational::from_integer(0.into()); members];
    for term in terms.split(',') {
        let (i, c) = term.split_once(':')?;
        let i: usize = i.parse().ok()?;
        *cert.get_mut(i)? = parse_rational(c).ok()?;
    }
    Some(ExtensionOutcome::Infeasible {
        certificate: Some(cert),
    })
}

pub fn subadditivity_line(result: Subadditivity) -> String {
    match result {
        Subadditivity::Holds => "SUBADDITIVE true".into(),
        Subadditivity::Violated(a, b) => format!("SUBADDITIVE false {a} {b}"),
    }
}

pub fn logic_line(report: &LogicReport) -> String {
    let flag = |b: bool| u8::from(b);
    let mut line = format!(
        "LOGIC valid={} contains_universe={} complement_closed={} disjoint_union_closed={} difference_closed={}",
        flag(report.is_logic()),
        flag(report.contains_universe),
        flag(report.complement_closed()),
        flag(report.disjoint_union_closed()),
        flag(report.difference_closed),
    );
    if let Some(m) = report.complement_violation {
        line.push_str(&format!(" missing_complement_of={m}"));
    }
    if let Some((a, b)) = report.disjoint_union_violation {
        line.push_str(&format!(" missing_union_of={a},{b}"));
    }
    line
}

pub fn state_line(violation: Option<&StateViolation>) -> String {
    match violation {
        None => "STATE valid".into(),
        Some(v) => format!("STATE invalid {v}"),
    }
}

pub fn classification_line(c: &Classification) -> String {
    let flag = |b: bool| u8::from(b);
    let subadditive = c.subadditive.map_or("na".to_string(), |b| flag(b).to_string());
    let dirac = c.dirac.map_or("none".to_string(), |p| p.to_string());
    format!(
        "CLASSIFY signed={} state={} subadditive={subadditive} two_valued={} dirac={dirac}",
        flag(c.signed_extendable),
        flag(c.state_extendable),
        flag(c.two_valued),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use qlogic_core::{catalog, sample_state_even, solve_signed_extension, solve_state_extension, SampleMode};

    #[test]
    fn mo4_certificate_line() {
        let s = catalog::mo4_two_valued_state();
        let out = solve_signed_extension(&s).unwrap();
        let line = extension_line(&out);
        // Canonical order: {}, A, B, D, C, Cc, Dc, Bc, Ac, X.
        assert_eq!(line, "INFEASIBLE cert=1:1,2:-1,3:-1,4:1,5:-1,6:1,7:1,8:-1");
        assert_eq!(parse_extension_line(&line, s.family().len()), Some(out));
    }

    #[test]
    fn feasible_line() {
        let s = catalog::forced_negative_state(2);
        let line = extension_line(&solve_signed_extension(&s).unwrap());
        assert_eq!(line, "FEASIBLE unique=1 masses=-1/2,1/2,1/2,1/2");
        let line = extension_line(&solve_state_extension(&s).unwrap());
        assert_eq!(line, "INFEASIBLE cert=");
        assert_eq!(
            parse_extension_line(&line, 8),
            Some(ExtensionOutcome::Infeasible { certificate: None })
        );
    }

    #[test]
    fn other_lines() {
        assert_eq!(subadditivity_line(Subadditivity::Holds), "SUBADDITIVE true");
        let s = catalog::forced_negative_state(3);
        let v = qlogic_core::is_subadditive(&s).unwrap();
        assert_eq!(subadditivity_line(v), "SUBADDITIVE false {0,1} {0,2}");
        let c = qlogic_core::classify_state(&catalog::mo4_two_valued_state()).unwrap();
        assert_eq!(classification_line(&c), "CLASSIFY signed=0 state=0 subadditive=na two_valued=1 dirac=none");
        assert_eq!(state_line(None), "STATE valid");
    }

    #[test]
    fn rejects_garbage() {
        for line in ["", "FEASIBLE", "FEASIBLE unique=2 masses=1", "INFEASIBLE cert=9:1", "INFEASIBLE cert=0-1"] {
            assert_eq!(parse_extension_line(line, 3), None, "{line}");
        }
    }

    proptest! {
        #[test]
        fn lines_round_trip(seed in any::<u64>(), n in prop::sample::select(vec![4usize, 6])) {
            let s = sample_state_even(n, seed, SampleMode::OneNegative).unwrap();
            for out in [solve_signed_extension(&s).unwrap(), solve_state_extension(&s).unwrap()] {
                let line = extension_line(&out);
                prop_assert_eq!(parse_extension_line(&line, s.family().len()), Some(out));
            }
        }
    }
}

//! Built-in reproduction suite: the worked examples and theorems on
//! concrete logics, checked exactly on embedded inputs.

use qlogic_core::extend::{certificate_is_sound, certificate_pairing};
use qlogic_core::{
    catalog, check_subadditivity_criterion, even_extension_masses, is_subadditive,
    pair_combination, rat, sample_state_even, solve_signed_extension, solve_state_extension,
    ExtensionOutcome, Rational, SampleMode, StateTable, SubsetMask,
};

type Outcome = Result<(), String>;

pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub run: fn() -> Outcome,
}

pub struct CheckResult {
    pub id: &'static str,
    pub description: &'static str,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(()) => format!("PASS  {:<28} {}", self.id, self.description),
            Err(why) => format!("FAIL  {:<28} {}: {why}", self.id, self.description),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn q(p: i64, d: i64) -> Rational {
    rat(p, d).expect("nonzero denominator")
}

const SAMPLES: u64 = 500;
const SIZES: [usize; 4] = [4, 6, 8, 10];

fn seeded_states(n: usize) -> impl Iterator<Item = StateTable> {
    (0..SAMPLES).map(move |i| {
        let mode = if i % 2 == 0 { SampleMode::NonNegative } else { SampleMode::OneNegative };
        sample_state_even(n, 1000 * n as u64 + i, mode).expect("sampler")
    })
}

fn mo4_closure() -> Outcome {
    let family = catalog::mo4_logic();
    let x = family.universe();
    let mut expected = vec![SubsetMask::EMPTY, x.full()];
    for g in catalog::mo4_generators() {
        expected.extend([g, x.complement(g)]);
    }
    expected.sort();
    ensure!(family.members() == expected.as_slice(), "got {:?}", family.members());
    Ok(())
}

fn mo4_no_signed_extension() -> Outcome {
    let s = catalog::mo4_two_valued_state();
    match solve_signed_extension(&s).map_err(|e| e.to_string())? {
        ExtensionOutcome::Infeasible { certificate: Some(c) } => {
            ensure!(certificate_is_sound(s.family(), s.values(), &c), "unsound certificate");
            let pairing = certificate_pairing(s.values(), &c);
            ensure!(pairing == q(-4, 1), "certificate pairs to {pairing}");
            Ok(())
        }
        other => Err(format!("expected no extension, got {other:?}")),
    }
}

fn even_pair_recovery() -> Outcome {
    for n in SIZES {
        for s in seeded_states(n) {
            let m = even_extension_masses(&s).map_err(|e| e.to_string())?;
            ensure!(m.total() == q(1, 1), "n={n}: total {}", m.total());
            for x in 0..n {
                for y in x + 1..n {
                    let pair = SubsetMask(1 << x | 1 << y);
                    ensure!(m.measure(pair) == *s.value(pair).unwrap(), "n={n}: pair {pair}");
                }
            }
        }
    }
    Ok(())
}

fn even_choice_independence() -> Outcome {
    for n in [4, 6, 8] {
        for s in seeded_states(n).take(100) {
            for x in 0..n {
                let mut values = Vec::new();
                for u in (0..n).filter(|&u| u != x) {
                    for v in (0..n).filter(|&v| v != x && v != u) {
                        values.push(pair_combination(&s, x, u, v).map_err(|e| e.to_string())?);
                    }
                }
                ensure!(values.windows(2).all(|w| w[0] == w[1]), "n={n}: point {x} depends on (u,v)");
            }
        }
    }
    Ok(())
}

fn even_solver_agreement() -> Outcome {
    for n in SIZES {
        for s in seeded_states(n) {
            let m = even_extension_masses(&s).map_err(|e| e.to_string())?;
            match solve_signed_extension(&s).map_err(|e| e.to_string())? {
                ExtensionOutcome::Feasible { witness, unique: true } if witness == m => {}
                other => return Err(format!("n={n}: solver gave {other:?}")),
            }
        }
    }
    Ok(())
}

fn forced_negative_mass() -> Outcome {
    for k in 2..=6i64 {
        let s = catalog::forced_negative_state(k as usize);
        let mut expect = vec![q(1, 2 * (k - 1)); 2 * k as usize];
        expect[0] = q(-1, 2 * (k - 1));
        let m = even_extension_masses(&s).map_err(|e| e.to_string())?;
        ensure!(m.masses() == expect.as_slice(), "k={k}: masses {:?}", m.masses());
        ensure!(
            !solve_state_extension(&s).map_err(|e| e.to_string())?.is_feasible(),
            "k={k}: extends as a state"
        );
    }
    Ok(())
}

fn mo15_closure() -> Outcome {
    let family = catalog::mo15_logic();
    let fours: Vec<_> = family.members().iter().copied().filter(|m| m.len() == 4).collect();
    let sixes = family.members().iter().filter(|m| m.len() == 6).count();
    ensure!(family.len() == 32, "size {}", family.len());
    ensure!(fours.len() == 15 && sixes == 15, "{} + {sixes}", fours.len());
    for (i, a) in fours.iter().enumerate() {
        for b in &fours[i + 1..] {
            ensure!(!a.is_disjoint(*b), "{a} and {b} are disjoint");
        }
    }
    Ok(())
}

fn no_signed_extension(s: &StateTable) -> Outcome {
    match solve_signed_extension(s).map_err(|e| e.to_string())? {
        ExtensionOutcome::Infeasible { certificate: Some(c) } => {
            ensure!(certificate_is_sound(s.family(), s.values(), &c), "unsound certificate");
            Ok(())
        }
        other => Err(format!("expected no extension, got {other:?}")),
    }
}

fn mo15_two_valued() -> Outcome {
    no_signed_extension(&catalog::mo15_two_valued_state())
}

fn mo15_subadditive() -> Outcome {
    let s = catalog::mo15_subadditive_state();
    ensure!(is_subadditive(&s).map_err(|e| e.to_string())?.holds(), "not subadditive");
    let [a, b, c, d] = catalog::mo15_generators();
    let v = |m: SubsetMask| s.value(m).expect("member").clone();
    let first = v(a) + v(b) - v(a.sym_diff(b));
    let second = v(c) + v(d) - v(c.sym_diff(d));
    ensure!(first == q(1, 12), "first identity gives {first}");
    ensure!(second == q(2, 5), "second identity gives {second}");
    no_signed_extension(&s)
}

fn even_state_iff_subadditive() -> Outcome {
    for n in SIZES {
        for s in seeded_states(n) {
            let feasible = solve_state_extension(&s).map_err(|e| e.to_string())?.is_feasible();
            let subadditive = is_subadditive(&s).map_err(|e| e.to_string())?.holds();
            ensure!(feasible == subadditive, "n={n}: feasible={feasible}, subadditive={subadditive}");
        }
    }
    Ok(())
}

fn criterion_consistency() -> Outcome {
    let mut states: Vec<StateTable> = SIZES.iter().flat_map(|&n| seeded_states(n).take(50)).collect();
    states.extend([
        catalog::forced_negative_state(2),
        catalog::mo15_two_valued_state(),
        catalog::mo15_subadditive_state(),
    ]);
    for s in &states {
        let v = check_subadditivity_criterion(s).map_err(|e| e.to_string())?;
        ensure!(v.consistent_with_theorem, "inconsistent verdict {v:?}");
        ensure!(v.identity_holds != Some(false), "intersection identity fails");
    }
    Ok(())
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { id: "mo4-closure", description: "four generators close to ten sets", run: mo4_closure },
        Check { id: "mo4-no-signed-extension", description: "two-valued state has no signed extension", run: mo4_no_signed_extension },
        Check { id: "even-pair-recovery", description: "closed-form masses recover pair values and sum to 1", run: even_pair_recovery },
        Check { id: "even-choice-independence", description: "closed-form mass does not depend on (u, v)", run: even_choice_independence },
        Check { id: "even-solver-agreement", description: "closed form equals the unique solver witness", run: even_solver_agreement },
        Check { id: "even-forced-negative-mass", description: "pair state forces mass -1/(2(k-1)) on one point", run: forced_negative_mass },
        Check { id: "mo15-closure", description: "difference closure has 15 + 15 proper members", run: mo15_closure },
        Check { id: "mo15-no-signed-extension", description: "two-valued state has no signed extension", run: mo15_two_valued },
        Check { id: "mo15-subadditive", description: "subadditive state without signed extension", run: mo15_subadditive },
        Check { id: "even-state-iff-subadditive", description: "state extension exists iff subadditive", run: even_state_iff_subadditive },
        Check { id: "subadditivity-criterion", description: "subadditive iff extension is a state", run: criterion_consistency },
    ]
}

/// Runs every check on its own thread; results keep the check order.
pub fn run_suite() -> Vec<CheckResult> {
    let checks = checks();
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| scope.spawn(move || (c.run)()))
            .collect();
        checks
            .iter()
            .zip(handles)
            .map(|(c, h)| CheckResult {
                id: c.id,
                description: c.description,
                outcome: h.join().unwrap_or_else(|_| Err("panicked".into())),
            })
            .collect()
    })
}

use std::path::Path;
use std::process::Command;

use qlogic::cli::run;
use qlogic::outcome::parse_extension_line;
use qlogic::{qlf, qsf};
use qlogic_core::catalog;
use qlogic_core::StateTable;
use tempfile::TempDir;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["qlogic"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_state(dir: &Path, stem: &str, state: &StateTable) -> String {
    let logic = format!("{stem}.qlf");
    std::fs::write(dir.join(&logic), qlf::write_qlf(state.family(), None)).unwrap();
    let path = dir.join(format!("{stem}.qsf"));
    std::fs::write(&path, qsf::write_qsf(state, &logic)).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn mo4_state_has_no_signed_extension() {
    let dir = TempDir::new().unwrap();
    let state = catalog::mo4_two_valued_state();
    let path = write_state(dir.path(), "mo4", &state);
    let (code, out, _) = call(&["extend", "--state", &path, "--kind", "signed", "--format", "machine"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("INFEASIBLE cert="), "{out}");
    let parsed = parse_extension_line(out.trim(), state.family().len()).unwrap();
    assert!(!parsed.is_feasible());

    let (code, out, _) = call(&["extend", "--state", &path]);
    assert_eq!(code, 1);
    assert!(out.contains("instead of 0"), "{out}");
}

#[test]
fn even_logic_has_eight_members_on_four_points() {
    let (code, out, _) = call(&["even-logic", "-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("set ")).count(), 8);
    let file = qlf::parse_qlf(&out).unwrap();
    assert!(file.family().is_even_logic());
}

#[test]
fn mo15_state_is_subadditive() {
    let dir = TempDir::new().unwrap();
    let state = catalog::mo15_subadditive_state();
    let path = write_state(dir.path(), "mo15", &state);
    let (code, out, _) = call(&["subadditive", "--state", &path]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.trim(), "SUBADDITIVE true");
    let (code, out, _) = call(&["extend", "--state", &path, "--format", "machine"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("INFEASIBLE"));
}

#[test]
fn dirac_state_extends_and_classifies() {
    let dir = TempDir::new().unwrap();
    let state = catalog::dirac_even_state(6, 2);
    let path = write_state(dir.path(), "dirac", &state);
    let (code, out, _) = call(&["extend", "--state", &path, "--kind", "state", "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "FEASIBLE unique=1 masses=0,0,1,0,0,0");
    let (code, out, _) = call(&["classify", "--state", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("dirac=2"), "{out}");
}

#[test]
fn closure_and_check_logic() {
    let dir = TempDir::new().unwrap();
    let gens = dir.path().join("gens.qlf");
    std::fs::write(&gens, "universe 6\nset A 0 1 2\nset B 1 2 3\nset C 2 3 4\nset D 0 2 4\n").unwrap();
    let (code, out, _) = call(&["check-logic", gens.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("LOGIC valid=0"), "{out}");

    let closed = dir.path().join("closed.qlf");
    let (code, _, _) = call(&[
        "closure",
        "--mode",
        "concrete",
        "--generators",
        gens.to_str().unwrap(),
        "--out",
        closed.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&closed).unwrap();
    let file = qlf::parse_qlf(&text).unwrap();
    assert_eq!(file.sets.len(), 10);
    assert!(file.member_names().contains(&"A".to_string()));
    let (code, out, _) = call(&["check-logic", closed.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("LOGIC valid=1"), "{out}");
}

#[test]
fn invalid_and_partial_states() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("e4.qlf"), call(&["even-logic", "-n", "4"]).1).unwrap();
    let bad = dir.path().join("bad.qsf");
    std::fs::write(&bad, "state over e4.qlf\nvalue {} 0\nvalue {0,1} 1/2\nvalue {2,3} 1/3\nvalue {0,1,2,3} 1\n").unwrap();
    let (code, out, _) = call(&["check-state", "--state", bad.to_str().unwrap(), "--fill", "1/2"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("STATE invalid"), "{out}");

    let partial = dir.path().join("partial.qsf");
    std::fs::write(&partial, "state over e4.qlf\nvalue {0,1} 1/4\nvalue {0,2} 1/2\nvalue {0,3} 1/2\n").unwrap();
    let (code, _, err) = call(&["check-state", "--state", partial.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    let (code, out, _) = call(&["check-state", "--state", partial.to_str().unwrap(), "--fill", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "STATE valid");
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(call(&["extend"]).0, 2);
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["check-logic", "/nonexistent/file.qlf"]).0, 2);
    assert_eq!(call(&["even-logic", "-n", "99"]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("paper-suite"));
}

#[test]
fn sampling_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let logic = dir.path().join("even6.qlf");
    let state = dir.path().join("s.qsf");
    let args = |out: &str| {
        vec![
            "sample".to_string(),
            "-n".into(),
            "6".into(),
            "--seed".into(),
            "7".into(),
            "--mode".into(),
            "one-negative".into(),
            "--logic-out".into(),
            logic.to_string_lossy().into_owned(),
            "--out".into(),
            out.to_string(),
        ]
    };
    let s = state.to_string_lossy().into_owned();
    let refs: Vec<String> = args(&s);
    let refs: Vec<&str> = refs.iter().map(String::as_str).collect();
    assert_eq!(call(&refs).0, 0);
    let first = std::fs::read_to_string(&state).unwrap();
    assert!(first.starts_with("state over even6.qlf"));
    assert_eq!(call(&refs).0, 0);
    assert_eq!(first, std::fs::read_to_string(&state).unwrap());
    let (code, out, _) = call(&["extend", "--state", &s, "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("FEASIBLE unique=1"));
}

#[test]
fn binary_runs_the_suite() {
    let output = Command::new(env!("CARGO_BIN_EXE_qlogic"))
        .arg("paper-suite")
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

//! Command-line driver. Exit codes: 0 for a positive answer, 1 for a
//! definite negative one (infeasible, invalid, not subadditive), 2 for usage
//! and I/O errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use qlogic_core::exactla::{format_rational, parse_rational};
use qlogic_core::{
    classify_state, concrete_closure, difference_closure, is_subadditive, make_even_logic,
    sample_state_even, solve_signed_extension, solve_state_extension, validate_logic, Error,
    ExtensionOutcome, Family, Rational, SampleMode, StateTable,
};

use crate::error::CliError;
use crate::outcome;
use crate::qlf::{self, LogicFile};
use crate::qsf::{self, ResolveError};
use crate::suite;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qlogic", version, about = "Finite concrete quantum logics and state extensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosureMode {
    /// Complements and disjoint unions.
    Concrete,
    /// Symmetric differences.
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtensionKind {
    Signed,
    State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Nonneg,
    OneNegative,
}

#[derive(Debug, clap::Args)]
pub struct StateArgs {
    /// Logic file; defaults to the file named in the state header, relative
    /// to the state file.
    #[arg(long)]
    pub logic: Option<PathBuf>,
    /// State file.
    #[arg(long)]
    pub state: PathBuf,
    /// Complete missing values from complements and this value.
    #[arg(long, value_parser = parse_fill)]
    pub fill: Option<Rational>,
}

fn parse_fill(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the logic of all even subsets of n points.
    EvenLogic {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Close a generator file into a logic.
    Closure {
        #[arg(long, value_enum)]
        mode: ClosureMode,
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the logic axioms on a family.
    CheckLogic { file: PathBuf },
    /// Check that a state file holds a state on its logic.
    CheckState(StateArgs),
    /// Test subadditivity on a difference-closed logic.
    Subadditive(StateArgs),
    /// Decide whether a state extends to the power set.
    Extend {
        #[command(flatten)]
        args: StateArgs,
        #[arg(long, value_enum, default_value = "signed")]
        kind: ExtensionKind,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Summarize extension and structure properties of a state.
    Classify(StateArgs),
    /// Sample a seeded state on the even logic of n points.
    Sample {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "nonneg")]
        mode: Mode,
        /// State file to write; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the even logic here and reference it from the state.
        #[arg(long)]
        logic_out: Option<PathBuf>,
    },
    /// Run the built-in reproduction suite.
    PaperSuite,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_to(path: Option<&Path>, text: &str, io: &mut Io) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => io.out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn load_logic(path: &Path) -> Result<LogicFile, CliError> {
    qlf::parse_qlf(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads the state. `Ok(Err(_))` carries a state that parses but violates
/// the state axioms, which is a negative answer rather than an error.
fn load_state(args: &StateArgs) -> Result<Result<StateTable, Error>, CliError> {
    let file = qsf::parse_qsf(&read(&args.state)?).map_err(|source| CliError::Format {
        path: args.state.clone(),
        source,
    })?;
    let logic_path = match &args.logic {
        Some(p) => p.clone(),
        None => args
            .state
            .parent()
            .unwrap_or_else(|| Path::new(""))
            .join(&file.over),
    };
    let family = load_logic(&logic_path)?.family();
    match file.resolve(&family, args.fill.as_ref()) {
        Ok(state) => Ok(Ok(state)),
        Err(ResolveError::Format(source)) => Err(CliError::Format {
            path: args.state.clone(),
            source,
        }),
        Err(ResolveError::State(e @ Error::InvalidState(_))) => Ok(Err(e)),
        Err(ResolveError::State(e)) => Err(e.into()),
    }
}

/// Prints the invalid-state line and returns exit code 1 for invalid states.
fn valid_state(loaded: Result<StateTable, Error>, io: &mut Io) -> Result<Option<StateTable>, CliError> {
    match loaded {
        Ok(s) => Ok(Some(s)),
        Err(Error::InvalidState(v)) => {
            writeln!(io.out, "{}", outcome::state_line(Some(&v))).ok();
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn execute(command: Command, io: &mut Io) -> Result<i32, CliError> {
    match command {
        Command::EvenLogic { n, out } => {
            let family = make_even_logic(n)?;
            write_to(out.as_deref(), &qlf::write_qlf(&family, None), io)?;
            Ok(EXIT_YES)
        }
        Command::Closure { mode, generators, out } => {
            let file = load_logic(&generators)?;
            let family = match mode {
                ClosureMode::Concrete => concrete_closure(file.universe, &file.masks())?,
                ClosureMode::Delta => difference_closure(file.universe, &file.masks())?,
            };
            let names = generator_names(&file, &family);
            write_to(out.as_deref(), &qlf::write_qlf(&family, Some(&names)), io)?;
            Ok(EXIT_YES)
        }
        Command::CheckLogic { file } => {
            let report = validate_logic(&load_logic(&file)?.family());
            writeln!(io.out, "{}", outcome::logic_line(&report)).ok();
            Ok(if report.is_logic() { EXIT_YES } else { EXIT_NO })
        }
        Command::CheckState(args) => match load_state(&args)? {
            Ok(_) => {
                writeln!(io.out, "{}", outcome::state_line(None)).ok();
                Ok(EXIT_YES)
            }
            Err(e) => valid_state(Err(e), io).map(|_| EXIT_NO),
        },
        Command::Subadditive(args) => {
            let Some(state) = valid_state(load_state(&args)?, io)? else {
                return Ok(EXIT_NO);
            };
            let result = is_subadditive(&state)?;
            writeln!(io.out, "{}", outcome::subadditivity_line(result)).ok();
            Ok(if result.holds() { EXIT_YES } else { EXIT_NO })
        }
        Command::Extend { args, kind, format } => {
            let Some(state) = valid_state(load_state(&args)?, io)? else {
                return Ok(EXIT_NO);
            };
            let result = match kind {
                ExtensionKind::Signed => solve_signed_extension(&state)?,
                ExtensionKind::State => solve_state_extension(&state)?,
            };
            match format {
                Format::Machine => writeln!(io.out, "{}", outcome::extension_line(&result)).ok(),
                Format::Human => write!(io.out, "{}", describe_extension(&state, kind, &result)).ok(),
            };
            Ok(if result.is_feasible() { EXIT_YES } else { EXIT_NO })
        }
        Command::Classify(args) => {
            let Some(state) = valid_state(load_state(&args)?, io)? else {
                return Ok(EXIT_NO);
            };
            writeln!(io.out, "{}", outcome::classification_line(&classify_state(&state)?)).ok();
            Ok(EXIT_YES)
        }
        Command::Sample { n, seed, mode, out, logic_out } => {
            let mode = match mode {
                Mode::Nonneg => SampleMode::NonNegative,
                Mode::OneNegative => SampleMode::OneNegative,
            };
            let state = sample_state_even(n, seed, mode)?;
            let over = match &logic_out {
                Some(path) => {
                    std::fs::write(path, qlf::write_qlf(state.family(), None)).map_err(|source| {
                        CliError::Io {
                            path: path.clone(),
                            source,
                        }
                    })?;
                    relative_to(path, out.as_deref())
                }
                None => format!("even-{n}.qlf"),
            };
            write_to(out.as_deref(), &qsf::write_qsf(&state, &over), io)?;
            Ok(EXIT_YES)
        }
        Command::PaperSuite => {
            let results = suite::run_suite();
            for r in &results {
                writeln!(io.out, "{}", r.line()).ok();
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                writeln!(io.err, "{failed} of {} checks failed", results.len()).ok();
                Ok(EXIT_NO)
            } else {
                Ok(EXIT_YES)
            }
        }
    }
}

/// Keeps generator names for generators that survive as members.
fn generator_names(file: &LogicFile, family: &Family) -> Vec<String> {
    let mut names = vec![String::new(); family.len()];
    for (name, mask) in &file.sets {
        if let Some(i) = family.index_of(*mask) {
            names[i] = name.clone();
        }
    }
    let taken: std::collections::HashSet<String> = names.iter().filter(|n| !n.is_empty()).cloned().collect();
    for (i, name) in names.iter_mut().enumerate() {
        if name.is_empty() {
            let mut candidate = format!("S{i}");
            while taken.contains(&candidate) {
                candidate.push('_');
            }
            *name = candidate;
        }
    }
    names
}

/// Path of `logic` as seen from the directory of `state`, when both share a
/// directory; otherwise the path as given.
fn relative_to(logic: &Path, state: Option<&Path>) -> String {
    let same_dir = state.is_some_and(|s| s.parent() == logic.parent());
    match (same_dir, logic.file_name()) {
        (true, Some(name)) => name.to_string_lossy().into_owned(),
        _ => logic.to_string_lossy().into_owned(),
    }
}

fn describe_extension(state: &StateTable, kind: ExtensionKind, result: &ExtensionOutcome) -> String {
    let what = match kind {
        ExtensionKind::Signed => "signed measure",
        ExtensionKind::State => "state",
    };
    match result {
        ExtensionOutcome::Feasible { witness, unique } => {
            let mut text = format!(
                "extends to the power set as a {what} ({})\n",
                if *unique { "unique" } else { "not unique" }
            );
            for (p, m) in witness.masses().iter().enumerate() {
                text.push_str(&format!("  m({{{p}}}) = {}\n", format_rational(m)));
            }
            text
        }
        ExtensionOutcome::Infeasible { certificate: None } => {
            format!("does not extend to the power set as a {what}\n")
        }
        ExtensionOutcome::Infeasible { certificate: Some(cert) } => {
            let mut text = format!("does not extend to the power set as a {what}\n");
            text.push_str("certificate (indicator combination vanishing on every point):\n");
            let mut pairing = Rational::from_integer(0.into());
            for ((mask, value), c) in state.iter().zip(cert) {
                if *c != Rational::from_integer(0.into()) {
                    text.push_str(&format!(
                        "  {:>4} x {mask}   s = {}\n",
                        format_rational(c),
                        format_rational(value)
                    ));
                    pairing += c * value;
                }
            }
            text.push_str(&format!(
                "  the same combination of state values is {} instead of 0\n",
                format_rational(&pairing)
            ));
            text
        }
    }
}

//! File formats, machine-readable output lines, the command-line driver and
//! the built-in reproduction suite for `qlogic-core`.

pub mod cli;
mod error;
pub mod outcome;
pub mod qlf;
pub mod qsf;
pub mod suite;

pub use error::{FormatError, CliError};

//! Library side of the `junction-spectra` CLI: sweep parsing, table
//! output, the subcommand implementations and the verification suite.

pub mod commands;
pub mod output;
pub mod sweep;
pub mod verify;

use std::io;

/// Default seed for the randomized property checks; override with --seed.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    /// Closed-form transmission only
    Closed,
    /// Transfer-matrix oracle only
    Oracle,
    /// Both, with a discrepancy column; breaching --tol exits 3
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TransmissionPreset {
    /// 200x200 surface on eta (0, 20], sigma [0, 20] plus the eta = sigma diagonal
    Fig2,
    /// log10 T against sigma (0, 12] at eta = 0.0005, 0.05, 0.5
    Fig3,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Tolerance { max_diff: f64, tol: f64 },
    VerifyFailed { failed: usize, total: usize },
    Io(io::Error),
}

impl CliError {
    /// 0 success, 1 verification failure, 2 usage error, 3 tolerance breach.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Tolerance { .. } => 3,
            CliError::VerifyFailed { .. } => 1,
            CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Tolerance { max_diff, tol } => write!(
                f,
                "closed form and oracle disagree: max |diff| = {max_diff:e} exceeds --tol {tol:e}"
            ),
            CliError::VerifyFailed { failed, total } => {
                write!(f, "{failed} of {total} verification checks failed")
            }
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<junction_core::Error> for CliError {
    fn from(e: junction_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

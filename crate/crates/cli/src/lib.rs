//! The `podium` command-line tool as a library, so tests can drive it
//! without spawning processes.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

pub mod args;
mod commands;
mod data;
pub mod plot;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
/// The command ran but its post-condition does not hold: intervals fail to
/// overlap, a validation check fails, or a fit does not converge.
pub const EXIT_CONDITION: i32 = 1;
/// Usage, I/O, parse or data errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io {
        path: PathBuf,
        source: io::Error,
    },
    Data {
        file: String,
        source: podium_core::Error,
    },
    Core(podium_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Data { file, source } => write!(f, "{file}: {source}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<podium_core::Error> for CliError {
    fn from(e: podium_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub stdout: String,
    /// TSV of the plotted values, written next to an SVG `--out` file.
    pub sidecar: Option<String>,
    /// Lines for stderr.
    pub diagnostics: Vec<String>,
    /// False maps to exit code 1.
    pub holds: bool,
}

impl Report {
    fn holds(stdout: String) -> Self {
        Self {
            stdout,
            sidecar: None,
            diagnostics: Vec::new(),
            holds: true,
        }
    }

    fn with_sidecar(mut self, sidecar: Option<String>) -> Self {
        self.sidecar = sidecar;
        self
    }
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    commands::execute(cli)
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let report = match execute(cli).and_then(|r| deliver(cli, r, stdout)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    for line in &report.diagnostics {
        let _ = writeln!(stderr, "{line}");
    }
    if report.holds {
        EXIT_OK
    } else {
        EXIT_CONDITION
    }
}

fn deliver(cli: &Cli, report: Report, stdout: &mut dyn Write) -> Result<Report, CliError> {
    match &cli.out {
        Some(path) => {
            let write = |p: &PathBuf, text: &str| {
                fs::write(p, text).map_err(|source| CliError::Io {
                    path: p.clone(),
                    source,
                })
            };
            write(path, &report.stdout)?;
            if let Some(tsv) = &report.sidecar {
                write(&path.with_extension("tsv"), tsv)?;
            }
        }
        None => stdout
            .write_all(report.stdout.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?,
    }
    Ok(report)
}

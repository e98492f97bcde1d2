//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and writes a single JSON document, CSV table or run-length
//! file to `out`; failures go to `err` as a JSON error object.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde::Serialize;
use sumset_ramsey::Error;

pub use args::Cli;

pub const NMAX_VAR: &str = "SUMSET_RAMSEY_NMAX";
pub const DEFAULT_NMAX: u64 = 10_000_000;

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A failed run: exit code plus the error object written to `err`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip)]
    pub code: i32,
    pub error: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl Failure {
    fn new(code: i32, e: Error) -> Self {
        let position = match &e {
            Error::Parse { pos, .. } => Some(*pos),
            _ => None,
        };
        Failure {
            code,
            error: e.kind().to_string(),
            message: e.to_string(),
            position,
        }
    }

    /// Flags that do not describe a valid request.
    pub fn usage(e: Error) -> Self {
        Failure::new(EXIT_USAGE, e)
    }

    /// A well-formed request the operation rejected.
    pub fn domain(e: Error) -> Self {
        Failure::new(EXIT_DOMAIN, e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::domain(e)
    }
}

/// Window cap from the environment.
pub fn n_max() -> Result<u64, Failure> {
    match std::env::var(NMAX_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                Failure::usage(Error::BadParams(format!(
                    "{NMAX_VAR} must be a positive integer (got '{v}')"
                )))
            }),
        Err(_) => Ok(DEFAULT_NMAX),
    }
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (text, failure) = match commands::execute(&cli) {
        Ok(outcome) => (Some(outcome.text), outcome.failure),
        Err(f) => (None, Some(f)),
    };
    if let Some(text) = text {
        if out.write_all(text.as_bytes()).is_err() {
            return EXIT_DOMAIN;
        }
    }
    match failure {
        Some(f) => {
            let _ = writeln!(err, "{}", serde_json::to_string(&f).unwrap());
            f.code
        }
        None => 0,
    }
}

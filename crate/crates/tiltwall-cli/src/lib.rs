//! Front end for the `tiltwall` library: catalog queries, Euler pairings,
//! charge evaluation, wall and destabilizer searches, wall-locus plots, and a
//! `verify` command that replays the embedded regression fixtures.

pub mod args;
pub mod classes;
pub mod commands;
pub mod plot;
pub mod verify;

use std::fmt;

use thiserror::Error;
use tiltwall::SearchError;

/// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 unbounded
/// search.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Search(SearchError),
    #[error("verification failed: {failed} of {total} checks")]
    Verification { failed: usize, total: usize },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Search(SearchError::Unbounded { .. }) => 3,
            CliError::Search(_) => 1,
            CliError::Verification { .. } => 2,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::Search(e)
    }
}

/// Shorthand for mapping domain errors onto usage errors.
pub(crate) fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parse arguments, dispatch, and return the process exit code. Output goes
/// to the supplied sinks so tests can run the CLI in-process.
pub fn run_with(
    argv: &[String],
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32 {
    use clap::Parser;

    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                1
            } else {
                // --help / --version land on stdout and succeed.
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };

    if let Some(n) = cli.threads {
        // Ignore the error when a pool already exists (repeated in-process
        // runs); the merge order of every search is deterministic anyway.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }

    match commands::dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

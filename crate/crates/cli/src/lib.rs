//! The `aeu` command line: JSON file formats, report rendering and the
//! subcommands, exposed as [`run`] so tests can drive it in-process.
#![forbid(unsafe_code)]

pub mod args;
mod commands;
pub mod error;
pub mod files;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

use crate::args::Cli;
use crate::error::{CliError, EXIT_INPUT, EXIT_OK};

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// `AEU_THREADS` caps worker threads. Checkers currently run on one worker,
/// so the value is only validated.
fn threads() -> Result<(), CliError> {
    match std::env::var("AEU_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(()),
            _ => Err(CliError::Threads(v)),
        },
        Err(_) => Ok(()),
    }
}

/// Parse `argv` (program name first) and run the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = threads().and_then(|()| commands::execute(&cli.command, cli.format));
    match result {
        Ok(out) => Outcome {
            code: out.code,
            stdout: out.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

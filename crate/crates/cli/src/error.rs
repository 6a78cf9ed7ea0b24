use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Everything that stops a command before it can report a result. All of
/// these exit with [`EXIT_INPUT`].
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: cannot read: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}: field `{field}`: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        field: String,
        message: String,
    },
    #[error("semiring mismatch: {} uses `{left}` but {} uses `{right}`", left_path.display(), right_path.display())]
    SemiringMismatch {
        left_path: PathBuf,
        left: String,
        right_path: PathBuf,
        right: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("AEU_THREADS must be a positive integer, got `{0}`")]
    Threads(String),
    #[error(transparent)]
    Core(#[from] aeu_core::Error),
}

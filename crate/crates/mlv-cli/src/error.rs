//! CLI errors and their exit codes.

use std::path::PathBuf;

use thiserror::Error;

/// Everything that stops a subcommand before it produces its output.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input that the argument grammar cannot catch (word strings,
    /// suite names, non-admissible words).
    #[error("{0}")]
    Usage(String),
    /// An engine error on user input.
    #[error(transparent)]
    Core(#[from] mlv_core::Error),
    /// A cell exceeds the configured resource caps.
    #[error(
        "r={r} weight {weight} {family}: {columns} basis columns and about {rows} generated rows exceed the caps \
         ({max_columns} columns, {max_rows} rows); pass --force to compute anyway"
    )]
    ResourceCap {
        /// Modulus.
        r: u32,
        /// Weight.
        weight: usize,
        /// Family name.
        family: &'static str,
        /// Basis columns.
        columns: usize,
        /// Generated rows.
        rows: usize,
        /// Column cap.
        max_columns: usize,
        /// Row cap.
        max_rows: usize,
    },
    /// Writing the output failed.
    #[error("cannot write {}: {source}", path.as_ref().map_or("standard output".into(), |p| p.display().to_string()))]
    Io {
        /// Destination (`None` for standard output).
        path: Option<PathBuf>,
        /// Cause.
        source: std::io::Error,
    },
    /// Serialising the output failed.
    #[error("cannot encode output: {0}")]
    Encode(String),
}

impl CliError {
    /// Process exit code: 2 for usage errors, 3 for resource caps.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::ResourceCap { .. } => 3,
            CliError::Usage(_) | CliError::Core(_) | CliError::Io { .. } | CliError::Encode(_) => 2,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Encode(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Encode(e.to_string())
    }
}

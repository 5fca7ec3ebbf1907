//! Driver layer over `gorenstein-core`: run configuration, form files, seeded
//! surveys of random Perazzo threefolds, and the `reproduce` check suite shared
//! by the command line and the acceptance test target.

pub mod config;
pub mod formfile;
pub mod json;
pub mod reproduce;
pub mod survey;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{path}:{line}:{column}: {source}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        source: gorenstein_core::Error,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gorenstein_core::Error),
}

impl LabError {
    /// Exit status: 3 for broken internal invariants, 2 for everything caused by the input.
    pub fn exit_code(&self) -> u8 {
        match self {
            LabError::Core(gorenstein_core::Error::Invariant(_)) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;

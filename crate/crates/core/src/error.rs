//! Crate error type.

use std::path::PathBuf;
use thiserror::Error;

/// Errors produced by the solver, diagnostics, and persistence layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("time step {dt} exceeds CFL limit {limit} (max speed {max_speed})")]
    CflViolation { dt: f64, limit: f64, max_speed: f64 },

    #[error("non-finite value encountered at step {step} (t = {time}); state left at last good snapshot")]
    NonFinite { step: u64, time: f64 },

    #[error("corrupt or missing snapshot {path}: {reason}")]
    CorruptSnapshot { path: PathBuf, reason: String },

    #[error("corrupt trajectory in {dir}: {reason}")]
    CorruptTrajectory { dir: PathBuf, reason: String },

    #[error("invalid cube cutoff: {0}")]
    InvalidCutoff(String),

    #[error("spectrum bins do not match: {0}")]
    BinMismatch(String),

    #[error("window [{lo}, {hi}] covers no spectrum bins")]
    EmptyWindow { lo: f64, hi: f64 },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Serialization(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

//! Error taxonomy shared by the whole crate.
//!
//! Structural failures (a measure table that is not monotone, a group law
//! that fails its axioms) are kept distinct from plain input errors and
//! from numerical non-convergence so callers can map them to exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed caller input: dimension mismatch, bad parameter range, …
    #[error("input error: {0}")]
    Input(String),

    /// A registry lookup failed.
    #[error("unknown {kind} id `{id}` (known: {known})")]
    UnknownId {
        kind: &'static str,
        id: String,
        known: String,
    },

    /// Evaluation requested at a point where the quantity is undefined
    /// (e.g. the horizontal gradient of a gauge at the origin).
    #[error("undefined at point {0}")]
    UndefinedPoint(String),

    /// An iterative scheme failed to converge; the message carries diagnostics.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A required structural property does not hold on the data
    /// (non-monotone volume table, field not compactly supported, …).
    #[error("structure violation: {0}")]
    Structure(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}

use thiserror::Error;

/// Errors surfaced by the engine.
///
/// The three classes map onto the CLI exit codes: bad input, a size guard
/// that refused to run, and an internal disagreement between two routes
/// that are supposed to agree.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    pub(crate) fn guard(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Guard {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }

    pub(crate) fn check_guard(
        what: &'static str,
        actual: usize,
        limit: usize,
    ) -> Result<(), Error> {
        if actual > limit {
            Err(Error::guard(what, actual as u128, limit as u128))
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

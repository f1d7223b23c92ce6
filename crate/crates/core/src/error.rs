use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A computation would exceed a configured budget.
    #[error("{what} needs {needed}, budget is {limit}")]
    Resource {
        what: &'static str,
        needed: String,
        limit: u64,
    },

    /// Arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A path step does not exist in the graph. `step` is 1-based.
    #[error("invalid step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },

    /// An encoding symbol has no matching edge. `position` is 1-based.
    #[error("cannot decode symbol {position} ({symbol}): {reason}")]
    Decode {
        position: usize,
        symbol: String,
        reason: String,
    },

    /// The path is maximal among paths to its terminal vertex.
    #[error("path is maximal, it has no successor")]
    MaximalPath,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The function has a pole at the requested point.
    #[error("pole at {0}")]
    Pole(String),

    /// Arguments fall outside the domain of the requested method.
    #[error("domain error: {0}")]
    Domain(String),

    /// The method ran out of budget before meeting its tolerance.
    #[error("no convergence: {0}")]
    Convergence(String),

    /// An index exceeded a table limit.
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    Range {
        what: &'static str,
        value: usize,
        max: usize,
    },

    /// An input had a NaN or infinite component.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// Stable short name for the error class, used by reports and the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::Domain(_) => "domain",
            Error::Convergence(_) => "convergence",
            Error::Range { .. } => "range",
            Error::NonFinite(_) => "non_finite",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

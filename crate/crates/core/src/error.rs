use thiserror::Error;

/// Errors raised by the numerical routines and the identity catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the routine is defined.
    #[error("{op}: argument out of domain ({detail})")]
    Domain { op: &'static str, detail: String },

    /// The integrand returned NaN or an infinity at an interior node.
    #[error("integrand is not finite at x = {abscissa:e} (value {value})")]
    NonFinite { abscissa: f64, value: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown identity id `{0}`")]
    UnknownId(String),

    /// A series failed to reach its tail bound within the term budget.
    #[error("{op}: series did not converge within {terms} terms")]
    NoConvergence { op: &'static str, terms: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}

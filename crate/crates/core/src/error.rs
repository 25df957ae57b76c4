use thiserror::Error;

/// Errors raised by the numerical kernels and the command-line front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series did not reach the requested tolerance within its term budget.
    #[error("series for I_{order}({x}) did not converge within {max_terms} terms")]
    NonConvergence {
        order: u32,
        x: f64,
        max_terms: usize,
    },

    /// An intermediate quantity left the range of `f64`.
    #[error("overflow: {0}")]
    Overflow(String),

    /// The requested evaluation point is too close to a removable singularity.
    #[error("range error: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

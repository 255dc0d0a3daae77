use thiserror::Error;

/// Error type shared by every solver and formula in this crate.
///
/// `NoBoundState` is an expected outcome, not a failure: screened potentials
/// support only finitely many levels, and table builders render it as `*`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AfmError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no bound state for the requested parameters")]
    NoBoundState,
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("unsupported power lambda = {0}: no branch prescription for lambda > -1")]
    UnsupportedLambda(f64),
    #[error("empty sum: no level pair qualifies")]
    EmptySum,
    #[error("singular fit: {0}")]
    SingularFit(String),
}

impl AfmError {
    pub fn domain(msg: impl Into<String>) -> Self {
        AfmError::Domain(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        AfmError::Numerical(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        AfmError::Convergence(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, AfmError>;

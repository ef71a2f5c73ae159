use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in simulation or estimation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// Input that is admissible in principle but has probability zero under the model
    /// (a jump sitting exactly on the support boundary).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("{what} did not converge within {iterations} iterations")]
    Convergence { what: &'static str, iterations: usize },

    #[error("sample moments cannot be matched by any parameter pair (residual floor {residual:.3e})")]
    InfeasibleMoments { residual: f64 },

    #[error("root not bracketed on [{lo}, {hi}] (target {target}, p = {p})")]
    Bracket { lo: f64, hi: f64, target: f64, p: f64 },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{failed} of {total} replications failed (first error: {first})")]
    TooManyFailures {
        failed: usize,
        total: usize,
        first: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for input-validation failures, as opposed to numerical or statistical ones.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Degenerate(_) | Error::EmptyInput(_) | Error::Config(_)
        )
    }
}

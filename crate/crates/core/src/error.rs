use thiserror::Error;

/// Errors produced by the numerical routines and the spectrum assembly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("pole: argument {arg} is at or within {threshold:e} of a non-positive integer")]
    Pole { arg: f64, threshold: f64 },

    #[error("series did not converge within {terms} terms (partial sum {partial_sum})")]
    Truncation { partial_sum: f64, terms: usize },

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("regime: lambda = {lambda} < {min}; the logarithmic approximation does not apply")]
    Regime { lambda: f64, min: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("no sign change of the matching function in {0}")]
    Bracket(String),

    #[error("node-count mismatch: expected {expected}, found {found}")]
    Ordering { expected: usize, found: usize },

    #[error("degenerate sampling near z = {z}: crossing could not be confirmed")]
    DegenerateSampling { z: f64 },

    #[error("label (n_rho={n_rho}, m={m}): {source}")]
    Label {
        n_rho: u32,
        m: i32,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// The innermost error, looking through label context.
    pub fn root(&self) -> &Error {
        match self {
            Error::Label { source, .. } => source.root(),
            e => e,
        }
    }

    pub fn is_regime(&self) -> bool {
        matches!(self.root(), Error::Regime { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
///
/// Indices reported in variants follow the mathematical numbering used by the
/// operation that failed (for chain sequences, `index = n` refers to the term
/// `d_{n+1}` and the parameter `g_{n+1}`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("d is not a positive chain sequence at n={index}")]
    NotChainSequence { index: usize },

    #[error("scaling invalid at n={index}: {reason}")]
    InvalidScaling { index: usize, reason: ScalingFailure },

    #[error("Verblunsky coefficient alpha_{index} is not inside the open unit disk")]
    OutsideDisk { index: usize },

    #[error("{what} not converged to tol={tol:e} within a horizon of {horizon} terms")]
    NonConvergence {
        what: &'static str,
        tol: f64,
        horizon: usize,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("need {needed} coefficients, only {available} available")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("chain sequence is single-parameter; no mass-variant family for t={t}")]
    SingleParameter { t: f64 },

    #[error("no default scaling sequence for {0}; supply q explicitly")]
    NoDefaultScaling(String),

    #[error("degenerate denominator at n={index}")]
    Degenerate { index: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

/// Why a candidate scaling sequence was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingFailure {
    /// `q_{n+1}` outside `(0, 1]`.
    OutOfRange,
    /// `d_{n+1}/q_{n+1}` stops being a positive chain sequence.
    NotChain,
}

impl std::fmt::Display for ScalingFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalingFailure::OutOfRange => f.write_str("q outside (0, 1]"),
            ScalingFailure::NotChain => f.write_str("d/q is not a positive chain sequence"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

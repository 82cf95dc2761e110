use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Malformed text input; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An iterative solver ran out of iterations. `drift` is the change of
    /// the eigenvalue estimate over the final iteration, so callers can tell
    /// slow monotone convergence from oscillation between clustered
    /// eigenvalues.
    #[error(
        "no convergence after {iterations} iterations: residual {residual:.3e}, \
         eigenvalue drift {drift:.3e} (raise max_iter or loosen tol)"
    )]
    Convergence {
        iterations: usize,
        residual: f64,
        drift: f64,
    },

    /// A generator produced an object violating its own invariants
    /// (e.g. a Cayley graph with a self-loop). Never silently repaired.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

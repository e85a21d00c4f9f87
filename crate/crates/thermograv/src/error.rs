use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (negative length, `y ≤ 0`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument exceeded a supported range (overflow guard).
    #[error("range error: {0}")]
    Range(String),

    /// An iterative evaluation exhausted its budget. Carries the best
    /// estimate reached and the error bound that was still outstanding.
    #[error("failed to converge: {context} (best estimate {best:e}, residual bound {bound:e})")]
    Convergence {
        context: String,
        best: f64,
        bound: f64,
    },

    /// The range solver found no threshold crossing.
    #[error("no crossing found: {0}")]
    NoCrossing(String),

    /// A constants override file could not be parsed or failed validation.
    #[error("invalid constants config: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

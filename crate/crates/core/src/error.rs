use thiserror::Error;

/// Every failure mode of the evaluator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum F2Error {
    #[error("pole of the gamma function at {0}")]
    Pole(String),
    #[error("logarithmic case: {0}")]
    LogarithmicCase(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("term vanishes at (m, n) = ({0}, {1})")]
    ZeroTerm(usize, usize),
    #[error("unknown representation id {0}")]
    UnknownId(String),
    #[error("point ({x}, {y}) lies on the singular curve {curve}")]
    SingularCurve { x: f64, y: f64, curve: String },
    #[error("no representation converges at ({0}, {1})")]
    NoValidSeries(f64, f64),
    #[error("series did not converge: rate {rate:.4}, error estimate {error_estimate:.3e} for |value| {magnitude:.3e}")]
    NonConvergence {
        rate: f64,
        error_estimate: f64,
        magnitude: f64,
    },
    #[error("point ({0}, {1}) is outside the region of convergence of {2}")]
    OutOfRoc(f64, f64, String),
    #[error("finite-difference stencil leaves a single region of convergence: {0}")]
    StencilDomain(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, F2Error>;

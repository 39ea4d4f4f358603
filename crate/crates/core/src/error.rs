use thiserror::Error;

/// Errors shared across the numerics layers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MathError {
    #[error("non-finite input")]
    NonFiniteInput,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integrand undefined (returned NaN)")]
    IntegrandUndefined,
    #[error("quadrature did not converge (best estimate {value}, err {err_estimate})")]
    QuadratureNonConvergence { value: f64, err_estimate: f64 },
}

pub type Result<T> = std::result::Result<T, MathError>;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FresnelError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite input: {0}")]
    NonFinite(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// The requested point is too close to one of the simple poles of the
    /// truncated approximation, at `±e^{-iπ/4}(k - 1/2)h` for `k > N`.
    #[error("z = {z} lies {distance:e} from the pole at {pole}")]
    NearPole {
        z: Complex64,
        pole: Complex64,
        distance: f64,
    },

    #[error("bound is singular at x = {0}")]
    Singular(f64),

    #[error("quadrature did not reach tolerance: estimate {estimate}, error estimate {error:e}")]
    NoConvergence { estimate: Complex64, error: f64 },

    #[error("Weideman model of degree {m} failed its self-check (relative error {error:e})")]
    SelfCheck { m: usize, error: f64 },
}

pub type Result<T> = std::result::Result<T, FresnelError>;

pub(crate) fn require_finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(FresnelError::NonFinite(x))
    }
}

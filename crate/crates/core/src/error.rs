use thiserror::Error;

/// Errors raised when constructing or operating on the crate's domain objects.
///
/// Numeric payloads are widened to `f64` so the type does not depend on the
/// scalar precision.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    #[error("direction norm {norm} is not within {tolerance} of 1")]
    InvalidDirection { norm: f64, tolerance: f64 },

    #[error("sharpness {0} outside [0, 1]")]
    InvalidSharpness(f64),

    #[error("Bloch vector norm {0} exceeds 1")]
    InvalidState(f64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("invalid POVM: {0}")]
    InvalidPovm(String),

    #[error("matrix is not a proper rotation (orthogonality residual {residual:e}, det {det})")]
    NotRotation { residual: f64, det: f64 },

    #[error("matrix is not unitary (residual {0:e})")]
    NotUnitary(f64),

    #[error("Bloch matrix is not completely positive: signed singular values {lambda:?} give p = {p:?}")]
    NotCompletelyPositive { lambda: [f64; 3], p: [f64; 4] },

    #[error("largest Pauli probability {p_max} is below 1/2; the fidelity-sharpness bound assumes p_m >= 1/2")]
    BelowHalf { p_max: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

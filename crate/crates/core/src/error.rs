use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("index {index} out of range (n_max = {n_max})")]
    IndexOutOfRange { index: usize, n_max: usize },

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("Legendre tail test failed at dimension {dimension}; at least {required} coefficients are required")]
    TailTestFailed { dimension: usize, required: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("eigenvalue tail not negligible: lambda[{n_max}] = {lambda:e}, extend n_max")]
    TailNotNegligible { n_max: usize, lambda: f64 },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}

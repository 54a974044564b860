//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// A parameter violates a domain-type invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature failed to converge under refinement.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonconvergence(String),

    /// A radial norm was requested past the integrability frontier.
    #[error("integrability failure: {what} requires r < {critical}, got r = {requested}")]
    Integrability {
        what: &'static str,
        critical: f64,
        requested: f64,
    },

    /// A module precondition does not hold for the supplied parameters.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Configuration validation failures, one message per violation.
    #[error("configuration invalid:\n{}", .0.join("\n"))]
    Validation(Vec<String>),

    /// The integration ball would leave the trusted part of the box.
    #[error("ball of radius {ball_radius} exceeds 0.9 L = {limit}")]
    BallExceedsBox { ball_radius: f64, limit: f64 },

    /// Continuation was requested on a state that cannot be continued.
    #[error("cannot continue run: {0}")]
    CannotContinue(String),

    /// A functional needs field snapshots the run did not record.
    #[error("insufficient snapshots: {0}")]
    InsufficientSnapshots(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CoreError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CoreError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;

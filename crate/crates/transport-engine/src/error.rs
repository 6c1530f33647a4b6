use thiserror::Error;

/// Failures of the transport and local-model computations.
#[derive(Debug, Error)]
pub enum TransportError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The fiber-constraint system lost rank where full rank was required.
    #[error("constraint system is rank deficient: {0}")]
    RankDeficient(String),

    /// An integration step could not be completed (projection failure,
    /// non-finite state, or residual above the acceptance bound).
    #[error("transport step failed at s = {s:.6}: {reason}")]
    StepFailure { s: f64, reason: String },
}

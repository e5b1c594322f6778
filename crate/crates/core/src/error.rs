use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid orbit: {0}")]
    InvalidOrbit(String),

    #[error("invalid cover degree: {0}")]
    InvalidCoverDegree(String),

    #[error("invalid pivot: {0}")]
    InvalidPivot(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("unsupported hypotheses: {0}")]
    UnsupportedHypotheses(String),

    /// The induction strategy ran out of count-preserving moves before the
    /// target conditions were reached. Carries the pivots applied so far.
    #[error("strategy stuck: {message}")]
    StrategyStuck {
        message: String,
        partial_pivots: Vec<u64>,
    },

    /// Internal consistency failure (a bug, not a user error).
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The numeric eigensolver failed to converge.
    #[error("numeric failure: {reason} (after {iterations} sweeps, off-diagonal mass {off_mass:.3e})")]
    NumericFailure {
        reason: String,
        iterations: usize,
        off_mass: f64,
    },

    /// An exact self-check failed; this indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// Phase targets violate an exact eigenvalue relation.
    #[error("infeasible target: relation {relation:?} has phase mismatch {mismatch:.6e} rad")]
    InfeasibleTarget { relation: Vec<i64>, mismatch: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

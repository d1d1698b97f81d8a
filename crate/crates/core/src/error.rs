//! Error type shared across the crate.
//!
//! Numeric payloads are carried as `f64` regardless of the working scalar so
//! the error type stays non-generic and cheap to thread through `Result`s.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Normalization was asked of a quaternion with norm at or below `1e-12`.
    #[error("cannot normalize quaternion with near-zero norm {norm:.3e}")]
    NearZeroQuaternion {
        /// Norm of the offending quaternion.
        norm: f64,
    },

    /// A unit-quaternion constructor received input too far from unit norm.
    #[error("quaternion norm {norm} deviates from 1 by more than {tolerance:.1e}")]
    NonUnitQuaternion {
        /// Norm of the offending quaternion.
        norm: f64,
        /// Maximum accepted deviation from unit norm.
        tolerance: f64,
    },

    /// Endpoints are antipodal (or numerically indistinguishable from it), so
    /// the connecting path is not unique.
    #[error("endpoints are antipodal (dot = {dot}); interpolation path is not unique")]
    AntipodalInput {
        /// Inner product of the two endpoints.
        dot: f64,
    },

    /// The flow did not come within the convergence threshold of the target
    /// by the configured time horizon.
    #[error("flow did not converge within t_max = {t_max}")]
    NonConvergence {
        /// Time horizon that was exhausted.
        t_max: f64,
    },

    /// A scalar argument fell outside its documented domain.
    #[error("argument {value} outside domain {domain}")]
    DomainError {
        /// Offending value.
        value: f64,
        /// Human-readable description of the accepted domain.
        domain: &'static str,
    },

    /// Endpoints coincide (or nearly so), leaving the reference arc without a
    /// usable direction.
    #[error("endpoints coincide; reference arc is degenerate")]
    DegenerateArc,

    /// A requested time does not lie on a curve's sample grid.
    #[error("time {t} is not on the sample grid (step = {step})")]
    TimeNotSampled {
        /// Requested time.
        t: f64,
        /// Grid spacing of the curve.
        step: f64,
    },

    /// Configuration parameters violate a documented invariant.
    #[error("invalid configuration: {reason}")]
    InvalidConfig {
        /// Which invariant was violated.
        reason: &'static str,
    },
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

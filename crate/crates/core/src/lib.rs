//! Rotation interpolation on the unit-quaternion sphere.
//!
//! The centerpiece is a first-order flow that drives a unit quaternion `q`
//! toward a target `r` along the great circle joining them:
//!
//! `q′ = −½ (q r̄ q − r)`, equivalently `q′ = r − (q·r) q` on the sphere.
//!
//! Integrating from a start rotation `p` yields an interpolating curve that
//! traces exactly the SLERP arc between `p` and `r` but traverses it with an
//! exponential approach law instead of SLERP's constant speed: it starts
//! fast and eases out into the target. The crate provides
//!
//! * the flow integrator ([`kli_interpolate`]) with its closed-form
//!   reference solution ([`closed_form_solution`]),
//! * classical SLERP ([`slerp_eval`], [`slerp_sample`]) evaluated through two
//!   independent formulas that are tested against each other,
//! * the Hopf projection of curves onto the ordinary 2-sphere
//!   ([`hopf_project`]) for direct visualization,
//! * analysis tools quantifying path coincidence and traversal speed
//!   ([`path_deviation`], [`progress_map`]), and frame generation for
//!   animating a rigid object along a trajectory ([`generate_frames`]).
//!
//! Everything is generic over the scalar (`f32` or `f64`) through the
//! [`Real`] trait; the `…32`/`…64` aliases below pin the common choices.
//!
//! # Example
//!
//! ```
//! use kli::{kli_interpolate, KliConfig, UnitQuaternion};
//!
//! // Interpolate from the rotation k to ½(1 + i + j + k).
//! let p = UnitQuaternion::<f64>::from_components(0.0, 0.0, 0.0, 1.0)?;
//! let r = UnitQuaternion::from_components(0.5, 0.5, 0.5, 0.5)?;
//! let curve = kli_interpolate(p, r, &KliConfig::default())?;
//!
//! // With the default tolerance the flow settles in 1166 steps of 0.01.
//! assert_eq!(curve.len(), 1167);
//! assert!((curve.converged_time() - 11.66).abs() < 1e-12);
//! # Ok::<(), kli::Error>(())
//! ```

pub mod analysis;
pub mod curve;
pub mod error;
pub mod flow;
pub mod hopf;
pub mod quaternion;
pub mod real;
pub mod slerp;

pub use analysis::{
    generate_frames, geodesic_distance, path_deviation, progress_map, unit_cube_corners,
    PathComparison,
};
pub use curve::InterpolationCurve;
pub use error::{Error, Result};
pub use flow::{closed_form_solution, kli_interpolate, rhs, rhs_product_form, rk4_step, KliConfig};
pub use hopf::{hopf_project, hopf_project_curve};
pub use quaternion::{AxisAngle, Quaternion, UnitQuaternion, Vector3};
pub use real::Real;
pub use slerp::{slerp_eval, slerp_eval_sine_weighted, slerp_sample};

// ───────────────── concrete-scalar aliases ─────────────────

/// Single-precision quaternion.
pub type Quaternion32 = Quaternion<f32>;
/// Double-precision quaternion.
pub type Quaternion64 = Quaternion<f64>;
/// Single-precision unit quaternion.
pub type UnitQuaternion32 = UnitQuaternion<f32>;
/// Double-precision unit quaternion.
pub type UnitQuaternion64 = UnitQuaternion<f64>;
/// Single-precision axis–angle rotation.
pub type AxisAngle32 = AxisAngle<f32>;
/// Double-precision axis–angle rotation.
pub type AxisAngle64 = AxisAngle<f64>;
/// Single-precision flow configuration.
pub type KliConfig32 = KliConfig<f32>;
/// Double-precision flow configuration.
pub type KliConfig64 = KliConfig<f64>;
/// Single-precision sampled curve.
pub type InterpolationCurve32 = InterpolationCurve<f32>;
/// Double-precision sampled curve.
pub type InterpolationCurve64 = InterpolationCurve<f64>;

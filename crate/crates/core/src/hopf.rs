//! The Hopf map from the unit-quaternion 3-sphere to the ordinary 2-sphere.
//!
//! For `q = w + x·i + y·j + z·k` the map used here is
//!
//! `h(q) = (w² + x² − y² − z², 2(wz + xy), 2(xz − wy))`,
//!
//! whose fibers are the circles `q · (cos ψ + i sin ψ)`: right-multiplying by
//! a rotation about `i` moves along the fiber and leaves `h(q)` unchanged.
//! Projecting an interpolation curve therefore collapses the fiber degree of
//! freedom and leaves a directly plottable trace on S².

use crate::curve::InterpolationCurve;
use crate::quaternion::{UnitQuaternion, Vector3};
use crate::real::Real;

/// Projects a unit quaternion to its Hopf image on S².
///
/// The image of an exactly-unit quaternion is exactly unit; numerically it is
/// unit to a few ulps, and no renormalization is applied.
pub fn hopf_project<F: Real>(q: &UnitQuaternion<F>) -> Vector3<F> {
    let (w, x, y, z) = (q.w, q.x, q.y, q.z);
    [
        w * w + x * x - y * y - z * z,
        F::two() * (w * z + x * y),
        F::two() * (x * z - w * y),
    ]
}

/// Projects every sample of a curve, keeping the time stamps.
pub fn hopf_project_curve<F: Real>(curve: &InterpolationCurve<F>) -> Vec<(F, Vector3<F>)> {
    curve
        .samples()
        .iter()
        .map(|(t, q)| (*t, hopf_project(q)))
        .collect()
}

// ─────────────────────────── tests ───────────────────────────

//! Geometric analysis of interpolation curves.
//!
//! The flow and SLERP are expected to draw the same great-circle arc and to
//! differ only in how fast they move along it. The tools here make that
//! statement measurable:
//!
//! * [`path_deviation`] bounds how far a curve strays from a reference arc;
//! * [`progress_map`] extracts the arc-length parameter over time, exposing
//!   the traversal law;
//! * [`generate_frames`] turns a flow trajectory into rotated point sets for
//!   rendering, with [`unit_cube_corners`] as the stock test object.
//!
//! All distances are great-circle distances on the unit-quaternion sphere,
//! measured between 4-vectors (so `q` and `−q` are distance π apart — the
//! double cover is deliberately not quotiented out).

use crate::curve::InterpolationCurve;
use crate::error::{Error, Result};
use crate::flow::{kli_interpolate, KliConfig};
use crate::quaternion::{Quaternion, UnitQuaternion, Vector3};
use crate::real::{tol, Real};

/// Great-circle distance between two unit quaternions as points of S³,
/// `acos(a·b) ∈ [0, π]`.
///
/// The inner product is clamped to `[−1, 1]` before `acos`, so rounding at
/// coincident or antipodal inputs cannot produce NaN. No absolute value is
/// taken: `q` and `−q` are π apart here even though they are the same
/// rotation, because curves are compared as sphere points, not as rotations.
pub fn geodesic_distance<F: Real>(a: &UnitQuaternion<F>, b: &UnitQuaternion<F>) -> F {
    a.dot(b).min(F::one()).max(-F::one()).acos()
}

/// How closely a curve follows the reference arc, plus summary metadata.
///
/// Produced by [`path_deviation`]; the deviation is a one-directional
/// Hausdorff distance (curve samples to arc), which suffices because the arc
/// is exact and the question is only whether the curve strays from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathComparison<F> {
    /// Maximum great-circle distance (radians) from any curve sample to the
    /// closed reference arc.
    pub max_deviation: F,
    /// Euclidean distance `‖r − q_last‖` between the reference target and
    /// the curve's final sample.
    pub endpoint_error: F,
    /// The curve's convergence time, copied through for reporting.
    pub converged_time: F,
    /// Number of samples examined.
    pub sample_count: usize,
}

/// The orthonormal frame of the arc `p → r`: `e1 = p` and the unit tangent
/// `e2 ⊥ p` pointing toward `r`, plus the arc angle `Ω`.
///
/// Fails with [`Error::DegenerateArc`] when `r − (r·p) p` has norm at or
/// below `1e-9` — i.e. the endpoints coincide or are antipodal, leaving no
/// usable tangent direction.
fn arc_frame<F: Real>(
    p: &UnitQuaternion<F>,
    r: &UnitQuaternion<F>,
) -> Result<(Quaternion<F>, Quaternion<F>, F)> {
    let d = p.dot(r);
    let tangent = r.into_inner() - p.scaled(d);
    let norm = tangent.norm();
    if norm <= tol::<F>(1e-9) {
        return Err(Error::DegenerateArc);
    }
    let e2 = tangent.scaled(norm.recip());
    let omega = d.min(F::one()).max(-F::one()).acos();
    Ok((p.into_inner(), e2, omega))
}

/// Measures the maximum great-circle distance from the curve's samples to
/// the arc from `p` to `r` (endpoints included — the arc is the closed
/// segment, not the full great circle), along with endpoint error and curve
/// metadata.
///
/// Each sample is projected onto the plane spanned by the arc, its angular
/// coordinate is clamped to `[0, Ω]`, and the distance to that nearest arc
/// point is taken; the maximum over samples is the `max_deviation`. The
/// distance is evaluated through the chord, `2·asin(‖q − nearest‖/2)`, which
/// stays accurate down to rounding level — a curve that traces the arc
/// exactly, whatever its speed profile, scores a few ulps rather than the
/// `~1e-8` noise floor an `acos` of the inner product would have.
///
/// # Errors
///
/// * [`Error::DegenerateArc`] when the endpoints coincide or are antipodal
///   within `1e-9`, so no reference arc exists.
pub fn path_deviation<F: Real>(
    curve: &InterpolationCurve<F>,
    p: &UnitQuaternion<F>,
    r: &UnitQuaternion<F>,
) -> Result<PathComparison<F>> {
    let (e1, e2, omega) = arc_frame(p, r)?;
    let mut worst = F::zero();
    for &(_, q) in curve.samples() {
        let a = q.dot(&e1);
        let b = q.dot(&e2);
        let alpha = b.atan2(a).max(F::zero()).min(omega);
        let (sin_a, cos_a) = alpha.sin_cos();
        let nearest = e1.scaled(cos_a) + e2.scaled(sin_a);
        let half_chord = (q.into_inner() - nearest).norm() * F::half();
        let dist = F::two() * half_chord.min(F::one()).asin();
        worst = worst.max(dist);
    }
    Ok(PathComparison {
        max_deviation: worst,
        endpoint_error: (r.into_inner() - curve.last().1.into_inner()).norm(),
        converged_time: curve.converged_time(),
        sample_count: curve.len(),
    })
}

/// Arc-length progress of each sample toward the target.
///
/// Returns `(t, s)` pairs with `s(t) = (φ₀ − φ(t)) / φ₀`, where
/// `φ(t) = geodesic_distance(q(t), r)` and `φ₀ = geodesic_distance(p, r)`:
/// the fraction of the initial separation already covered. For SLERP `s`
/// equals the parameter `t` (up to the `~1e-8` `acos` rounding floor near
/// the target); for the flow `s` rises exponentially toward 1, which is
/// exactly the difference in traversal law the two schemes have. On a curve
/// that converges to within `ε` the final value is `1 − O(ε/φ₀)`, never 1.
///
/// # Errors
///
/// * [`Error::DegenerateArc`] when `φ₀ < 1e-9`: with coincident endpoints
///   progress is undefined.
pub fn progress_map<F: Real>(
    curve: &InterpolationCurve<F>,
    p: &UnitQuaternion<F>,
    r: &UnitQuaternion<F>,
) -> Result<Vec<(F, F)>> {
    let phi0 = geodesic_distance(p, r);
    if phi0 < tol::<F>(1e-9) {
        return Err(Error::DegenerateArc);
    }
    Ok(curve
        .samples()
        .iter()
        .map(|&(t, q)| (t, (phi0 - geodesic_distance(&q, r)) / phi0))
        .collect())
}

/// Integrates the flow from `p` to `r` and returns, for each requested time,
/// the object's points rotated by the trajectory quaternion at that time.
///
/// Times must lie on the integration grid and not beyond the convergence
/// time; each point is rotated by conjugation. The usual use is animation
/// key-framing: `object_points` is a rigid point cloud (see
/// [`unit_cube_corners`]) and each output entry is one frame.
///
/// # Errors
///
/// * whatever [`kli_interpolate`] reports for `(p, r, cfg)`;
/// * [`Error::TimeNotSampled`] for a time off the grid or past convergence.
pub fn generate_frames<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    times: &[F],
    object_points: &[Vector3<F>],
    cfg: &KliConfig<F>,
) -> Result<Vec<(F, Vec<Vector3<F>>)>> {
    let curve = kli_interpolate(p, r, cfg)?;
    times
        .iter()
        .map(|&t| {
            let q = curve.sample_at(t)?;
            let points = object_points.iter().map(|&v| q.rotate_vector(v)).collect();
            Ok((t, points))
        })
        .collect()
}

/// The eight corners of the axis-aligned unit cube centered at the origin,
/// `(±½, ±½, ±½)`, ordered by binary count with x varying fastest.
pub fn unit_cube_corners<F: Real>() -> [Vector3<F>; 8] {
    let h = F::half();
    let mut corners = [[F::zero(); 3]; 8];
    for (i, corner) in corners.iter_mut().enumerate() {
        corner[0] = if i & 1 == 0 { -h } else { h };
        corner[1] = if i & 2 == 0 { -h } else { h };
        corner[2] = if i & 4 == 0 { -h } else { h };
    }
    corners
}

// ─────────────────────────── tests ───────────────────────────

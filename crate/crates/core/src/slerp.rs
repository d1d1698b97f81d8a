//! Spherical linear interpolation, the classical reference the flow is
//! compared against.
//!
//! Two independent evaluation routes are kept deliberately:
//!
//! * [`slerp_eval`] computes the power form `p · (p̄ r)^t`;
//! * [`slerp_eval_sine_weighted`] computes the sine-weighted form
//!   `[sin((1−t)Ω) p + sin(tΩ) r] / sin Ω`, with `Ω` the angle between the
//!   endpoints as 4-vectors.
//!
//! The two are algebraically identical, and tests hold them to each other at
//! `1e-12`. Neither route flips signs behind the caller's back: when
//! `dot(p, r) < 0` the interpolation follows the long arc, exactly as given.
//! Callers wanting the short arc negate `r` themselves (the CLI does this
//! under its `--shortest` flag).

use crate::curve::InterpolationCurve;
use crate::error::{Error, Result};
use crate::quaternion::UnitQuaternion;
use crate::real::{tol, Real};

/// Shared argument validation: `t` in `[0, 1]`, endpoints not antipodal.
fn validate<F: Real>(p: &UnitQuaternion<F>, r: &UnitQuaternion<F>, t: F) -> Result<()> {
    if !(t >= F::zero() && t <= F::one()) {
        return Err(Error::DomainError {
            value: t.to_f64().unwrap_or(f64::NAN),
            domain: "[0, 1]",
        });
    }
    let d = p.dot(r);
    if d <= -F::one() + tol::<F>(1e-12) {
        return Err(Error::AntipodalInput {
            dot: d.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Evaluates SLERP between `p` and `r` at `t ∈ [0, 1]`, in the power form
/// `p · (p̄ r)^t`.
///
/// `t = 0` and `t = 1` return `p` and `r` bitwise — those are the exact
/// values of the expression, delivered without rounding through the power.
///
/// # Errors
///
/// * [`Error::DomainError`] when `t` is outside `[0, 1]` (NaN included);
/// * [`Error::AntipodalInput`] when `dot(p, r) ≤ −1 + 1e-12`, where the arc
///   is not unique.
pub fn slerp_eval<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    t: F,
) -> Result<UnitQuaternion<F>> {
    validate(&p, &r, t)?;
    if t == F::zero() {
        return Ok(p);
    }
    if t == F::one() {
        return Ok(r);
    }
    let relative = p.inverse() * r;
    Ok(p * relative.power(t))
}

/// Evaluates SLERP in the sine-weighted form
/// `[sin((1−t)Ω) p + sin(tΩ) r] / sin Ω`.
///
/// Kept as an independent route so the power form has something to be checked
/// against; takes the same arguments, enforces the same domain, and agrees
/// with [`slerp_eval`] to `1e-12` away from the antipodal edge. When
/// `Ω < 1e-6` the sine weights become `0/0`-shaped and the evaluation falls
/// back to normalized linear interpolation, which matches SLERP to `O(Ω²)`
/// there.
///
/// # Errors
///
/// Same as [`slerp_eval`].
pub fn slerp_eval_sine_weighted<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    t: F,
) -> Result<UnitQuaternion<F>> {
    validate(&p, &r, t)?;
    let d = p.dot(&r).min(F::one()).max(-F::one());
    let omega = d.acos();
    let blended = if omega < tol::<F>(1e-6) {
        p.scaled(F::one() - t) + r.scaled(t)
    } else {
        let sin_omega = omega.sin();
        let a = ((F::one() - t) * omega).sin() / sin_omega;
        let b = (t * omega).sin() / sin_omega;
        p.scaled(a) + r.scaled(b)
    };
    Ok(blended
        .normalize()
        .expect("slerp blend lies on the unit sphere"))
}

/// Samples SLERP from `p` to `r` at `n ≥ 2` uniformly spaced parameters
/// `t = 0, 1/(n−1), …, 1`.
///
/// The result uses the same curve type as the flow integrator, with
/// `converged_time = 1`: SLERP arrives at its target exactly at the end of
/// the parameter interval.
///
/// # Errors
///
/// * [`Error::DomainError`] when `n < 2`;
/// * [`Error::AntipodalInput`] as for [`slerp_eval`].
pub fn slerp_sample<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    n: usize,
) -> Result<InterpolationCurve<F>> {
    if n < 2 {
        return Err(Error::DomainError {
            value: n as f64,
            domain: "at least 2 samples",
        });
    }
    let last = F::from_usize(n - 1).unwrap();
    let step = last.recip();
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let t = F::from_usize(i).unwrap() / last;
        samples.push((t, slerp_eval(p, r, t)?));
    }
    Ok(InterpolationCurve::from_parts(samples, step, r))
}

// ─────────────────────────── tests ───────────────────────────

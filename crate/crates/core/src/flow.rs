//! The interpolation flow and its integrator.
//!
//! The flow drives a unit quaternion `q` toward a fixed target `r` along the
//! great circle joining them. Its vector field has two algebraically equal
//! forms:
//!
//! * the product form `q′ = −½ (q r̄ q − r)`, and
//! * the tangential form `q′ = r − (q·r) q`,
//!
//! related by the unit-sphere identity `q r̄ q = 2 (q·r) q − r`. The
//! tangential form is what the integrator evaluates; the product form is kept
//! as an independent cross-check and both are exercised against each other in
//! tests.
//!
//! Writing `φ(t)` for the angle between `q(t)` and `r`, the flow reduces to
//! `φ′ = −sin φ`, which integrates in closed form to
//! `tan(φ(t)/2) = tan(φ(0)/2) · e^{−t}`: the angle decays exponentially and
//! the trajectory is the great-circle arc from start to target, traversed
//! with an exponential time law. [`closed_form_solution`] evaluates that
//! expression directly and serves as the reference the numerical integrator
//! is tested against.
//!
//! [`kli_interpolate`] integrates the field with classical fixed-step
//! Runge–Kutta, renormalizing after every step, and stops at the first
//! checkpoint time (a multiple of the configured `delta`) where the residual
//! `‖r − q‖` drops below `epsilon`.

use crate::curve::InterpolationCurve;
use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, UnitQuaternion};
use crate::real::{tol, Real};

// ─────────────────────────── configuration ───────────────────────────

/// Parameters of the flow integrator.
///
/// Constructed through [`KliConfig::new`], which enforces:
///
/// * `epsilon`, `delta`, and `step_h` are positive and finite;
/// * `step_h ≤ delta ≤ t_max`;
/// * `delta` is an integer multiple of `step_h` within `1e-12`, so
///   convergence checkpoints land exactly on integration steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KliConfig<F> {
    epsilon: F,
    delta: F,
    step_h: F,
    t_max: F,
    shortest_path: bool,
    steps_per_check: usize,
}

impl<F: Real> KliConfig<F> {
    /// Validates and builds a configuration.
    pub fn new(epsilon: F, delta: F, step_h: F, t_max: F) -> Result<Self> {
        // NaN fails `v > 0` and so lands in the rejection branch.
        let positive_finite = |v: F| v.is_finite() && v > F::zero();
        let invalid = |reason| Err(Error::InvalidConfig { reason });
        if !positive_finite(epsilon) {
            return invalid("epsilon must be positive and finite");
        }
        if !positive_finite(delta) {
            return invalid("delta must be positive and finite");
        }
        if !positive_finite(step_h) {
            return invalid("step_h must be positive and finite");
        }
        if !t_max.is_finite() || t_max < delta {
            return invalid("t_max must be finite and at least delta");
        }
        if step_h > delta {
            return invalid("step_h must not exceed delta");
        }
        let ratio = (delta / step_h).round();
        let whole_multiple = ratio >= F::one() && (delta - ratio * step_h).abs() <= tol::<F>(1e-12);
        if !whole_multiple {
            return invalid("delta must be an integer multiple of step_h");
        }
        let steps_per_check = ratio.to_usize().ok_or(Error::InvalidConfig {
            reason: "delta / step_h does not fit in a step count",
        })?;
        Ok(Self {
            epsilon,
            delta,
            step_h,
            t_max,
            shortest_path: false,
            steps_per_check,
        })
    }

    /// Toggles negating the target when the endpoints' inner product is
    /// negative, so the flow takes the shorter of the two great-circle arcs.
    /// Off by default: the flow then converges to the target exactly as
    /// given.
    pub fn with_shortest_path(mut self, on: bool) -> Self {
        self.shortest_path = on;
        self
    }

    /// Convergence threshold on the residual `‖r − q‖`.
    #[inline]
    pub fn epsilon(&self) -> F {
        self.epsilon
    }

    /// Spacing of convergence checkpoints.
    #[inline]
    pub fn delta(&self) -> F {
        self.delta
    }

    /// Integrator step size.
    #[inline]
    pub fn step_h(&self) -> F {
        self.step_h
    }

    /// Time horizon after which the integrator gives up.
    #[inline]
    pub fn t_max(&self) -> F {
        self.t_max
    }

    /// Whether the shorter great-circle arc is taken (see
    /// [`KliConfig::with_shortest_path`]).
    #[inline]
    pub fn shortest_path(&self) -> bool {
        self.shortest_path
    }

    /// Integration steps between consecutive convergence checks.
    #[inline]
    pub fn steps_per_check(&self) -> usize {
        self.steps_per_check
    }
}

/// The parameters used throughout the examples in this crate: `epsilon =
/// 1e-5`, `delta = 0.01`, `step_h = 0.01`, `t_max = 100`, long-way arcs kept.
impl<F: Real> Default for KliConfig<F> {
    fn default() -> Self {
        KliConfig::new(
            tol::<F>(1e-5),
            tol::<F>(0.01),
            tol::<F>(0.01),
            F::from(100.0).unwrap(),
        )
        .expect("default configuration is valid")
    }
}

// ─────────────────────────── vector field ───────────────────────────

/// The flow's vector field in tangential form, `r − (q·r) q`.
///
/// For unit `q` this lies in the tangent space at `q`, so the continuous flow
/// never leaves the sphere; the integrator only has to undo its own
/// discretization drift.
#[inline]
pub fn rhs<F: Real>(q: &UnitQuaternion<F>, r: &UnitQuaternion<F>) -> Quaternion<F> {
    rhs_raw(q, r)
}

/// Tangential form evaluated on plain quaternions, so Runge–Kutta stages
/// (which sit slightly off the sphere) can reuse it.
#[inline]
fn rhs_raw<F: Real>(q: &Quaternion<F>, r: &Quaternion<F>) -> Quaternion<F> {
    *r - q.scaled(q.dot(r))
}

/// The flow's vector field in product form, `−½ (q r̄ q − r)`.
///
/// Algebraically identical to [`rhs`] on the unit sphere; kept as a separate
/// code path purely so the two derivations can be checked against each other.
#[inline]
pub fn rhs_product_form<F: Real>(q: &UnitQuaternion<F>, r: &UnitQuaternion<F>) -> Quaternion<F> {
    let q = q.into_inner();
    let r = r.into_inner();
    (r - q * r.conjugate() * q).scaled(F::half())
}

// ─────────────────────────── integration ───────────────────────────

/// One classical fourth-order Runge–Kutta step of the flow, renormalized.
///
/// Renormalization after every step keeps the discrete trajectory on the
/// sphere to rounding, so drift cannot accumulate over long integrations.
///
/// # Panics
///
/// Panics if the un-normalized update lands within `1e-12` of the origin.
/// The field is bounded by `‖r − (q·r) q‖ ≤ 1`, so this needs a step size of
/// order one — far coarser than any step that resolves the flow — to be
/// reachable.
pub fn rk4_step<F: Real>(q: &UnitQuaternion<F>, r: &UnitQuaternion<F>, h: F) -> UnitQuaternion<F> {
    let q0 = q.into_inner();
    let r0 = r.into_inner();
    let half_h = h * F::half();
    let sixth = h / F::from(6.0).unwrap();

    let k1 = rhs_raw(&q0, &r0);
    let k2 = rhs_raw(&(q0 + k1.scaled(half_h)), &r0);
    let k3 = rhs_raw(&(q0 + k2.scaled(half_h)), &r0);
    let k4 = rhs_raw(&(q0 + k3.scaled(h)), &r0);

    let update = k1 + k2.scaled(F::two()) + k3.scaled(F::two()) + k4;
    (q0 + update.scaled(sixth))
        .normalize()
        .expect("integrator step collapsed to the origin")
}

/// Integrates the flow from `p` toward `r`, recording every step.
///
/// The trajectory starts at `p` at `t = 0` and is advanced with
/// [`rk4_step`] at the configured step size; every step is recorded, so the
/// returned curve is sampled at `t = 0, h, 2h, …`. Convergence is tested at
/// `t = 0, δ, 2δ, …` (checkpoints land on steps because `δ` is a multiple of
/// `h`): the first checkpoint where `‖r − q‖ < ε` ends the integration, and
/// the curve's `converged_time` is that checkpoint. With
/// [`shortest_path`](KliConfig::with_shortest_path) enabled and
/// `dot(p, r) < 0` the target is first replaced by `−r` — the same rotation —
/// so the flow follows the shorter arc; the curve's `target` reports the
/// endpoint actually used.
///
/// # Errors
///
/// * [`Error::AntipodalInput`] when `dot(p, r) ≤ −1 + 1e-12` and the
///   shortest-path flip is off (with it on, the flip makes the inner product
///   nonnegative): exactly antipodal endpoints have no preferred arc, and
///   nearly antipodal ones cannot be distinguished from that in floating
///   point.
/// * [`Error::NonConvergence`] when every checkpoint up to `t_max` fails the
///   residual test.
pub fn kli_interpolate<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    cfg: &KliConfig<F>,
) -> Result<InterpolationCurve<F>> {
    let target = if cfg.shortest_path() && p.dot(&r) < F::zero() {
        -r
    } else {
        r
    };
    let d = p.dot(&target);
    if d <= -F::one() + tol::<F>(1e-12) {
        return Err(Error::AntipodalInput {
            dot: d.to_f64().unwrap_or(f64::NAN),
        });
    }

    let h = cfg.step_h();
    let mut samples = vec![(F::zero(), p)];
    // Checkpoint at t = 0: endpoints already within epsilon need no flow.
    if (target.into_inner() - p.into_inner()).norm() < cfg.epsilon() {
        return Ok(InterpolationCurve::from_parts(samples, h, target));
    }

    let mut q = p;
    let mut step = 0usize;
    let mut checkpoint = 0usize;
    loop {
        checkpoint += 1;
        let t_check = F::from_usize(checkpoint).unwrap() * cfg.delta();
        if t_check > cfg.t_max() + tol::<F>(1e-9) {
            return Err(Error::NonConvergence {
                t_max: cfg.t_max().to_f64().unwrap_or(f64::NAN),
            });
        }
        for _ in 0..cfg.steps_per_check() {
            step += 1;
            q = rk4_step(&q, &target, h);
            samples.push((F::from_usize(step).unwrap() * h, q));
        }
        if (target.into_inner() - q.into_inner()).norm() < cfg.epsilon() {
            return Ok(InterpolationCurve::from_parts(samples, h, target));
        }
    }
}

// ─────────────────────────── closed form ───────────────────────────

/// Evaluates the flow's exact solution at time `t`.
///
/// Decompose the start as `p = cos φ₀ · r + sin φ₀ · ŵ`, where `ŵ` is the
/// unit tangent at `r` pointing toward `p`. The solution keeps the same `ŵ`
/// and shrinks the angle according to `tan(φ/2) = tan(φ₀/2) e^{−t}`:
///
/// `q(t) = cos φ(t) · r + sin φ(t) · ŵ`.
///
/// The implementation works with `τ = tan(φ/2)` directly — `τ₀` is computed
/// as `‖p − (p·r) r‖ / (1 + p·r)`, and `cos φ`, `sin φ` are recovered from
/// the half-angle identities — which stays accurate for `φ₀` near both `0`
/// and `π`. When `p` and `r` coincide to `1e-12` the tangent direction is
/// numerically void and the constant solution `r` is returned.
///
/// Any finite `t` is accepted; the flow reaches `r` only asymptotically, so
/// `t` values of interest are nonnegative. (For large negative `t` the
/// half-angle tangent overflows and the evaluation fails with
/// [`Error::NearZeroQuaternion`] from the final normalization.)
///
/// # Errors
///
/// * [`Error::AntipodalInput`] when `dot(p, r) ≤ −1 + 1e-12`; the flow has no
///   unique arc to follow from the antipode.
pub fn closed_form_solution<F: Real>(
    p: UnitQuaternion<F>,
    r: UnitQuaternion<F>,
    t: F,
) -> Result<UnitQuaternion<F>> {
    let d = p.dot(&r);
    if d <= -F::one() + tol::<F>(1e-12) {
        return Err(Error::AntipodalInput {
            dot: d.to_f64().unwrap_or(f64::NAN),
        });
    }

    let w = p.into_inner() - r.scaled(d);
    let w_norm = w.norm();
    if w_norm <= tol::<F>(1e-12) {
        return Ok(r);
    }
    let w_hat = w.scaled(w_norm.recip());

    let tau0 = w_norm / (F::one() + d);
    let tau = tau0 * (-t).exp();
    let denom = F::one() + tau * tau;
    let cos_phi = (F::one() - tau * tau) / denom;
    let sin_phi = (F::two() * tau) / denom;

    (r.scaled(cos_phi) + w_hat.scaled(sin_phi)).normalize()
}

// ─────────────────────────── tests ───────────────────────────

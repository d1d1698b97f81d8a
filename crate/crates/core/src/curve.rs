//! Sampled interpolation curves.
//!
//! Both the flow integrator and the SLERP reference produce the same shape of
//! output: a list of `(t, q)` samples on a uniform time grid, together with
//! the target endpoint and the time at which the curve is considered to have
//! arrived. Keeping that in one type lets the analysis and serialization
//! layers treat the two sources identically.

use crate::error::{Error, Result};
use crate::quaternion::UnitQuaternion;
use crate::real::{tol, Real};

/// A rotation curve sampled on a uniform time grid.
///
/// Invariants, upheld by the constructors in this crate:
///
/// * there is at least one sample, and sample times are `i · step` for
///   `i = 0, 1, …` (strictly increasing, uniform to rounding);
/// * every stored quaternion has unit norm within `1e-9`;
/// * `converged_time` equals the time of the final sample.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationCurve<F> {
    samples: Vec<(F, UnitQuaternion<F>)>,
    step: F,
    converged_time: F,
    target: UnitQuaternion<F>,
}

impl<F: Real> InterpolationCurve<F> {
    /// Assembles a curve from parts. Internal: callers are the flow and
    /// SLERP samplers, which guarantee the documented invariants.
    pub(crate) fn from_parts(
        samples: Vec<(F, UnitQuaternion<F>)>,
        step: F,
        target: UnitQuaternion<F>,
    ) -> Self {
        debug_assert!(!samples.is_empty());
        let converged_time = samples.last().expect("curve has at least one sample").0;
        Self {
            samples,
            step,
            converged_time,
            target,
        }
    }

    /// All `(t, q)` samples in time order.
    #[inline]
    pub fn samples(&self) -> &[(F, UnitQuaternion<F>)] {
        &self.samples
    }

    /// Grid spacing between consecutive samples.
    #[inline]
    pub fn step(&self) -> F {
        self.step
    }

    /// Time of the final sample — where the curve reached (or was declared to
    /// have reached) its target.
    #[inline]
    pub fn converged_time(&self) -> F {
        self.converged_time
    }

    /// The endpoint the curve was driven toward.
    #[inline]
    pub fn target(&self) -> UnitQuaternion<F> {
        self.target
    }

    /// Number of samples.
    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Always false: curves carry at least their initial sample.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// First sample, at `t = 0`.
    #[inline]
    pub fn first(&self) -> (F, UnitQuaternion<F>) {
        self.samples[0]
    }

    /// Final sample.
    #[inline]
    pub fn last(&self) -> (F, UnitQuaternion<F>) {
        *self.samples.last().expect("curve has at least one sample")
    }

    /// Looks up the sample at time `t` by grid index.
    ///
    /// `t` must land on the grid within `1e-9`; anything else — including
    /// times beyond the final sample — fails with [`Error::TimeNotSampled`].
    /// No interpolation between samples is attempted.
    pub fn sample_at(&self, t: F) -> Result<UnitQuaternion<F>> {
        let not_sampled = || Error::TimeNotSampled {
            t: t.to_f64().unwrap_or(f64::NAN),
            step: self.step.to_f64().unwrap_or(f64::NAN),
        };
        let ratio = t / self.step;
        if !ratio.is_finite() || ratio < -F::half() {
            return Err(not_sampled());
        }
        let index = ratio.round();
        if (t - index * self.step).abs() > tol::<F>(1e-9) {
            return Err(not_sampled());
        }
        let index = index.to_usize().ok_or_else(not_sampled)?;
        match self.samples.get(index) {
            Some(&(_, q)) => Ok(q),
            None => Err(not_sampled()),
        }
    }
}

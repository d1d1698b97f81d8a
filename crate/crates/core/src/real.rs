//! Scalar abstraction.
//!
//! Everything in this crate is generic over a floating-point scalar so the
//! same code paths serve `f32` and `f64`. The [`Real`] trait bundles the
//! `num-traits` capabilities we actually use; a blanket impl covers any type
//! that provides them, so downstream code never has to name the bound pieces
//! individually.

use core::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + 'static {
    /// `1/2`, exact in any binary float.
    #[inline]
    fn half() -> Self {
        Self::from(0.5).unwrap()
    }

    /// `2`, exact in any binary float.
    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Display + 'static {}

/// Converts an `f64` tolerance literal into the working scalar.
///
/// Tolerances are specified as `f64` literals throughout; the conversion to
/// `f32` rounds but every tolerance we use is far coarser than either type's
/// epsilon, so the rounding is immaterial.
#[inline]
pub(crate) fn tol<F: Real>(value: f64) -> F {
    F::from(value).unwrap()
}

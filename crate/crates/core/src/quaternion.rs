//! Quaternion arithmetic and the unit-quaternion rotation type.
//!
//! Conventions used throughout the crate:
//!
//! * components are stored scalar-first as `(w, x, y, z)` meaning
//!   `w + x·i + y·j + z·k`;
//! * products follow the Hamilton convention (`i·j = k`);
//! * rotations act on vectors by conjugation, `v ↦ q (0, v) q̄`.
//!
//! [`Quaternion`] is the plain algebra: every field is public and the usual
//! operators are implemented. [`UnitQuaternion`] is a validated newtype whose
//! norm stays within `1e-9` of one; it derefs to [`Quaternion`] for read
//! access, and all rotation-specific operations (axis–angle conversion,
//! powers, vector rotation) live on it.

use core::fmt;
use core::ops::{Add, Deref, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::real::{tol, Real};

/// A 3-vector over the working scalar.
pub type Vector3<F> = [F; 3];

// ─────────────────────────── Quaternion ───────────────────────────

/// A quaternion `w + x·i + y·j + z·k` with no constraint on its norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<F> {
    /// Scalar part.
    pub w: F,
    /// First imaginary component.
    pub x: F,
    /// Second imaginary component.
    pub y: F,
    /// Third imaginary component.
    pub z: F,
}

impl<F: Real> Quaternion<F> {
    /// Builds a quaternion from its four components, scalar first.
    #[inline]
    pub fn new(w: F, x: F, y: F, z: F) -> Self {
        Self { w, x, y, z }
    }

    /// The multiplicative identity `1`.
    #[inline]
    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), F::zero(), F::zero())
    }

    /// The additive identity `0`.
    #[inline]
    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero(), F::zero())
    }

    /// A pure-imaginary quaternion `(0, v)`.
    #[inline]
    pub fn from_vector(v: Vector3<F>) -> Self {
        Self::new(F::zero(), v[0], v[1], v[2])
    }

    /// The imaginary part as a 3-vector.
    #[inline]
    pub fn vector_part(&self) -> Vector3<F> {
        [self.x, self.y, self.z]
    }

    /// Conjugate `w − x·i − y·j − z·k`.
    #[inline]
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Euclidean inner product of the component 4-vectors.
    #[inline]
    pub fn dot(&self, other: &Quaternion<F>) -> F {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Squared Euclidean norm.
    #[inline]
    pub fn norm_squared(&self) -> F {
        self.dot(self)
    }

    /// Euclidean norm.
    #[inline]
    pub fn norm(&self) -> F {
        self.norm_squared().sqrt()
    }

    /// Scales every component by `s`.
    #[inline]
    pub fn scaled(&self, s: F) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Rescales to unit norm.
    ///
    /// Fails with [`Error::NearZeroQuaternion`] when the norm is at or below
    /// `1e-12`, where the direction is numerically meaningless. A NaN or
    /// infinite component also lands in the error branch, since the norm
    /// comparison then fails.
    pub fn normalize(&self) -> Result<UnitQuaternion<F>> {
        let n = self.norm();
        if n > tol::<F>(1e-12) && n.is_finite() {
            Ok(UnitQuaternion(self.scaled(n.recip())))
        } else {
            Err(Error::NearZeroQuaternion {
                norm: n.to_f64().unwrap_or(f64::NAN),
            })
        }
    }
}

impl<F: Real> Add for Quaternion<F> {
    type Output = Quaternion<F>;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl<F: Real> Sub for Quaternion<F> {
    type Output = Quaternion<F>;

    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl<F: Real> Neg for Quaternion<F> {
    type Output = Quaternion<F>;

    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl<F: Real> Mul for Quaternion<F> {
    type Output = Quaternion<F>;

    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl<F: Real> fmt::Display for Quaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

// ─────────────────────────── AxisAngle ───────────────────────────

/// Axis–angle form of a rotation: a unit axis and an angle in radians.
///
/// Angles produced by [`UnitQuaternion::to_axis_angle`] lie in `[0, 2π]`,
/// hitting `2π` only for the quaternion `-1` whose axis is conventional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle<F> {
    /// Unit rotation axis.
    pub axis: Vector3<F>,
    /// Rotation angle in radians.
    pub angle: F,
}

// ───────────────────────── UnitQuaternion ─────────────────────────

/// A quaternion of unit norm, representing a rotation of 3-space.
///
/// The constructor renormalizes, so the stored norm deviates from one by at
/// most a few ulps — far inside the `1e-9` budget the rest of the crate
/// assumes. The type derefs to [`Quaternion`] for component access and the
/// shared arithmetic helpers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion<F>(Quaternion<F>);

impl<F: Real> UnitQuaternion<F> {
    /// The identity rotation.
    #[inline]
    pub fn identity() -> Self {
        Self(Quaternion::identity())
    }

    /// Validates and renormalizes a quaternion expected to be unit.
    ///
    /// Accepts inputs whose norm deviates from one by less than `1e-6` —
    /// enough slack to absorb honest floating-point drift — and rejects
    /// anything further out with [`Error::NonUnitQuaternion`], on the theory
    /// that such input signals a bug upstream rather than drift.
    pub fn new(q: Quaternion<F>) -> Result<Self> {
        let n = q.norm();
        let tolerance = tol::<F>(1e-6);
        if (n - F::one()).abs() < tolerance {
            Ok(Self(q.scaled(n.recip())))
        } else {
            Err(Error::NonUnitQuaternion {
                norm: n.to_f64().unwrap_or(f64::NAN),
                tolerance: 1e-6,
            })
        }
    }

    /// [`UnitQuaternion::new`] from loose components, scalar first.
    pub fn from_components(w: F, x: F, y: F, z: F) -> Result<Self> {
        Self::new(Quaternion::new(w, x, y, z))
    }

    /// Wraps a quaternion already known to have unit norm, skipping the check.
    ///
    /// Callers must guarantee the norm is within `1e-9` of one; everything
    /// constructed from `cos`/`sin` pairs or renormalized products qualifies.
    #[inline]
    pub fn new_unchecked(q: Quaternion<F>) -> Self {
        debug_assert!(
            (q.norm() - F::one()).abs() < tol::<F>(1e-9),
            "new_unchecked given non-unit quaternion (norm = {})",
            q.norm(),
        );
        Self(q)
    }

    /// The underlying plain quaternion.
    #[inline]
    pub fn into_inner(self) -> Quaternion<F> {
        self.0
    }

    /// Rotation inverse; for a unit quaternion this is the conjugate, exactly.
    #[inline]
    pub fn inverse(&self) -> Self {
        Self(self.0.conjugate())
    }

    /// Converts to axis–angle form.
    ///
    /// The angle is `2·atan2(‖v‖, w)` with `v` the imaginary part, which is
    /// accurate over the whole sphere. When the imaginary part vanishes
    /// exactly (the quaternions `±1`) the axis is conventionally `(1, 0, 0)`,
    /// giving angle `0` for `+1` and `2π` for `-1`.
    pub fn to_axis_angle(&self) -> AxisAngle<F> {
        let v = self.vector_part();
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let angle = F::two() * n.atan2(self.w);
        let axis = if n > F::zero() {
            [v[0] / n, v[1] / n, v[2] / n]
        } else {
            [F::one(), F::zero(), F::zero()]
        };
        AxisAngle { axis, angle }
    }

    /// Builds the rotation with the given unit axis and angle.
    ///
    /// The axis is trusted to be unit; a non-unit axis yields a non-unit
    /// result and is a caller bug.
    pub fn from_axis_angle(aa: &AxisAngle<F>) -> Self {
        let half = aa.angle * F::half();
        let (s, c) = half.sin_cos();
        Self::new_unchecked(Quaternion::new(
            c,
            aa.axis[0] * s,
            aa.axis[1] * s,
            aa.axis[2] * s,
        ))
    }

    /// Real power `q^t`, the rotation with the same axis and `t` times the
    /// angle.
    ///
    /// `q^0` is the identity and `q^1` reproduces `q` up to a couple of ulps
    /// from the axis–angle round trip.
    pub fn power(&self, t: F) -> Self {
        let aa = self.to_axis_angle();
        let half = t * aa.angle * F::half();
        let (s, c) = half.sin_cos();
        Self::new_unchecked(Quaternion::new(
            c,
            aa.axis[0] * s,
            aa.axis[1] * s,
            aa.axis[2] * s,
        ))
    }

    /// Rotates a vector by conjugation, `v ↦ q (0, v) q̄`.
    pub fn rotate_vector(&self, v: Vector3<F>) -> Vector3<F> {
        let rotated = self.0 * Quaternion::from_vector(v) * self.0.conjugate();
        rotated.vector_part()
    }
}

impl<F: Real> Deref for UnitQuaternion<F> {
    type Target = Quaternion<F>;

    #[inline]
    fn deref(&self) -> &Quaternion<F> {
        &self.0
    }
}

/// Composition of rotations. The product of two unit quaternions is unit to
/// rounding, so the result is wrapped without renormalization.
impl<F: Real> Mul for UnitQuaternion<F> {
    type Output = UnitQuaternion<F>;

    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// The antipode `-q`: the same rotation, opposite sphere hemisphere.
impl<F: Real> Neg for UnitQuaternion<F> {
    type Output = UnitQuaternion<F>;

    #[inline]
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl<F: Real> fmt::Display for UnitQuaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// ─────────────────────────── tests ───────────────────────────

//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All math is written against [`Real`], implemented for `f32` and `f64`.
//! Each precision carries its own [`Tolerances`] ladder; the `f64` values are
//! the ones the verification suites are pinned to.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumAssign};

/// Numerical tolerances used throughout the crate for one scalar precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Round-off allowance for exact algebra: PSD floor, simplex sums,
    /// Hermiticity and the compatibility boundary.
    pub exact: T,
    /// Orthogonality / unitarity / reconstruction checks.
    pub reconstruct: T,
    /// Floor on recovered Pauli probabilities before a Bloch matrix is
    /// declared not completely positive.
    pub cp: T,
    /// Directions within this distance of unit norm are normalized, farther
    /// ones are rejected.
    pub normalize: T,
    /// Threshold under which a P-value or a measurement component counts as zero.
    pub vanishing: T,
    /// Relative off-diagonal threshold for Jacobi sweeps.
    pub jacobi: T,
}

/// Floating point scalar usable by the crate (`f32` or `f64`).
pub trait Real:
    Float
    + FloatConst
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into this precision.
    fn lit(x: f64) -> Self;

    fn as_f64(self) -> f64;

    fn tolerances() -> Tolerances<Self>;

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    #[inline]
    fn sq(self) -> Self {
        self * self
    }

    /// Square root with tiny negative round-off clamped to zero.
    #[inline]
    fn sqrt_clamped(self) -> Self {
        if self <= Self::zero() {
            Self::zero()
        } else {
            self.sqrt()
        }
    }
}

impl Real for f64 {
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self
    }

    fn tolerances() -> Tolerances<Self> {
        Tolerances {
            exact: 1e-12,
            reconstruct: 1e-10,
            cp: 1e-9,
            normalize: 1e-6,
            vanishing: 1e-14,
            jacobi: 1e-14,
        }
    }
}

impl Real for f32 {
    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }

    fn tolerances() -> Tolerances<Self> {
        Tolerances {
            exact: 1e-5,
            reconstruct: 1e-4,
            cp: 1e-4,
            normalize: 1e-4,
            vanishing: 1e-7,
            jacobi: 1e-6,
        }
    }
}

#[inline]
pub(crate) fn tol<T: Real>() -> Tolerances<T> {
    T::tolerances()
}

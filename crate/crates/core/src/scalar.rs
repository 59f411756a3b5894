//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
///
/// Everything in the crate is written against this trait. The tolerances
/// quoted in the docs are the `f64` ones; `f32` runs degrade gracefully via
/// [`Real::tol`].
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in the scalar type")
    }

    /// Converts a count or index into the scalar type.
    #[inline]
    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("integer representable in the scalar type")
    }

    /// `max(requested, 1000 * epsilon)`: a tolerance that is `requested` in
    /// double precision but never tighter than the type can deliver.
    #[inline]
    fn tol(requested: f64) -> Self {
        Self::lit(requested).max(Self::lit(1000.0) * Self::epsilon())
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Lossy view as `f64`, for reporting.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `ln(1 + e^t)` without overflow for large `t` or loss of precision for
/// very negative `t`.
pub fn softplus<T: Real>(t: T) -> T {
    if t > T::zero() {
        t + (-t).exp().ln_1p()
    } else {
        t.exp().ln_1p()
    }
}

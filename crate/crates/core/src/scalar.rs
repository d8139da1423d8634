//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point type the toolkit computes in: `f32` or `f64`.
///
/// Accuracy targets quoted in the docs refer to `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Euler–Mascheroni constant.
    fn euler_gamma() -> Self;
}

impl Scalar for f32 {
    fn euler_gamma() -> Self {
        0.577_215_7
    }
}

impl Scalar for f64 {
    fn euler_gamma() -> Self {
        0.577_215_664_901_532_9
    }
}

/// Converts an `f64` literal into `T`.
#[inline]
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

/// Converts an integer into `T`.
#[inline]
pub(crate) fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("integer representable in scalar type")
}

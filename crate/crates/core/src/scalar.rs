//! Scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the geometry and kernel code is generic over.
///
/// Implemented for `f32` and `f64`. The associated tolerances are the only
/// place where precision-dependent thresholds live; everything else is
/// written against this trait.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Determinant drift above which a composed element is rescaled.
    fn det_drift_tolerance() -> Self;

    /// Grid spacing used to key group elements for deduplication.
    fn dedup_quantum() -> Self;

    /// Absolute slack allowed when testing a displacement against a radius.
    fn radius_slack() -> Self;

    /// Converts an `f64` literal. Panics only if the value is not representable
    /// at all, which cannot happen for finite literals.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits scalar")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Real for f64 {
    fn det_drift_tolerance() -> Self {
        1e-13
    }
    fn dedup_quantum() -> Self {
        1e-9
    }
    fn radius_slack() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn det_drift_tolerance() -> Self {
        1e-5
    }
    fn dedup_quantum() -> Self {
        1e-3
    }
    fn radius_slack() -> Self {
        1e-4
    }
}

/// `cosh(x)^(-n)` evaluated as `exp(-n ln cosh x)`, so large powers underflow
/// gracefully to zero instead of overflowing the intermediate power.
#[inline]
pub fn cosh_pow_neg<T: Real>(x: T, n: T) -> T {
    if n == T::zero() {
        return T::one();
    }
    let lc = ln_cosh(x);
    (-n * lc).exp()
}

/// `ln cosh x` without overflow for large `|x|`.
#[inline]
pub fn ln_cosh<T: Real>(x: T) -> T {
    let ax = x.abs();
    if ax.is_infinite() {
        return T::infinity();
    }
    // ln cosh x = |x| + ln(1 + e^{-2|x|}) - ln 2
    ax + (-(ax + ax)).exp().ln_1p() - T::LN_2()
}

/// Natural log of the gamma function.
pub fn ln_gamma<T: Real>(x: T) -> T {
    T::lit(libm::lgamma(x.as_f64()))
}

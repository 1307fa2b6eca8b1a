//! Numerical evaluation of Bergman kernels of powers of the cotangent bundle
//! on hyperbolic surfaces, through truncated Poincaré series over explicit
//! Fuchsian groups, together with the explicit bounds they are checked
//! against.
//!
//! Everything is generic over the scalar type ([`Real`], implemented for `f32`
//! and `f64`); the aliases below fix it to `f64`.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod fuchsian;
pub mod hypgeo;
pub mod kernel;
pub mod scalar;
pub mod sum;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Point = hypgeo::HalfPlanePoint<f64>;
pub type Moebius = hypgeo::MoebiusElement<f64>;
pub type Model = fuchsian::SurfaceModel<f64>;
pub type Ball = fuchsian::OrbitBall<f64>;
pub type Evaluation = kernel::KernelEvaluation<f64>;
pub type Params = kernel::KernelParams<f64>;

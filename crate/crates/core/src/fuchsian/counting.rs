//! The orbit counting function `N(z, w; ρ)` and the two counting inequalities
//! it satisfies for a group of injectivity radius `r`:
//!
//! ```text
//!   N(z, w; δ) ≤ sinh(δ + r)/sinh(r)
//!
//!   ∫_0^∞ f dN ≤ ∫_0^δ f dN + f(δ) A(r, δ) + ∫_δ^∞ f(ρ) W(ρ, r) dρ,    δ > r/2,
//! ```
//!
//! with `A = 2 cosh(r/4) sinh δ / sinh(r/4)` and
//! `W = sinh(ρ + r/2)/(2 sinh²(r/4))`, for positive decreasing `f`.

use crate::error::{precondition, Result};
use crate::hypgeo::HalfPlanePoint;
use crate::kernel::tail_bound;
use crate::scalar::{cosh_pow_neg, Real};
use crate::sum::CompensatedSum;

use super::ball::{enumerate_ball, OrbitBall};
use super::SurfaceModel;

/// A positive decreasing function on `[0, ∞)`.
pub trait DecreasingProfile<T: Real> {
    fn value(&self, rho: T) -> T;

    /// `f(δ) A(r, δ) + ∫_δ^∞ f(ρ) W(ρ, r) dρ`, the part of the right-hand side
    /// of the integral counting inequality beyond `δ`.
    fn tail_allowance(&self, delta: T, r: T) -> T {
        numeric_tail_allowance(self, delta, r)
    }
}

/// [`DecreasingProfile::tail_allowance`] by quadrature on unit segments,
/// stopped once a segment contributes less than `1e-17` of the running total.
pub fn numeric_tail_allowance<T: Real, F: DecreasingProfile<T> + ?Sized>(
    f: &F,
    delta: T,
    r: T,
) -> T {
    let integrand = |rho: f64| (f.value(T::lit(rho)) * jl_integral_weight(T::lit(rho), r)).as_f64();
    let mut total = 0.0;
    let mut a = delta.as_f64();
    for _ in 0..10_000 {
        let target = (1e-15 * integrand(a).abs()).max(f64::MIN_POSITIVE);
        let part =
            quadrature::double_exponential::integrate(integrand, a, a + 1.0, target).integral;
        total += part;
        a += 1.0;
        if part.abs() <= 1e-17 * total.abs() {
            break;
        }
    }
    f.value(delta) * jl_boundary_weight(r, delta) + T::lit(total)
}

/// `f(ρ) = cosh^{-2k}(ρ/2)`, the profile of the kernel majorant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoshPowerProfile {
    pub k: u32,
}

impl<T: Real> DecreasingProfile<T> for CoshPowerProfile {
    fn value(&self, rho: T) -> T {
        cosh_pow_neg(rho / T::lit(2.0), T::from_int(2 * self.k as i64))
    }

    /// Closed form from [`tail_bound`] whenever it applies, which bounds the
    /// exact integral from above.
    fn tail_allowance(&self, delta: T, r: T) -> T {
        tail_bound(delta, r, self.k).unwrap_or_else(|_| numeric_tail_allowance(self, delta, r))
    }
}

/// `A(r, δ) = 2 cosh(r/4) sinh δ / sinh(r/4)`; tends to `2 sinh δ` as `r → ∞`.
pub fn jl_boundary_weight<T: Real>(r: T, delta: T) -> T {
    let four = T::lit(4.0);
    let two = T::lit(2.0);
    if r.is_infinite() {
        return two * delta.sinh();
    }
    two * delta.sinh() / (r / four).tanh()
}

/// `W(ρ, r) = sinh(ρ + r/2)/(2 sinh²(r/4))`; tends to `e^ρ` as `r → ∞`.
pub fn jl_integral_weight<T: Real>(rho: T, r: T) -> T {
    let two = T::lit(2.0);
    if r.is_infinite() {
        return rho.exp();
    }
    let s = (r / T::lit(4.0)).sinh();
    (rho + r / two).sinh() / (two * s * s)
}

/// `sinh(δ + r)/sinh(r)`; tends to `e^δ` as `r → ∞`.
pub fn jl_count_bound<T: Real>(delta: T, r: T) -> T {
    if r.is_infinite() {
        return delta.exp();
    }
    // sinh(δ + r)/sinh(r) = cosh δ + sinh δ coth r
    delta.cosh() + delta.sinh() / r.tanh()
}

impl<T: Real> OrbitBall<T> {
    /// `N(z, w; ρ)` read off the ball.
    pub fn counting_function(&self, rho: T) -> Result<usize> {
        if !self.exhaustive {
            return Err(precondition("counting needs an exhaustive ball"));
        }
        if rho > self.radius + T::radius_slack() {
            return Err(precondition(format!(
                "cannot count to {rho} in a ball of radius {}",
                self.radius
            )));
        }
        Ok(self.count_within(rho))
    }
}

/// `N(z, w; ρ)`: the number of `γ` (outside the cusp stabilizer) with
/// `d(γz, w) ≤ ρ`.
pub fn counting_function<T: Real>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    rho: T,
) -> Result<usize> {
    enumerate_ball(model, z, w, rho)?.counting_function(rho)
}

/// Both sides of the integral counting inequality at one `(z, w, δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingReport<T> {
    pub delta: T,
    /// `Σ f(d(γz, w))` over the ball plus the allowance for the rest.
    pub lhs: T,
    /// `Σ_{d ≤ δ} f(d(γz, w)) + f(δ) A + ∫_δ^∞ f W`.
    pub rhs: T,
    /// `rhs - lhs`.
    pub slack: T,
    /// Upper bound on the part of the left side beyond the ball radius.
    pub tail_allowance: T,
    pub count_at_delta: usize,
    pub ball_count: usize,
}

impl<T: Real> CountingReport<T> {
    pub fn passed(&self) -> bool {
        self.slack >= -self.tail_allowance
    }
}

/// Evaluates the integral counting inequality on an existing exhaustive ball.
/// The ball radius plays the role of the summation cut-off; it must exceed
/// `delta`.
pub fn counting_inequality_margin_in_ball<T: Real, F: DecreasingProfile<T>>(
    model: &SurfaceModel<T>,
    ball: &OrbitBall<T>,
    delta: T,
    f: &F,
) -> Result<CountingReport<T>> {
    let r = model.injectivity_radius();
    let elementary = model.kind().is_elementary();
    if !elementary && !(delta > r / T::lit(2.0)) {
        return Err(precondition(format!(
            "counting inequality needs delta > r/2, got delta = {delta}, r = {r}"
        )));
    }
    if !ball.exhaustive {
        return Err(precondition("counting inequality needs an exhaustive ball"));
    }
    if !(ball.radius > delta) {
        return Err(precondition(format!(
            "ball radius {} must exceed delta = {delta}",
            ball.radius
        )));
    }
    let mut all = CompensatedSum::new();
    let mut inner = CompensatedSum::new();
    let count_at_delta = ball.count_within(delta);
    for (i, e) in ball.elements.iter().enumerate() {
        let v = f.value(e.displacement);
        all.add(v);
        if i < count_at_delta {
            inner.add(v);
        }
    }
    // For the elementary groups the ball already holds every element.
    let allowance = if elementary {
        T::zero()
    } else {
        f.tail_allowance(ball.radius, r)
    };
    let lhs = all.value() + allowance;
    let rhs = inner.value() + f.tail_allowance(delta, r);
    Ok(CountingReport {
        delta,
        lhs,
        rhs,
        slack: rhs - lhs,
        tail_allowance: allowance,
        count_at_delta,
        ball_count: ball.elements.len(),
    })
}

/// Builds a ball of radius `radius` and evaluates the integral counting
/// inequality on it.
pub fn counting_inequality_margin<T: Real, F: DecreasingProfile<T>>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    delta: T,
    radius: T,
    f: &F,
) -> Result<CountingReport<T>> {
    let r = model.injectivity_radius();
    if !model.kind().is_elementary() && !(delta > r / T::lit(2.0)) {
        return Err(precondition(format!(
            "counting inequality needs delta > r/2, got delta = {delta}, r = {r}"
        )));
    }
    let ball = enumerate_ball(model, z, w, radius)?;
    counting_inequality_margin_in_ball(model, &ball, delta, f)
}

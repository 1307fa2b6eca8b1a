//! Truncated Poincaré series for the weight-`2k` Bergman kernel.
//!
//! For `γ = (a, b, c, d)` put `q = (az + b) - w̄(cz + d) = (γz - w̄) j(γ, z)`.
//! Then `(4yv)^k |q|^{-2k} = cosh^{-2k}(d(γz, w)/2)`, so every term of the
//! kernel series is a real majorant term times the phase `e^{-2ik arg q}`.
//! Magnitudes are taken in log space and summed with compensation.

use num_complex::Complex;

use crate::error::{precondition, Result};
use crate::fuchsian::{enumerate_ball, OrbitBall, SurfaceModel};
use crate::hypgeo::{sinh2_half_distance, HalfPlanePoint};
use crate::scalar::{cosh_pow_neg, Real};
use crate::sum::{CompensatedSum, PhasorSum};

/// Hard limit on the number of cusp translates visited on each side of the
/// peak of the parabolic sum.
const PARABOLIC_TERM_LIMIT: i64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams<T> {
    k: u32,
    truncation_radius: T,
    tail_tolerance: T,
}

impl<T: Real> KernelParams<T> {
    pub fn new(k: u32, truncation_radius: T) -> Result<Self> {
        if k < 3 {
            return Err(precondition(format!(
                "weight k must be at least 3, got {k}"
            )));
        }
        if !(truncation_radius > T::zero()) || !truncation_radius.is_finite() {
            return Err(precondition(format!(
                "truncation radius must be positive, got {truncation_radius}"
            )));
        }
        Ok(Self {
            k,
            truncation_radius,
            tail_tolerance: T::lit(1e-12),
        })
    }

    pub fn with_tail_tolerance(mut self, tol: T) -> Self {
        self.tail_tolerance = tol;
        self
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn truncation_radius(&self) -> T {
        self.truncation_radius
    }

    /// Tolerance relative to the majorant; a larger tail only raises
    /// [`KernelEvaluation::tail_warning`].
    pub fn tail_tolerance(&self) -> T {
        self.tail_tolerance
    }
}

/// Result of one truncated kernel evaluation at `(z, w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEvaluation<T> {
    /// `‖B^k‖_hyp(z, w)` over the truncation set.
    pub norm_value: T,
    /// `(2k-1)/4π Σ cosh^{-2k}(d(γz, w)/2)` over the same set.
    pub majorant_value: T,
    /// Bound on the majorant of everything beyond the truncation radius,
    /// already scaled by `(2k-1)/4π`.
    pub tail_bound: T,
    pub truncation_radius: T,
    /// Ball elements that entered the sum (the cusp stabilizer not included).
    pub element_count: usize,
    /// Scaled majorant of the cusp stabilizer, summed in closed form.
    pub parabolic_part: T,
    pub tail_warning: bool,
}

/// `(2k - 1)/4π`.
pub fn kernel_prefactor<T: Real>(k: u32) -> T {
    T::from_int(2 * k as i64 - 1) / (T::lit(4.0) * T::PI())
}

/// `cosh^{-2k}(d(z, w)/2)`, evaluated as `exp(-k ln(1 + sinh^2(d/2)))`.
pub fn majorant_term<T: Real>(z: &HalfPlanePoint<T>, w: &HalfPlanePoint<T>, k: u32) -> T {
    (-T::from_int(k as i64) * sinh2_half_distance(z, w).ln_1p()).exp()
}

/// Magnitude and phase of `(4yv)^k (γz - w̄)^{-2k} j(γ, z)^{-2k}` for the
/// element with rows `(a, b)`, `(c, d)`.
fn series_term<T: Real>(
    entries: [T; 4],
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    k: u32,
) -> (T, T) {
    let [a, b, c, d] = entries;
    let zc = z.to_complex();
    let num = zc * a + b;
    let den = zc * c + d;
    let q = num - w.to_complex().conj() * den;
    let gz = HalfPlanePoint::new((num / den).re, z.y() / den.norm_sqr())
        .expect("y/|cz+d|^2 is positive");
    let kk = T::from_int(k as i64);
    let mag = (-kk * sinh2_half_distance(&gz, w).ln_1p()).exp();
    let phase = -(kk + kk) * q.im.atan2(q.re);
    (mag, phase)
}

/// Σ_n over the cusp translates `z + n·width` of the majorant terms and of the
/// complex series terms.
///
/// The terms are unimodal in `n`, so the sum starts at the translate nearest
/// to `w` and walks outwards on both sides. A side stops once `t_n · |n - n*|`
/// drops below `1e-18` of the partial sum; for terms decaying like `|n|^{-2k}`
/// that product dominates the neglected remainder.
fn parabolic_sums<T: Real>(
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    k: u32,
    width: T,
) -> (T, Complex<T>) {
    let peak = ((w.x() - z.x()) / width).round().to_i64().unwrap_or(0);
    let mut mags = CompensatedSum::new();
    let mut phasors = PhasorSum::new();
    let cutoff = T::lit(1e-18);
    let visit = |n: i64, mags: &mut CompensatedSum<T>, phasors: &mut PhasorSum<T>| -> T {
        let t = T::from_int(n) * width;
        let (m, phi) = series_term([T::one(), t, T::zero(), T::one()], z, w, k);
        mags.add(m);
        phasors.add_polar(m, phi);
        m
    };
    visit(peak, &mut mags, &mut phasors);
    for dir in [1i64, -1] {
        let mut step = 1i64;
        while step <= PARABOLIC_TERM_LIMIT {
            let m = visit(peak + dir * step, &mut mags, &mut phasors);
            if m * T::from_int(step) < cutoff * mags.value() {
                break;
            }
            step += 1;
        }
    }
    (mags.value(), phasors.value())
}

/// `Σ_{n ∈ Z} cosh^{-2k}(d(z + n·width, w)/2)`, unscaled.
pub fn parabolic_subsum<T: Real>(
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    k: u32,
    cusp_width: T,
) -> Result<T> {
    if k < 2 {
        return Err(precondition(format!("parabolic sum needs k >= 2, got {k}")));
    }
    if !(cusp_width > T::zero()) {
        return Err(precondition(format!(
            "cusp width must be positive, got {cusp_width}"
        )));
    }
    Ok(parabolic_sums(z, w, k, cusp_width).0)
}

/// Bound on `Σ_{d(γz, w) > δ} cosh^{-2k}(d(γz, w)/2)` for a group of
/// injectivity radius `r`:
///
/// ```text
///   1/(2 sinh²(r/4)) · [4 cosh(r/2)/((2k-2) cosh^{2k-2}(δ/2)) + 8/((2k-4) cosh^{2k-4}(δ/2))]
///     + cosh^{-2k}(δ/2) · 2 cosh(r/4) sinh δ / sinh(r/4)
/// ```
///
/// Unscaled; multiply by [`kernel_prefactor`] for kernel units.
pub fn tail_bound<T: Real>(delta: T, r: T, k: u32) -> Result<T> {
    if k < 3 {
        return Err(precondition(format!("tail bound needs k >= 3, got {k}")));
    }
    if !(r > T::zero()) || !r.is_finite() {
        return Err(precondition(format!(
            "tail bound needs a finite positive injectivity radius, got {r}"
        )));
    }
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    if !(delta > r / two) {
        return Err(precondition(format!(
            "tail bound needs delta > r/2, got delta = {delta}, r = {r}"
        )));
    }
    let kk = T::from_int(k as i64);
    let h = delta / two;
    let s4 = (r / four).sinh();
    let integral = (four * (r / two).cosh() / (two * kk - two) * cosh_pow_neg(h, two * kk - two)
        + T::lit(8.0) / (two * kk - four) * cosh_pow_neg(h, two * kk - four))
        / (two * s4 * s4);
    // cosh^{-2k}(δ/2) sinh δ = 2 tanh(δ/2) cosh^{2-2k}(δ/2)
    let boundary = two * h.tanh() * cosh_pow_neg(h, two * kk - two) * two * (r / four).cosh() / s4;
    Ok(integral + boundary)
}

/// Truncated kernel norm at `(z, w)` over the elements of `ball` within the
/// truncation radius, plus the cusp stabilizer in closed form for models with
/// a cusp.
pub fn kernel_norm<T: Real>(
    model: &SurfaceModel<T>,
    ball: &OrbitBall<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    params: &KernelParams<T>,
) -> Result<KernelEvaluation<T>> {
    let radius = params.truncation_radius;
    if !ball.is_exhaustive() {
        return Err(precondition("kernel evaluation needs an exhaustive ball"));
    }
    if ball.base_z() != *z || ball.base_w() != *w {
        return Err(precondition(format!(
            "ball is based at ({}, {}), not at ({z}, {w})",
            ball.base_z(),
            ball.base_w()
        )));
    }
    if ball.radius() + T::radius_slack() < radius {
        return Err(precondition(format!(
            "ball radius {} is smaller than the truncation radius {radius}",
            ball.radius()
        )));
    }
    let r = model.injectivity_radius();
    if !model.kind().is_elementary() && !(radius > r) {
        return Err(precondition(format!(
            "truncation radius {radius} must exceed the injectivity radius {r}"
        )));
    }

    let k = params.k;
    let scale = kernel_prefactor::<T>(k);
    let mut phasors = PhasorSum::new();
    let mut mags = CompensatedSum::new();
    let n = ball.count_within(radius);
    for e in &ball.elements()[..n] {
        let (m, phi) = series_term(e.element.entries(), z, w, k);
        mags.add(m);
        phasors.add_polar(m, phi);
    }

    let mut parabolic_part = T::zero();
    if let Some(width) = model.cusp_width() {
        let (pm, pc) = parabolic_sums(z, w, k, width);
        mags.add(pm);
        phasors.add_complex(pc);
        parabolic_part = scale * pm;
    }

    let tail = if model.kind().is_elementary() {
        T::zero()
    } else {
        scale * tail_bound(radius, r, k)?
    };
    let majorant_value = scale * mags.value();
    Ok(KernelEvaluation {
        norm_value: scale * phasors.value().norm(),
        majorant_value,
        tail_bound: tail,
        truncation_radius: radius,
        element_count: n,
        parabolic_part,
        tail_warning: tail > params.tail_tolerance * majorant_value,
    })
}

/// Enumerates the ball and evaluates the kernel in one step.
pub fn evaluate_kernel<T: Real>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    params: &KernelParams<T>,
) -> Result<KernelEvaluation<T>> {
    let ball = enumerate_ball(model, z, w, params.truncation_radius)?;
    kernel_norm(model, &ball, z, w, params)
}

/// Maximum of the diagonal kernel over sampled points of the boundary of the
/// strip `{0 ≤ x ≤ 1, y > k/2π}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripSup<T> {
    pub value: T,
    pub argmax: HalfPlanePoint<T>,
    pub samples: usize,
}

/// Sample points on the strip boundary: an odd number of evenly spaced points
/// on the bottom edge `y = k/2π` (so `x = 1/2` is always among them) and the
/// rest split between the vertical edges `x = 0` and `x = 1`, cut off at
/// `y = 5k/2π`.
pub fn strip_boundary_samples<T: Real>(k: u32, n_samples: usize) -> Result<Vec<HalfPlanePoint<T>>> {
    if n_samples < 8 {
        return Err(precondition(format!(
            "strip sampling needs at least 8 points, got {n_samples}"
        )));
    }
    let y0 = T::from_int(k as i64) / (T::lit(2.0) * T::PI());
    let y_cap = T::lit(5.0) * y0;
    let mut bottom = (n_samples / 3).max(3);
    if bottom.is_multiple_of(2) {
        bottom += 1;
    }
    let side = n_samples - bottom;
    let (left, right) = (side - side / 2, side / 2);
    let mut out = Vec::with_capacity(n_samples);
    for j in 0..bottom {
        let x = T::from_int(j as i64) / T::from_int(bottom as i64 - 1);
        out.push(HalfPlanePoint::new(x, y0)?);
    }
    for (x, count) in [(T::zero(), left), (T::one(), right)] {
        // The corner itself is already on the bottom edge.
        for j in 1..=count {
            let y = y0 + (y_cap - y0) * T::from_int(j as i64) / T::from_int(count as i64);
            out.push(HalfPlanePoint::new(x, y)?);
        }
    }
    Ok(out)
}

/// Largest `‖B^k‖_hyp(z, z)` over [`strip_boundary_samples`] for the modular
/// model. A lower bound for the supremum over the strip.
pub fn diagonal_sup_strip<T: Real>(
    model: &SurfaceModel<T>,
    k: u32,
    n_samples: usize,
    params: &KernelParams<T>,
) -> Result<StripSup<T>> {
    if !model.is_modular() {
        return Err(precondition(format!(
            "the strip supremum is defined for the modular model, not `{}`",
            model.label()
        )));
    }
    if params.k != k {
        return Err(precondition(format!(
            "params carry k = {}, expected {k}",
            params.k
        )));
    }
    let samples = strip_boundary_samples(k, n_samples)?;
    let mut best: Option<(T, HalfPlanePoint<T>)> = None;
    for z in &samples {
        let v = evaluate_kernel(model, z, z, params)?.norm_value;
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, *z));
        }
    }
    let (value, argmax) = best.expect("at least eight samples");
    Ok(StripSup {
        value,
        argmax,
        samples: samples.len(),
    })
}

//! Closed-form upper bounds for `‖B^k‖_hyp(z, w)` in terms of the weight `k`,
//! the injectivity radius `r`, the distance `δ = d(z, w)` and, for surfaces
//! with a cusp, the heights `y`, `v`; plus the uncertified growth envelopes.

use std::fmt;

use crate::error::{precondition, Result};
use crate::scalar::{cosh_pow_neg, ln_gamma, Real};

/// Distance regime of a pair relative to `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `0 ≤ δ ≤ r/2`.
    Near,
    /// `r/2 < δ < r`.
    Mid,
}

impl Regime {
    /// Classifies `delta`; `δ ≥ r` is outside both regimes.
    pub fn classify<T: Real>(delta: T, r: T) -> Result<Self> {
        if !(delta >= T::zero()) {
            return Err(precondition(format!(
                "distance must be non-negative, got {delta}"
            )));
        }
        if delta <= r / T::lit(2.0) {
            Ok(Regime::Near)
        } else if delta < r {
            Ok(Regime::Mid)
        } else {
            Err(precondition(format!(
                "distance {delta} is not below the injectivity radius {r}"
            )))
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Near => "near",
            Regime::Mid => "mid",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Regime {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "near" => Ok(Regime::Near),
            "mid" => Ok(Regime::Mid),
            other => Err(crate::error::Error::Config(format!(
                "unknown regime `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInput<T> {
    pub k: u32,
    pub r_x: T,
    pub delta: T,
    /// Heights of `z` and `w`; present exactly for surfaces with a cusp.
    pub heights: Option<(T, T)>,
    pub regime: Regime,
}

impl<T: Real> BoundInput<T> {
    pub fn compact(k: u32, r_x: T, delta: T) -> Result<Self> {
        Ok(Self {
            k,
            r_x,
            delta,
            heights: None,
            regime: Regime::classify(delta, r_x)?,
        })
    }

    pub fn noncompact(k: u32, r_x: T, delta: T, y: T, v: T) -> Result<Self> {
        if !(y > T::zero() && v > T::zero()) {
            return Err(precondition(format!(
                "heights must be positive, got y = {y}, v = {v}"
            )));
        }
        Ok(Self {
            k,
            r_x,
            delta,
            heights: Some((y, v)),
            regime: Regime::classify(delta, r_x)?,
        })
    }

    pub fn is_noncompact(&self) -> bool {
        self.heights.is_some()
    }

    fn validate(&self) -> Result<()> {
        check_k(self.k)?;
        let actual = Regime::classify(self.delta, self.r_x)?;
        if actual != self.regime {
            return Err(precondition(format!(
                "delta = {} lies in the {actual} regime, not {}",
                self.delta, self.regime
            )));
        }
        Ok(())
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 3 {
        Err(precondition(format!("bounds need k >= 3, got {k}")))
    } else {
        Ok(())
    }
}

fn prefactor<T: Real>(k: u32) -> T {
    T::from_int(2 * k as i64 - 1) / (T::lit(4.0) * T::PI())
}

/// Bound for `r/2 < δ < r`:
///
/// ```text
///   (2k-1)/4π · [cosh^{-2k}((r-δ)/2) + 32 cosh^{-(2k-4)}(r/4)]
///     + (2k-1)/(π (k-2) sinh²(r/4)) · cosh^{-(2k-4)}(r/4)
/// ```
pub fn constant_c1<T: Real>(k: u32, r: T, delta: T) -> Result<T> {
    check_k(k)?;
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    if !(delta > r / two && delta < r) {
        return Err(precondition(format!(
            "c1 needs r/2 < delta < r, got delta = {delta}, r = {r}"
        )));
    }
    let kk = T::from_int(k as i64);
    let p = prefactor::<T>(k);
    let c4 = cosh_pow_neg(r / four, two * kk - four);
    let s4 = (r / four).sinh();
    let first = p * (cosh_pow_neg((r - delta) / two, two * kk) + T::lit(32.0) * c4);
    let second = (two * kk - T::one()) / (T::PI() * (kk - two) * s4 * s4) * c4;
    Ok(first + second)
}

/// Bound for `0 ≤ δ ≤ r/2`:
///
/// ```text
///   (2k-1)/4π · [2 cosh^{-2k}(δ/2) + 16 cosh^{-(2k-4)}(r/4) + 8 cosh^{-(2k-3)}(r/2)]
///     + (2k-1)/(2π sinh²(r/4)) · [1/((2k-2) cosh^{2k-3}(r/2)) + 1/((k-2) cosh^{2k-4}(r/2))]
/// ```
///
/// An infinite `r` (a group without non-trivial elements outside the cusp
/// stabilizer) leaves only the `δ` term.
pub fn constant_c2<T: Real>(k: u32, r: T, delta: T) -> Result<T> {
    check_k(k)?;
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    if !(delta >= T::zero() && delta <= r / two) {
        return Err(precondition(format!(
            "c2 needs 0 <= delta <= r/2, got delta = {delta}, r = {r}"
        )));
    }
    let kk = T::from_int(k as i64);
    let p = prefactor::<T>(k);
    let lead = p * two * cosh_pow_neg(delta / two, two * kk);
    if r.is_infinite() {
        return Ok(lead);
    }
    let s4 = (r / four).sinh();
    let bracket = T::lit(16.0) * cosh_pow_neg(r / four, two * kk - four)
        + T::lit(8.0) * cosh_pow_neg(r / two, two * kk - T::lit(3.0));
    let second = (two * kk - T::one()) / (two * T::PI() * s4 * s4)
        * (cosh_pow_neg(r / two, two * kk - T::lit(3.0)) / (two * kk - two)
            + cosh_pow_neg(r / two, two * kk - four) / (kk - two));
    Ok(lead + p * bracket + second)
}

/// The cusp contribution added to the compact bound:
///
/// ```text
///   (2k-1)/(4π cosh^{2k}(δ/2)) + (4yv)^k/(y+v)^{2k-1} · (2k-1) Γ(k-1/2) / (2√π Γ(k))
/// ```
pub fn noncompact_extra<T: Real>(k: u32, delta: T, y: T, v: T) -> Result<T> {
    check_k(k)?;
    if !(y > T::zero() && v > T::zero()) {
        return Err(precondition(format!(
            "heights must be positive, got y = {y}, v = {v}"
        )));
    }
    let two = T::lit(2.0);
    let kk = T::from_int(k as i64);
    let first = prefactor::<T>(k) * cosh_pow_neg(delta / two, two * kk);
    let half = T::lit(0.5);
    let ln_second = kk * (T::lit(4.0) * y * v).ln() - (two * kk - T::one()) * (y + v).ln()
        + (two * kk - T::one()).ln()
        + ln_gamma(kk - half)
        - ln_gamma(kk)
        - (two * T::PI().sqrt()).ln();
    Ok(first + ln_second.exp())
}

/// The certified bound for one input.
pub fn theorem_bound<T: Real>(input: &BoundInput<T>) -> Result<T> {
    input.validate()?;
    let base = match input.regime {
        Regime::Mid => constant_c1(input.k, input.r_x, input.delta)?,
        Regime::Near => constant_c2(input.k, input.r_x, input.delta)?,
    };
    match input.heights {
        None => Ok(base),
        Some((y, v)) => Ok(base + noncompact_extra(input.k, input.delta, y, v)?),
    }
}

/// A bound compared against a measured value (kernel norm plus tail).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport<T> {
    pub bound_value: T,
    pub measured_value: T,
    pub margin: T,
    pub passed: bool,
}

impl<T: Real> BoundReport<T> {
    pub fn new(bound_value: T, measured_value: T) -> Self {
        let margin = bound_value - measured_value;
        Self {
            bound_value,
            measured_value,
            margin,
            passed: margin >= T::zero(),
        }
    }
}

/// Evaluates the bound and compares it with `norm + tail`.
pub fn check_bound<T: Real>(input: &BoundInput<T>, norm: T, tail: T) -> Result<BoundReport<T>> {
    Ok(BoundReport::new(theorem_bound(input)?, norm + tail))
}

/// Growth shapes without their constants; only ever used for ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Envelope {
    /// `k / cosh^{2k}((r - δ)/2)`.
    RemarkMid,
    /// `k / cosh^{2k}(δ/2)`.
    RemarkNear,
    /// `k / cosh^{2k-4}((δ - r)/2)`, meant for `δ ≥ r`.
    PriorAm1,
    /// `k`.
    DiagCompact,
    /// `k^{3/2}`.
    DiagNoncompact,
}

pub fn envelope<T: Real>(k: u32, delta: T, r: T, which: Envelope) -> T {
    let two = T::lit(2.0);
    let kk = T::from_int(k as i64);
    match which {
        Envelope::RemarkMid => kk * cosh_pow_neg((r - delta) / two, two * kk),
        Envelope::RemarkNear => kk * cosh_pow_neg(delta / two, two * kk),
        Envelope::PriorAm1 => kk * cosh_pow_neg((delta - r) / two, two * kk - T::lit(4.0)),
        Envelope::DiagCompact => kk,
        Envelope::DiagNoncompact => kk * kk.sqrt(),
    }
}

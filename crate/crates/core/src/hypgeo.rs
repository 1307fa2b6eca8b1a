//! Upper half-plane geometry: Möbius elements of PSL(2, R), the automorphy
//! cocycle `j(g, z) = cz + d`, and hyperbolic distance.
//!
//! Distances are routed through `cosh^2(d/2)` (and its complement
//! `sinh^2(d/2)`) because the kernel consumes those quantities directly.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point `x + iy` with `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint<T> {
    x: T,
    y: T,
}

impl<T: Real> HalfPlanePoint<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if !(y > T::zero()) || !y.is_finite() || !x.is_finite() {
            return Err(Error::NotInHalfPlane(y.as_f64()));
        }
        Ok(Self { x, y })
    }

    /// The point `i`.
    pub fn i() -> Self {
        Self {
            x: T::zero(),
            y: T::one(),
        }
    }

    pub fn from_complex(z: Complex<T>) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    #[inline]
    pub fn x(&self) -> T {
        self.x
    }

    #[inline]
    pub fn y(&self) -> T {
        self.y
    }

    #[inline]
    pub fn to_complex(&self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    /// Horizontal translate `z + t`.
    pub fn translate(&self, t: T) -> Self {
        Self {
            x: self.x + t,
            y: self.y,
        }
    }

    /// Point at hyperbolic distance `dist` from `self` in direction `angle`
    /// (measured in the tangent plane at `self`, counter-clockwise from the
    /// positive real direction).
    pub fn geodesic_circle_point(&self, dist: T, angle: T) -> Self {
        // Disk point of radius tanh(d/2) mapped by the Cayley transform to i,
        // then by the affine map i -> self.
        let half = dist / T::lit(2.0);
        let rho = half.tanh();
        // Rotate by -pi/2 so angle 0 points along +x after the Cayley map.
        let theta = angle - T::FRAC_PI_2();
        let zeta = Complex::new(rho * theta.cos(), rho * theta.sin());
        let one = Complex::new(T::one(), T::zero());
        let cayley = Complex::<T>::i() * (one + zeta) / (one - zeta);
        Self {
            x: self.x + self.y * cayley.re,
            y: self.y * cayley.im,
        }
    }
}

impl<T: Real> fmt::Display for HalfPlanePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.x, self.y)
    }
}

/// An element of PSL(2, R), stored as the sign-normalized unit-determinant
/// representative: `c > 0`, or `c = 0` and `a > 0`.
///
/// "c = 0" is decided with the scalar's dedup quantum so that rounding noise in
/// composed products cannot flip the representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusElement<T> {
    a: T,
    b: T,
    c: T,
    d: T,
}

impl<T: Real> MoebiusElement<T> {
    /// Builds the element from any matrix with positive determinant, rescaling
    /// it to determinant one.
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > T::zero()) || !det.is_finite() {
            return Err(Error::Degenerate(det.as_f64()));
        }
        let s = det.sqrt();
        Ok(Self::normalized(a / s, b / s, c / s, d / s))
    }

    /// Stored entries taken verbatim (only the sign is normalized); used when
    /// reloading elements that were already unit-determinant.
    pub(crate) fn from_stored(a: T, b: T, c: T, d: T) -> Self {
        Self::normalized(a, b, c, d)
    }

    pub fn identity() -> Self {
        Self {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    /// `z -> z + t`.
    pub fn translation(t: T) -> Self {
        Self {
            a: T::one(),
            b: t,
            c: T::zero(),
            d: T::one(),
        }
    }

    /// `z -> -1/z`.
    pub fn inversion() -> Self {
        Self {
            a: T::zero(),
            b: -T::one(),
            c: T::one(),
            d: T::zero(),
        }
    }

    fn normalized(a: T, b: T, c: T, d: T) -> Self {
        let flip = if c.abs() > T::dedup_quantum() {
            c < T::zero()
        } else {
            a < T::zero()
        };
        if flip {
            Self {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            Self { a, b, c, d }
        }
    }

    #[inline]
    pub fn entries(&self) -> [T; 4] {
        [self.a, self.b, self.c, self.d]
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }
    #[inline]
    pub fn b(&self) -> T {
        self.b
    }
    #[inline]
    pub fn c(&self) -> T {
        self.c
    }
    #[inline]
    pub fn d(&self) -> T {
        self.d
    }

    #[inline]
    pub fn determinant(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    /// `(a, b, c, d) -> (d, -b, -c, a)`, renormalized.
    pub fn inverse(&self) -> Self {
        Self::normalized(self.d, -self.b, -self.c, self.a)
    }

    /// Group law `self * other`, so `(g.compose(h)).apply(z) == g.apply(h.apply(z))`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        let (ad, bc) = (a * d, b * c);
        let det = ad - bc;
        // The determinant of a large matrix carries rounding noise of order
        // eps·(|ad| + |bc|); rescaling by that noise would move the entries
        // further than it corrects them, so drift is measured relative to it.
        if (det - T::one()).abs() > T::det_drift_tolerance() * (ad.abs() + bc.abs()).max(T::one()) {
            let s = det.sqrt();
            Self::normalized(a / s, b / s, c / s, d / s)
        } else {
            Self::normalized(a, b, c, d)
        }
    }

    /// `|cz + d|^2`, the squared modulus of the cocycle.
    #[inline]
    pub fn cocycle_norm_sqr(&self, z: &HalfPlanePoint<T>) -> T {
        let re = self.c * z.x + self.d;
        let im = self.c * z.y;
        re * re + im * im
    }

    /// `j(g, z) = cz + d` for the sign-normalized representative.
    #[inline]
    pub fn cocycle(&self, z: &HalfPlanePoint<T>) -> Complex<T> {
        Complex::new(self.c * z.x + self.d, self.c * z.y)
    }

    /// `gz = (az + b)/(cz + d)`. The imaginary part is `y / |cz + d|^2` with
    /// the same `|cz + d|^2` that [`Self::cocycle_norm_sqr`] returns.
    pub fn apply(&self, z: &HalfPlanePoint<T>) -> HalfPlanePoint<T> {
        let n = self.cocycle_norm_sqr(z);
        let abs2 = z.x * z.x + z.y * z.y;
        let re =
            (self.a * self.c * abs2 + (self.a * self.d + self.b * self.c) * z.x + self.b * self.d)
                / n;
        HalfPlanePoint { x: re, y: z.y / n }
    }

    /// Largest absolute deviation from `other`, entry by entry.
    pub fn max_entry_distance(&self, other: &Self) -> T {
        self.entries()
            .iter()
            .zip(other.entries().iter())
            .map(|(p, q)| (*p - *q).abs())
            .fold(T::zero(), T::max)
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.max_entry_distance(&Self::identity()) <= tol
    }

    /// True when the element fixes `i∞`, i.e. is a pure translation.
    pub fn fixes_infinity(&self) -> bool {
        self.c.abs() <= T::dedup_quantum()
    }

    pub fn cast<U: Real>(&self) -> MoebiusElement<U> {
        MoebiusElement {
            a: U::lit(self.a.as_f64()),
            b: U::lit(self.b.as_f64()),
            c: U::lit(self.c.as_f64()),
            d: U::lit(self.d.as_f64()),
        }
    }
}

impl<T: Real> fmt::Display for MoebiusElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// Composition, see [`MoebiusElement::compose`].
pub fn mobius_compose<T: Real>(g: &MoebiusElement<T>, h: &MoebiusElement<T>) -> MoebiusElement<T> {
    g.compose(h)
}

pub fn mobius_apply<T: Real>(g: &MoebiusElement<T>, z: &HalfPlanePoint<T>) -> HalfPlanePoint<T> {
    g.apply(z)
}

pub fn cocycle_j<T: Real>(g: &MoebiusElement<T>, z: &HalfPlanePoint<T>) -> Complex<T> {
    g.cocycle(z)
}

/// Numerator and denominator of `cosh^2(d(z, w)/2)`:
/// `((x-u)^2 + (y+v)^2, 4yv)`.
#[inline]
pub fn cosh2_half_distance_parts<T: Real>(z: &HalfPlanePoint<T>, w: &HalfPlanePoint<T>) -> (T, T) {
    let dx = z.x - w.x;
    let sy = z.y + w.y;
    (dx * dx + sy * sy, T::lit(4.0) * z.y * w.y)
}

/// `cosh^2(d(z, w)/2) = |z - w̄|^2 / (4yv)`. Always at least one.
#[inline]
pub fn cosh2_half_distance<T: Real>(z: &HalfPlanePoint<T>, w: &HalfPlanePoint<T>) -> T {
    let (num, den) = cosh2_half_distance_parts(z, w);
    num / den
}

/// `sinh^2(d(z, w)/2) = |z - w|^2 / (4yv)`, accurate for nearby points.
#[inline]
pub fn sinh2_half_distance<T: Real>(z: &HalfPlanePoint<T>, w: &HalfPlanePoint<T>) -> T {
    let dx = z.x - w.x;
    let dy = z.y - w.y;
    (dx * dx + dy * dy) / (T::lit(4.0) * z.y * w.y)
}

/// Hyperbolic distance, `2 arccosh sqrt(cosh^2(d/2))`, evaluated through the
/// equivalent `2 arcsinh sqrt(sinh^2(d/2))` so small distances keep full
/// relative precision.
#[inline]
pub fn hyp_distance<T: Real>(z: &HalfPlanePoint<T>, w: &HalfPlanePoint<T>) -> T {
    T::lit(2.0) * sinh2_half_distance(z, w).sqrt().asinh()
}

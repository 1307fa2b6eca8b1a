//! Concrete Fuchsian groups, orbit balls `{γ : d(γz, w) ≤ R}`, the orbit
//! counting function, and injectivity-radius estimates.
//!
//! Four base models are available:
//!
//! * `trivial`: the group `{Id}`.
//! * `parabolic`: the cyclic group generated by `z -> z + 1`.
//! * `modular`: PSL(2, Z) with generators `z -> z + 1` and `z -> -1/z`, cusp at
//!   `i∞` of width one.
//! * `bolza`: the genus-two surface group of the regular octagon with interior
//!   angles `π/4`. In the disk model its side pairings are the conjugates of the
//!   translation `[[α, β], [β, α]]`, `α = 1 + √2`, `β = √(2 + 2√2)`, by the
//!   rotations through `jπ/4`, `j = 0..7`. They are carried to the half-plane by
//!   the Cayley map `ζ -> i(1 + ζ)/(1 - ζ)`, so the octagon is centred at `i`.
//!   To fifteen digits the half-plane generators `(a, b, c, d)` are
//!
//!   | j | a | b | c | d |
//!   |---|---|---|---|---|
//!   | 0 | 4.61158178930872 | 0 | 0 | 0.216845335437475 |
//!   | 1 | -3.96798753640313 | 1.55377397403004 | 1.55377397403004 | -0.860439588343058 |
//!   | 2 | -2.41421356237310 | 2.19736822693562 | 2.19736822693562 | -2.41421356237310 |
//!   | 3 | -0.860439588343058 | 1.55377397403004 | 1.55377397403004 | -3.96798753640313 |
//!   | 4 | 0.216845335437475 | 0 | 0 | 4.61158178930872 |
//!   | 5 | 0.860439588343058 | 1.55377397403004 | 1.55377397403004 | 3.96798753640313 |
//!   | 6 | 2.41421356237310 | 2.19736822693562 | 2.19736822693562 | 2.41421356237310 |
//!   | 7 | 3.96798753640313 | 1.55377397403004 | 1.55377397403004 | 0.860439588343058 |
//!
//!   Generator `j + 4` is the inverse of generator `j`. Each moves `i` by the
//!   systole `2 arccosh(1 + √2) ≈ 3.0571418`.
//!
//! The principal congruence subgroup Γ(2) is derived from the modular model
//! by [`congruence_cover`].
//!
//! For models with a cusp, balls and counts range over `Γ \ Γ_∞` (all elements
//! that do not fix `i∞`); the stabilizer's contribution is summed in closed
//! form by the kernel module.

mod ball;
mod cache;
mod counting;
mod lattice;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{precondition, Error, Result};
use crate::hypgeo::{hyp_distance, HalfPlanePoint, MoebiusElement};
use crate::scalar::Real;

pub use ball::{enumerate_ball, enumerate_by_words, BallElement, OrbitBall};
pub use counting::{
    counting_function, counting_inequality_margin, counting_inequality_margin_in_ball,
    jl_boundary_weight, jl_count_bound, jl_integral_weight, numeric_tail_allowance,
    CoshPowerProfile, CountingReport, DecreasingProfile,
};
pub use lattice::enumerate_modular_lattice;

/// Default bound on the number of group elements a single enumeration may visit.
pub const DEFAULT_ELEMENT_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Compact,
    Noncompact,
    ElementaryTrivial,
    ElementaryParabolic,
}

impl ModelKind {
    pub fn is_elementary(self) -> bool {
        matches!(
            self,
            ModelKind::ElementaryTrivial | ModelKind::ElementaryParabolic
        )
    }
}

/// How exhaustive balls are produced for a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    /// Breadth-first search over words in the generators.
    Words,
    /// Direct enumeration of integer matrices in the principal congruence
    /// subgroup of the given level (level 1 is PSL(2, Z)).
    Arithmetic { level: u32 },
}

/// Name of one of the built-in groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSelector {
    Trivial,
    Parabolic,
    Modular,
    Bolza,
}

impl FromStr for ModelSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trivial" => Ok(Self::Trivial),
            "parabolic" => Ok(Self::Parabolic),
            "modular" => Ok(Self::Modular),
            "bolza" => Ok(Self::Bolza),
            other => Err(Error::Config(format!(
                "unknown model `{other}` (expected trivial, parabolic, modular or bolza)"
            ))),
        }
    }
}

impl fmt::Display for ModelSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Trivial => "trivial",
            Self::Parabolic => "parabolic",
            Self::Modular => "modular",
            Self::Bolza => "bolza",
        })
    }
}

/// A Fuchsian group presentation together with the data the kernel and bound
/// code needs from it.
#[derive(Debug, Clone)]
pub struct SurfaceModel<T> {
    label: String,
    kind: ModelKind,
    generators: Vec<MoebiusElement<T>>,
    cusp_width: Option<T>,
    injectivity_radius: T,
    enumeration: Enumeration,
    sample_points: Vec<HalfPlanePoint<T>>,
    element_cap: usize,
}

impl<T: Real> SurfaceModel<T> {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Generators, closed under the inverses listed alongside them.
    pub fn generators(&self) -> &[MoebiusElement<T>] {
        &self.generators
    }

    /// Width of the cusp at `i∞`, if the model has one.
    pub fn cusp_width(&self) -> Option<T> {
        self.cusp_width
    }

    /// `r_X`, or `+∞` for the elementary models.
    pub fn injectivity_radius(&self) -> T {
        self.injectivity_radius
    }

    pub fn enumeration(&self) -> Enumeration {
        self.enumeration
    }

    /// Base points the model's `r_X` was estimated on (empty when `r_X` is
    /// exact). Sweeps draw their base points from this list.
    pub fn sample_points(&self) -> &[HalfPlanePoint<T>] {
        &self.sample_points
    }

    pub fn element_cap(&self) -> usize {
        self.element_cap
    }

    pub fn has_cusp(&self) -> bool {
        self.cusp_width.is_some()
    }

    /// True when `g` lies in the stabilizer of the cusp at `i∞` (never for
    /// models without a cusp).
    pub fn in_cusp_stabilizer(&self, g: &MoebiusElement<T>) -> bool {
        self.has_cusp() && g.fixes_infinity()
    }

    pub fn is_modular(&self) -> bool {
        self.enumeration == Enumeration::Arithmetic { level: 1 }
    }

    pub fn with_element_cap(mut self, cap: usize) -> Self {
        self.element_cap = cap;
        self
    }

    pub fn with_injectivity_radius(mut self, r: T) -> Result<Self> {
        if !(r > T::zero()) {
            return Err(precondition(format!(
                "injectivity radius must be positive, got {r}"
            )));
        }
        self.injectivity_radius = r;
        Ok(self)
    }

    pub fn with_sample_points(mut self, points: Vec<HalfPlanePoint<T>>) -> Self {
        self.sample_points = points;
        self
    }

    /// `max_g d(z, gz)` over the generators.
    pub fn max_generator_displacement(&self, z: &HalfPlanePoint<T>) -> T {
        self.generators
            .iter()
            .map(|g| hyp_distance(z, &g.apply(z)))
            .fold(T::zero(), T::max)
    }
}

/// Base points used to estimate the modular `r_X`; all lie in the standard
/// fundamental domain away from the elliptic points `i` and `e^{iπ/3}`.
pub fn modular_sample_points<T: Real>() -> Vec<HalfPlanePoint<T>> {
    vec![
        HalfPlanePoint::new(T::zero(), T::lit(2.0)).expect("valid"),
        HalfPlanePoint::new(T::lit(0.5), T::lit(2.0)).expect("valid"),
        HalfPlanePoint::new(T::zero(), T::E()).expect("valid"),
    ]
}

/// Base points inside the central Bolza octagon (its inradius is
/// `arccosh(cot(π/8)) ≈ 1.528` around `i`).
pub fn bolza_sample_points<T: Real>() -> Vec<HalfPlanePoint<T>> {
    [
        (0.0, 1.0),
        (0.15, 1.1),
        (-0.2, 0.85),
        (0.05, 1.3),
        (-0.1, 1.05),
    ]
    .iter()
    .map(|&(x, y)| HalfPlanePoint::new(T::lit(x), T::lit(y)).expect("valid"))
    .collect()
}

/// The Bolza systole `2 arccosh(1 + √2)`.
pub fn bolza_systole<T: Real>() -> T {
    T::lit(2.0) * (T::one() + T::SQRT_2()).acosh()
}

fn bolza_generators<T: Real>() -> Vec<MoebiusElement<T>> {
    let one = T::one();
    let alpha = one + T::SQRT_2();
    let beta = (T::lit(2.0) + T::lit(2.0) * T::SQRT_2()).sqrt();
    let i = Complex::<T>::i();
    let c = |re: T| Complex::new(re, T::zero());
    // Cayley matrix [[i, i], [-1, 1]] and its inverse (1/2i)[[1, -i], [1, i]].
    let cay = [[i, i], [c(-one), c(one)]];
    let half_inv = Complex::new(T::zero(), -T::lit(0.5));
    let cay_inv = [[half_inv, half_inv * (-i)], [half_inv, half_inv * i]];
    let mul = |p: [[Complex<T>; 2]; 2], q: [[Complex<T>; 2]; 2]| {
        let mut r = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for (row, pr) in r.iter_mut().zip(p.iter()) {
            for (col, cell) in row.iter_mut().enumerate() {
                *cell = pr[0] * q[0][col] + pr[1] * q[1][col];
            }
        }
        r
    };
    (0..8)
        .map(|j| {
            let theta = T::from_int(j) * T::FRAC_PI_4();
            let rot = Complex::new(theta.cos(), theta.sin());
            let g = [[c(alpha), rot * beta], [rot.conj() * beta, c(alpha)]];
            let m = mul(mul(cay, g), cay_inv);
            MoebiusElement::new(m[0][0].re, m[0][1].re, m[1][0].re, m[1][1].re)
                .expect("conjugate of an SU(1,1) element is in SL(2,R)")
        })
        .collect()
}

/// Builds one of the documented models.
pub fn build_surface_model<T: Real>(selector: ModelSelector) -> Result<SurfaceModel<T>> {
    let model = match selector {
        ModelSelector::Trivial => SurfaceModel {
            label: "trivial".into(),
            kind: ModelKind::ElementaryTrivial,
            generators: Vec::new(),
            cusp_width: None,
            injectivity_radius: T::infinity(),
            enumeration: Enumeration::Words,
            sample_points: Vec::new(),
            element_cap: DEFAULT_ELEMENT_CAP,
        },
        ModelSelector::Parabolic => SurfaceModel {
            label: "parabolic".into(),
            kind: ModelKind::ElementaryParabolic,
            generators: vec![
                MoebiusElement::translation(T::one()),
                MoebiusElement::translation(-T::one()),
            ],
            cusp_width: Some(T::one()),
            injectivity_radius: T::infinity(),
            enumeration: Enumeration::Words,
            sample_points: Vec::new(),
            element_cap: DEFAULT_ELEMENT_CAP,
        },
        ModelSelector::Modular => {
            let mut model = SurfaceModel {
                label: "modular".into(),
                kind: ModelKind::Noncompact,
                generators: vec![
                    MoebiusElement::translation(T::one()),
                    MoebiusElement::translation(-T::one()),
                    MoebiusElement::inversion(),
                ],
                cusp_width: Some(T::one()),
                injectivity_radius: T::infinity(),
                enumeration: Enumeration::Arithmetic { level: 1 },
                sample_points: modular_sample_points(),
                element_cap: DEFAULT_ELEMENT_CAP,
            };
            model.injectivity_radius = estimate_injectivity_radius(&model, &model.sample_points)?;
            model
        }
        ModelSelector::Bolza => SurfaceModel {
            label: "bolza".into(),
            kind: ModelKind::Compact,
            generators: bolza_generators(),
            cusp_width: None,
            injectivity_radius: bolza_systole(),
            enumeration: Enumeration::Words,
            sample_points: bolza_sample_points(),
            element_cap: DEFAULT_ELEMENT_CAP,
        },
    };
    Ok(model)
}

/// Convenience wrapper parsing the selector from text.
pub fn build_named_model<T: Real>(name: &str) -> Result<SurfaceModel<T>> {
    if name.trim().eq_ignore_ascii_case("gamma2") {
        let modular = build_surface_model(ModelSelector::Modular)?;
        return congruence_cover(&modular, 2);
    }
    build_surface_model(name.parse()?)
}

/// Upper bound on `r_X`: the least displacement `d(z, γz)` over the sample
/// points and all non-identity `γ` (outside the cusp stabilizer for models
/// with a cusp). Returns `+∞` when no such `γ` exists.
pub fn estimate_injectivity_radius<T: Real>(
    model: &SurfaceModel<T>,
    sample_points: &[HalfPlanePoint<T>],
) -> Result<T> {
    if model.kind.is_elementary() {
        return Ok(T::infinity());
    }
    if sample_points.is_empty() {
        return Err(precondition(
            "injectivity radius estimate needs at least one sample point",
        ));
    }
    let one = T::one();
    let mut overall = T::infinity();
    for z in sample_points {
        let mut best = model
            .generators
            .iter()
            .filter(|g| !model.in_cusp_stabilizer(g) && !g.is_identity(T::dedup_quantum()))
            .map(|g| hyp_distance(z, &g.apply(z)))
            .fold(T::infinity(), T::min);
        let mut radius = if best.is_finite() { best + one } else { one };
        loop {
            let ball = enumerate_ball(model, z, z, radius)?;
            let found = ball
                .elements()
                .iter()
                .filter(|e| !e.element.is_identity(T::dedup_quantum()))
                .map(|e| e.displacement)
                .fold(T::infinity(), T::min);
            if found < best {
                best = found;
                radius = best + one;
                continue;
            }
            if best.is_finite() {
                break;
            }
            // No candidate yet: widen the search.
            radius = radius + radius;
            if radius > T::lit(64.0) {
                break;
            }
        }
        overall = overall.min(best);
    }
    Ok(overall)
}

/// The principal congruence subgroup Γ(2) of the modular model, with its
/// `r_X` re-estimated on the modular sample points.
pub fn congruence_cover<T: Real>(model: &SurfaceModel<T>, level: u32) -> Result<SurfaceModel<T>> {
    if !model.is_modular() {
        return Err(Error::Config(format!(
            "congruence covers are only built from the modular model, not `{}`",
            model.label
        )));
    }
    if level != 2 {
        return Err(Error::Config(format!(
            "unsupported congruence level {level} (only 2 is available)"
        )));
    }
    let two = T::lit(2.0);
    let lower = MoebiusElement::new(T::one(), T::zero(), two, T::one())?;
    let mut cover = SurfaceModel {
        label: "gamma2".into(),
        kind: ModelKind::Noncompact,
        generators: vec![
            MoebiusElement::translation(two),
            MoebiusElement::translation(-two),
            lower,
            lower.inverse(),
        ],
        cusp_width: Some(two),
        injectivity_radius: T::infinity(),
        enumeration: Enumeration::Arithmetic { level },
        sample_points: model.sample_points.clone(),
        element_cap: model.element_cap,
    };
    cover.injectivity_radius = estimate_injectivity_radius(&cover, &cover.sample_points)?;
    Ok(cover)
}

/// Reduction of an integral element modulo `level` is the identity (up to
/// sign, which is invisible modulo 2).
pub fn is_congruent_to_identity<T: Real>(g: &MoebiusElement<T>, level: u32) -> bool {
    let l = level as i64;
    let [a, b, c, d] = g.entries().map(|e| e.round().to_i64().unwrap_or(i64::MAX));
    let m = |v: i64| v.rem_euclid(l);
    (m(a) == 1 % l && m(b) == 0 && m(c) == 0 && m(d) == 1 % l)
        || (m(-a) == 1 % l && m(-b) == 0 && m(-c) == 0 && m(-d) == 1 % l)
}

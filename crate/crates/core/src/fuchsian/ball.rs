use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use crate::error::{precondition, Error, Result};
use crate::hypgeo::{hyp_distance, HalfPlanePoint, MoebiusElement};
use crate::scalar::Real;

use super::lattice::enumerate_modular_lattice;
use super::{Enumeration, ModelKind, SurfaceModel};

/// One group element of a ball together with `d(γz, w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallElement<T> {
    pub element: MoebiusElement<T>,
    pub displacement: T,
}

/// The elements `γ` with `d(γz, w) ≤ radius`, sorted by displacement.
///
/// For models with a cusp the stabilizer `Γ_∞` (including the identity) is
/// left out.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitBall<T> {
    pub(super) label: String,
    pub(super) base_z: HalfPlanePoint<T>,
    pub(super) base_w: HalfPlanePoint<T>,
    pub(super) radius: T,
    pub(super) elements: Vec<BallElement<T>>,
    pub(super) exhaustive: bool,
}

impl<T: Real> OrbitBall<T> {
    pub(super) fn from_unsorted(
        label: &str,
        base_z: HalfPlanePoint<T>,
        base_w: HalfPlanePoint<T>,
        radius: T,
        mut elements: Vec<BallElement<T>>,
        exhaustive: bool,
    ) -> Self {
        elements.sort_by(compare_elements);
        Self {
            label: label.to_owned(),
            base_z,
            base_w,
            radius,
            elements,
            exhaustive,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base_z(&self) -> HalfPlanePoint<T> {
        self.base_z
    }

    pub fn base_w(&self) -> HalfPlanePoint<T> {
        self.base_w
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn elements(&self) -> &[BallElement<T>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// Number of stored elements with displacement at most `rho`.
    pub fn count_within(&self, rho: T) -> usize {
        self.elements.partition_point(|e| e.displacement <= rho)
    }

    /// The sub-ball of the given radius.
    pub fn restrict(&self, radius: T) -> Result<Self> {
        if radius > self.radius + T::radius_slack() {
            return Err(precondition(format!(
                "cannot restrict a ball of radius {} to the larger radius {radius}",
                self.radius
            )));
        }
        let n = self.count_within(radius);
        Ok(Self {
            label: self.label.clone(),
            base_z: self.base_z,
            base_w: self.base_w,
            radius,
            elements: self.elements[..n].to_vec(),
            exhaustive: self.exhaustive,
        })
    }
}

fn compare_elements<T: Real>(p: &BallElement<T>, q: &BallElement<T>) -> Ordering {
    let ord = |x: T, y: T| x.partial_cmp(&y).unwrap_or(Ordering::Equal);
    ord(p.displacement, q.displacement).then_with(|| {
        p.element
            .entries()
            .iter()
            .zip(q.element.entries().iter())
            .map(|(x, y)| ord(*x, *y))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    })
}

/// Set of group elements keyed by their entries on the dedup grid.
///
/// The grid spacing is the dedup quantum times `2^e`, where `2^e ≤ max|entry|
/// < 2^{e+1}`: words reaching the same element along different paths agree to
/// a relative, not an absolute, precision. An entry within a tenth of a cell of
/// a rounding boundary is also looked up in the neighbouring cell, and an
/// element whose largest entry is close to a power of two is also looked up on
/// the neighbouring scale, so rounding noise cannot split one element into two
/// keys.
pub(super) struct ElementSet<T> {
    keys: HashSet<(i32, [i64; 4])>,
    quantum: T,
}

type Cells = [(i64, Option<i64>); 4];

impl<T: Real> ElementSet<T> {
    pub(super) fn new() -> Self {
        Self {
            keys: HashSet::new(),
            quantum: T::dedup_quantum(),
        }
    }

    fn scales(&self, g: &MoebiusElement<T>) -> (i32, Option<i32>) {
        let m = g.entries().iter().fold(T::one(), |m, e| m.max(e.abs()));
        let l = m.log2();
        let e = l.floor();
        let frac = l - e;
        let e = e.to_i32().unwrap_or(0);
        let alt = if frac < T::lit(1e-6) && e > 0 {
            Some(e - 1)
        } else if frac > T::one() - T::lit(1e-6) {
            Some(e + 1)
        } else {
            None
        };
        (e, alt)
    }

    fn cells(&self, g: &MoebiusElement<T>, scale: i32) -> Cells {
        let limit = T::lit(9.0e18);
        let q = self.quantum * T::lit(2.0).powi(scale);
        g.entries().map(|e| {
            let s = (e / q).max(-limit).min(limit);
            let r = s.round();
            let frac = s - r;
            let primary = r.to_i64().unwrap_or(0);
            let alt = if frac > T::lit(0.4) {
                Some(primary + 1)
            } else if frac < T::lit(-0.4) {
                Some(primary - 1)
            } else {
                None
            };
            (primary, alt)
        })
    }

    fn contains_near(&self, scale: i32, cells: &Cells) -> bool {
        let mut probe = [0i64; 4];
        for mask in 0u8..16 {
            let mut valid = true;
            for (i, (p, alt)) in cells.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    match alt {
                        Some(a) => probe[i] = *a,
                        None => {
                            valid = false;
                            break;
                        }
                    }
                } else {
                    probe[i] = *p;
                }
            }
            if valid && self.keys.contains(&(scale, probe)) {
                return true;
            }
        }
        false
    }

    /// Inserts `g`; returns `false` if an equal element was already present.
    pub(super) fn insert(&mut self, g: &MoebiusElement<T>) -> bool {
        let (scale, alt_scale) = self.scales(g);
        let cells = self.cells(g, scale);
        if self.contains_near(scale, &cells) {
            return false;
        }
        if let Some(alt) = alt_scale {
            if self.contains_near(alt, &self.cells(g, alt)) {
                return false;
            }
        }
        self.keys.insert((scale, cells.map(|c| c.0)));
        true
    }

    pub(super) fn len(&self) -> usize {
        self.keys.len()
    }
}

/// Exhaustive ball of radius `radius` around `(z, w)` for `model`.
///
/// Word-generated models use [`enumerate_by_words`]; the arithmetic models
/// enumerate integer matrices directly. The elementary parabolic group has
/// `Γ \ Γ_∞ = ∅`, so its ball is empty.
pub fn enumerate_ball<T: Real>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    radius: T,
) -> Result<OrbitBall<T>> {
    if !(radius >= T::zero()) {
        return Err(precondition(format!(
            "ball radius must be non-negative, got {radius}"
        )));
    }
    match (model.kind(), model.enumeration()) {
        (ModelKind::ElementaryParabolic, _) => Ok(OrbitBall::from_unsorted(
            model.label(),
            *z,
            *w,
            radius,
            Vec::new(),
            true,
        )),
        (_, Enumeration::Arithmetic { level }) => {
            let elements =
                enumerate_modular_lattice(z, w, radius, level, false, model.element_cap())?;
            Ok(OrbitBall::from_unsorted(
                model.label(),
                *z,
                *w,
                radius,
                elements,
                true,
            ))
        }
        (_, Enumeration::Words) => enumerate_by_words(model, z, w, radius, false),
    }
}

/// Moves `z` toward `i` by generator steps while the distance drops.
/// Returns `(h, hz)`.
fn reduce_toward_center<T: Real>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
) -> (MoebiusElement<T>, HalfPlanePoint<T>) {
    let center = HalfPlanePoint::i();
    let mut h = MoebiusElement::identity();
    let mut cur = *z;
    let mut best = hyp_distance(&cur, &center);
    for _ in 0..10_000 {
        let step = model
            .generators()
            .iter()
            .map(|g| (g, g.apply(&cur)))
            .map(|(g, p)| (g, p, hyp_distance(&p, &center)))
            .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap_or(Ordering::Equal));
        match step {
            Some((g, p, d)) if d < best - T::lit(1e-12) => {
                h = g.compose(&h);
                cur = p;
                best = d;
            }
            _ => break,
        }
    }
    (h, cur)
}

/// Breadth-first search over words in the generators.
///
/// Both base points are first moved toward `i` by generator steps, `z0 = hz`
/// and `w0 = kw`, and the search runs on `(z0, w0)`; an element `γ''` found
/// there corresponds to `γ = k⁻¹ γ'' h` with `d(γz, w) = d(γ''z0, w0)`.
///
/// A word is extended only while `d(γ''z0, w0) ≤ max(radius, d(z0, w0)) + 2 D`,
/// where `D` is the largest generator displacement at `z0`. For the Bolza
/// model this margin exceeds the diameter of the central octagon, which makes
/// the search exhaustive once `z0` lies inside it: every prefix of a tile path
/// along the geodesic from `z0` to `γ''z0` stays within one diameter of that
/// geodesic, and distance to `w0` along the geodesic is at most the larger of
/// its endpoint values.
///
/// Stabilizer elements are visited but dropped from the result unless
/// `include_stabilizer` is set.
pub fn enumerate_by_words<T: Real>(
    model: &SurfaceModel<T>,
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    radius: T,
    include_stabilizer: bool,
) -> Result<OrbitBall<T>> {
    if !(radius >= T::zero()) {
        return Err(precondition(format!(
            "ball radius must be non-negative, got {radius}"
        )));
    }
    let cap = model.element_cap();
    let (h, z0) = reduce_toward_center(model, z);
    let (k, w0) = reduce_toward_center(model, w);
    let k_inv = k.inverse();

    let margin = T::lit(2.0) * model.max_generator_displacement(&z0);
    let keep = radius + T::radius_slack();
    // Rounding in the reduced frame may shift a displacement slightly.
    let keep_inner = keep + T::lit(1e-9);
    let explore = keep.max(hyp_distance(&z0, &w0)) + margin;

    let mut seen = ElementSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    let emit = |q: &MoebiusElement<T>, out: &mut Vec<BallElement<T>>| {
        let g = k_inv.compose(q).compose(&h);
        let dist = hyp_distance(&g.apply(z), w);
        if dist <= keep && (include_stabilizer || !model.in_cusp_stabilizer(&g)) {
            out.push(BallElement {
                element: g,
                displacement: dist,
            });
        }
    };

    let id = MoebiusElement::identity();
    let d0 = hyp_distance(&z0, &w0);
    seen.insert(&id);
    if d0 <= explore {
        queue.push_back(id);
    }
    if d0 <= keep_inner {
        emit(&id, &mut out);
    }

    while let Some(p) = queue.pop_front() {
        for g in model.generators() {
            let q = p.compose(g);
            let dist = hyp_distance(&q.apply(&z0), &w0);
            if dist > explore || !seen.insert(&q) {
                continue;
            }
            if seen.len() > cap {
                return Err(Error::ResourceCap { cap });
            }
            if dist <= keep_inner {
                emit(&q, &mut out);
            }
            queue.push_back(q);
        }
    }
    Ok(OrbitBall::from_unsorted(
        model.label(),
        *z,
        *w,
        radius,
        out,
        true,
    ))
}

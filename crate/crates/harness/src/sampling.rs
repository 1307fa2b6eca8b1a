use std::f64::consts::PI;

use bergman_core::bounds::Regime;
use bergman_core::hypgeo::hyp_distance;
use bergman_core::{Error, Model, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{BaseChoice, PairPlan};
use crate::error::Result;

/// A base-point pair with its recomputed distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair {
    pub z: Point,
    pub w: Point,
    pub delta: f64,
    pub regime: Regime,
}

/// Keeps random targets this far (relative to `r`) from the regime edges so
/// that the recomputed distance stays in the drawn regime.
const EDGE: f64 = 0.01;

/// Fallback range for near targets on groups with `r = ∞`.
const ELEMENTARY_NEAR: f64 = 2.0;

const MAX_REJECTIONS: usize = 10_000;

/// Distance targets: the explicit ones, then `near_pairs` draws in
/// `[0, r/2]`, then `mid_pairs` draws in `(r/2, r)`.
fn targets(plan: &PairPlan, r: f64, rng: &mut ChaCha8Rng) -> Result<Vec<f64>> {
    if let Some(d) = plan.deltas.iter().find(|&&d| !(d < r)) {
        return Err(Error::Config(format!(
            "distance target {d} is not below the injectivity radius {r}"
        ))
        .into());
    }
    let mut out = plan.deltas.clone();
    let half = if r.is_finite() {
        r / 2.0
    } else {
        ELEMENTARY_NEAR
    };
    for _ in 0..plan.near_pairs {
        out.push(half * (1.0 - EDGE) * rng.gen::<f64>());
    }
    if plan.mid_pairs > 0 && !r.is_finite() {
        return Err(Error::Config(
            "the mid regime is empty for a group with infinite injectivity radius".into(),
        )
        .into());
    }
    for _ in 0..plan.mid_pairs {
        out.push(half * (1.0 + EDGE + (1.0 - 2.0 * EDGE) * rng.gen::<f64>()));
    }
    Ok(out)
}

/// Random point of the standard fundamental domain `|x| ≤ 1/2, |z| ≥ 1` with
/// height at most `max_height`, log-uniform in the height.
fn random_in_strip(rng: &mut ChaCha8Rng, max_height: f64) -> Point {
    let x = rng.gen::<f64>() - 0.5;
    let lo = (1.0 - x * x).sqrt();
    let y = lo * (max_height / lo).powf(rng.gen::<f64>());
    Point::new(x, y).expect("positive height")
}

fn base_point(model: &Model, plan: &PairPlan, index: usize, rng: &mut ChaCha8Rng) -> Point {
    match plan.base {
        BaseChoice::Samples => {
            // The elementary groups carry no sample points; use `i`.
            let pts = model.sample_points();
            if pts.is_empty() {
                Point::i()
            } else {
                pts[index % pts.len()]
            }
        }
        BaseChoice::Random if model.has_cusp() => random_in_strip(rng, plan.max_height),
        BaseChoice::Random => {
            let rho = plan.center_spread * rng.gen::<f64>();
            Point::i().geodesic_circle_point(rho, 2.0 * PI * rng.gen::<f64>())
        }
    }
}

/// Seeded pairs `(z, w)` with `w` on the circle of the target radius about
/// `z`. The recorded `δ` is `d(z, w)` recomputed from the points.
pub fn sample_pairs(model: &Model, plan: &PairPlan, seed: u64) -> Result<Vec<Pair>> {
    let r = model.injectivity_radius();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let targets = targets(plan, r, &mut rng)?;
    let cusp = model.has_cusp();
    let mut out = Vec::with_capacity(targets.len());
    for (i, &target) in targets.iter().enumerate() {
        let mut tries = 0;
        let (z, w) = loop {
            let z = base_point(model, plan, i, &mut rng);
            let w = if target == 0.0 {
                z
            } else {
                z.geodesic_circle_point(target, 2.0 * PI * rng.gen::<f64>())
            };
            if !cusp || (z.y() <= plan.max_height && w.y() <= plan.max_height) {
                break (z, w);
            }
            tries += 1;
            if tries > MAX_REJECTIONS {
                return Err(Error::Config(format!(
                    "no pair at distance {target} fits under max_height {}",
                    plan.max_height
                ))
                .into());
            }
        };
        let delta = hyp_distance(&z, &w);
        let regime = Regime::classify(delta, r)?;
        out.push(Pair {
            z,
            w,
            delta,
            regime,
        });
    }
    Ok(out)
}

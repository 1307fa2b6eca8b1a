//! Direct enumeration of PSL(2, Z) and Γ(2) balls by their bottom rows.

use crate::error::{Error, Result};
use crate::hypgeo::{cosh2_half_distance, hyp_distance, HalfPlanePoint, MoebiusElement};
use crate::scalar::Real;

use super::ball::BallElement;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// All elements `γ` of the level-`level` principal congruence subgroup of
/// PSL(2, Z) with `d(γz, w) ≤ radius`, unsorted.
///
/// `Im(γz) = y/|cz + d|^2` must lie in `[v e^{-R}, v e^{R}]`, which bounds the
/// bottom row `(c, d)`; for each admissible bottom row the top rows form one
/// coset `T^n γ_0`, and the horizontal window of the ball bounds `n`.
/// Translations (`c = 0`) are included only when `include_stabilizer` is set.
pub fn enumerate_modular_lattice<T: Real>(
    z: &HalfPlanePoint<T>,
    w: &HalfPlanePoint<T>,
    radius: T,
    level: u32,
    include_stabilizer: bool,
    cap: usize,
) -> Result<Vec<BallElement<T>>> {
    if level == 0 || level > 2 {
        return Err(Error::Config(format!(
            "unsupported congruence level {level}"
        )));
    }
    let lvl = level as i64;
    let (x, y, u, v) = (z.x(), z.y(), w.x(), w.y());
    let two = T::lit(2.0);
    let keep = radius + T::radius_slack();
    let c2 = (keep / two).cosh().powi(2);
    let fuzz = T::one() + T::lit(1e-9);
    let n_max = (y / v) * keep.exp() * fuzz;

    let mut out = Vec::new();
    let push = |a: i64, b: i64, c: i64, d: i64, out: &mut Vec<BallElement<T>>| -> Result<()> {
        let g = MoebiusElement::new(
            T::from_int(a),
            T::from_int(b),
            T::from_int(c),
            T::from_int(d),
        )?;
        let dist = hyp_distance(&g.apply(z), w);
        if dist <= keep {
            out.push(BallElement {
                element: g,
                displacement: dist,
            });
            if out.len() > cap {
                return Err(Error::ResourceCap { cap });
            }
        }
        Ok(())
    };

    if include_stabilizer {
        // (1, n, 0, 1): |x + n - u|^2 + (y + v)^2 <= 4 y v cosh^2(R/2)
        let h2 = T::lit(4.0) * y * v * c2 - (y + v) * (y + v);
        if h2 >= T::zero() {
            let h = h2.sqrt();
            let lo = (u - x - h).floor().to_i64().unwrap_or(0) - 1;
            let hi = (u - x + h).ceil().to_i64().unwrap_or(0) + 1;
            for n in lo..=hi {
                if n.rem_euclid(lvl) == 0 {
                    push(1, n, 0, 1, &mut out)?;
                }
            }
        }
    }

    let c_max = (n_max.sqrt() / y).floor().to_i64().unwrap_or(0);
    for c in 1..=c_max {
        if c % lvl != 0 {
            continue;
        }
        let cf = T::from_int(c);
        let s2 = n_max - cf * cf * y * y;
        if s2 < T::zero() {
            continue;
        }
        let s = s2.sqrt();
        let d_lo = (-cf * x - s).floor().to_i64().unwrap_or(0);
        let d_hi = (-cf * x + s).ceil().to_i64().unwrap_or(0);
        for d in d_lo..=d_hi {
            if gcd(c, d) != 1 {
                continue;
            }
            // a0 d - b0 c = 1
            let (_, s_d, t_c) = ext_gcd(d, c);
            let (a0, b0) = (s_d, -t_c);
            let g0 = MoebiusElement::new(T::from_int(a0), T::from_int(b0), cf, T::from_int(d))?;
            let img = g0.apply(z);
            let im = img.y();
            let h2 = T::lit(4.0) * im * v * c2 - (im + v) * (im + v);
            if h2 < -T::lit(1e-12) * (im + v) * (im + v) {
                continue;
            }
            let h = h2.max(T::zero()).sqrt();
            let lo = (u - h - img.x()).floor().to_i64().unwrap_or(0) - 1;
            let hi = (u + h - img.x()).ceil().to_i64().unwrap_or(0) + 1;
            for n in lo..=hi {
                let (a, b) = (a0 + n * c, b0 + n * d);
                if lvl == 2 && b.rem_euclid(2) != 0 {
                    continue;
                }
                push(a, b, c, d, &mut out)?;
            }
        }
    }
    debug_assert!(out
        .iter()
        .all(|e| cosh2_half_distance(&e.element.apply(z), w) >= T::one() - T::lit(1e-12)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_solves_bezout() {
        for (a, b) in [(3, 5), (-4, 7), (0, 1), (1, 0), (12, -5), (-9, 4)] {
            let (g, s, t) = ext_gcd(a, b);
            assert_eq!(g, gcd(a, b));
            assert_eq!(s * a + t * b, g);
        }
    }

    #[test]
    fn gamma2_elements_are_congruent() {
        let z = HalfPlanePoint::new(0.1, 1.2).unwrap();
        let els = enumerate_modular_lattice::<f64>(&z, &z, 5.0, 2, true, 1_000_000).unwrap();
        assert!(!els.is_empty());
        for e in els {
            assert!(
                super::super::is_congruent_to_identity(&e.element, 2),
                "{}",
                e.element
            );
        }
    }
}

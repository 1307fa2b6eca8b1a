//! Diagonal growth study: `‖B^k‖_hyp(z, z)` against `k`.
//!
//! Compact models are evaluated at their sample points and normalized by
//! `k`. The modular model uses the strip-boundary supremum, other models with
//! a cusp their sample points; both are normalized by `k^{3/2}`.

use std::io::{Read, Write};

use bergman_core::kernel::{diagonal_sup_strip, kernel_norm, kernel_prefactor, tail_bound};
use bergman_core::{Model, Params, Point};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::{HarnessError, Result};
use crate::sweep::{csv_reader, fmt_f, BallCache};

pub const DIAG_COLUMNS: [&str; 9] = [
    "model", "k", "x", "y", "measured", "tail", "ratio", "kind", "error",
];

#[derive(Debug, Clone, PartialEq)]
pub struct DiagRow {
    pub model: String,
    pub k: u32,
    /// Sample point, or the argmax for strip rows.
    pub point: (f64, f64),
    pub measured: Option<f64>,
    pub tail: Option<f64>,
    pub ratio: Option<f64>,
    /// `point` or `strip`.
    pub kind: String,
    pub error: Option<String>,
}

/// `measured / k` without a cusp, `measured / k^{3/2}` with one.
pub fn growth_ratio(model: &Model, k: u32, measured: f64) -> f64 {
    let k = f64::from(k);
    if model.has_cusp() {
        measured / k.powf(1.5)
    } else {
        measured / k
    }
}

fn strip_rows(model: &Model, cfg: &SweepConfig) -> Vec<DiagRow> {
    cfg.ks
        .par_iter()
        .map(|&k| {
            let mut row = DiagRow {
                model: model.label().to_owned(),
                k,
                point: (f64::NAN, f64::NAN),
                measured: None,
                tail: None,
                ratio: None,
                kind: "strip".into(),
                error: None,
            };
            let res = Params::new(k, cfg.truncation_radius).and_then(|params| {
                let sup = diagonal_sup_strip(model, k, cfg.strip_samples, &params)?;
                let tail = kernel_prefactor::<f64>(k)
                    * tail_bound(cfg.truncation_radius, model.injectivity_radius(), k)?;
                Ok((sup, tail))
            });
            match res {
                Ok((sup, tail)) => {
                    row.point = (sup.argmax.x(), sup.argmax.y());
                    row.measured = Some(sup.value);
                    row.tail = Some(tail);
                    row.ratio = Some(growth_ratio(model, k, sup.value));
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

fn point_rows(model: &Model, cfg: &SweepConfig, cache: &BallCache, z: &Point) -> Vec<DiagRow> {
    let ball = cache.ball(model, z, z, cfg.truncation_radius);
    cfg.ks
        .iter()
        .map(|&k| {
            let mut row = DiagRow {
                model: model.label().to_owned(),
                k,
                point: (z.x(), z.y()),
                measured: None,
                tail: None,
                ratio: None,
                kind: "point".into(),
                error: None,
            };
            let res = ball.as_ref().map_err(Clone::clone).and_then(|ball| {
                kernel_norm(model, ball, z, z, &Params::new(k, cfg.truncation_radius)?)
            });
            match res {
                Ok(ev) => {
                    row.measured = Some(ev.norm_value);
                    row.tail = Some(ev.tail_bound);
                    row.ratio = Some(growth_ratio(model, k, ev.norm_value));
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

pub fn run_diag(cfg: &SweepConfig) -> Result<Vec<DiagRow>> {
    cfg.validate()?;
    let model = cfg.build_model()?;
    if model.is_modular() {
        return Ok(strip_rows(&model, cfg));
    }
    let cache = BallCache::new(cfg.cache_dir.clone());
    Ok(model
        .sample_points()
        .par_iter()
        .map(|z| point_rows(&model, cfg, &cache, z))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

/// Largest ratio per `k`, in increasing `k`.
pub fn max_ratio_by_k(rows: &[DiagRow]) -> Vec<(u32, f64)> {
    let mut by_k = std::collections::BTreeMap::<u32, f64>::new();
    for r in rows {
        if let Some(q) = r.ratio {
            let e = by_k.entry(r.k).or_insert(f64::NEG_INFINITY);
            *e = e.max(q);
        }
    }
    by_k.into_iter().collect()
}

pub fn write_diag_csv<W: Write>(rows: &[DiagRow], seed: u64, mut out: W) -> Result<()> {
    let model = rows.first().map(|r| r.model.as_str()).unwrap_or("");
    writeln!(out, "# bergman diag model={model} seed={seed}")
        .map_err(|e| HarnessError::io("<csv>", e))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(DIAG_COLUMNS)?;
    let opt = |x: Option<f64>| x.map(fmt_f).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.model.clone(),
            r.k.to_string(),
            fmt_f(r.point.0),
            fmt_f(r.point.1),
            opt(r.measured),
            opt(r.tail),
            opt(r.ratio),
            r.kind.clone(),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(|e| HarnessError::io("<csv>", e))?;
    Ok(())
}

pub fn read_diag_csv<R: Read>(input: R) -> Result<Vec<DiagRow>> {
    let mut rdr = csv_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(DIAG_COLUMNS.iter().copied()) {
        return Err(HarnessError::usage("not a diag CSV"));
    }
    let num = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse()
                .map(Some)
                .map_err(|_| HarnessError::usage(format!("bad number `{s}` in diag CSV")))
        }
    };
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let f = |i: usize| rec.get(i).unwrap_or("");
        out.push(DiagRow {
            model: f(0).to_owned(),
            k: f(1)
                .parse()
                .map_err(|_| HarnessError::usage(format!("bad k `{}`", f(1))))?,
            point: (
                num(f(2))?.unwrap_or(f64::NAN),
                num(f(3))?.unwrap_or(f64::NAN),
            ),
            measured: num(f(4))?,
            tail: num(f(5))?,
            ratio: num(f(6))?,
            kind: f(7).to_owned(),
            error: Some(f(8).to_owned()).filter(|s| !s.is_empty()),
        });
    }
    Ok(out)
}

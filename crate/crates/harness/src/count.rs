//! Counting study: the integral counting inequality with the weight
//! `cosh^{-2k}(ρ/2)` and the integer bound `N(δ) ≤ sinh(δ + r)/sinh(r)`.

use std::io::{Read, Write};

use bergman_core::bounds::Regime;
use bergman_core::fuchsian::{
    counting_inequality_margin_in_ball, jl_count_bound, CoshPowerProfile,
};
use bergman_core::{Ball, Model};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::{HarnessError, Result};
use crate::sampling::{sample_pairs, Pair};
use crate::sweep::{csv_reader, fmt_f, BallCache};

pub const COUNT_COLUMNS: [&str; 16] = [
    "model",
    "k",
    "zx",
    "zy",
    "wx",
    "wy",
    "delta",
    "radius",
    "lhs",
    "rhs",
    "slack",
    "allowance",
    "count",
    "count_bound",
    "elements",
    "error",
];

#[derive(Debug, Clone, PartialEq)]
pub struct CountRow {
    pub model: String,
    pub k: u32,
    pub z: (f64, f64),
    pub w: (f64, f64),
    pub delta: f64,
    pub radius: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub allowance: Option<f64>,
    pub count: Option<usize>,
    pub count_bound: Option<f64>,
    pub elements: Option<usize>,
    pub error: Option<String>,
}

impl CountRow {
    /// Both inequalities hold.
    pub fn passed(&self) -> Option<bool> {
        let integral = self.slack? >= -self.allowance?;
        let integer = self.count? as f64 <= self.count_bound?;
        Some(integral && integer)
    }
}

/// Integer count check `N(z, w; δ) ≤ sinh(δ + r)/sinh(r)` on an existing
/// ball. Returns `(count, bound)`.
pub fn integer_count_check(model: &Model, ball: &Ball, delta: f64) -> (usize, f64) {
    (
        ball.count_within(delta),
        jl_count_bound(delta, model.injectivity_radius()),
    )
}

fn pair_rows(model: &Model, cfg: &SweepConfig, cache: &BallCache, pair: &Pair) -> Vec<CountRow> {
    let ball = cache.ball(model, &pair.z, &pair.w, cfg.count_radius);
    cfg.ks
        .iter()
        .map(|&k| {
            let mut row = CountRow {
                model: model.label().to_owned(),
                k,
                z: (pair.z.x(), pair.z.y()),
                w: (pair.w.x(), pair.w.y()),
                delta: pair.delta,
                radius: cfg.count_radius,
                lhs: None,
                rhs: None,
                slack: None,
                allowance: None,
                count: None,
                count_bound: None,
                elements: None,
                error: None,
            };
            let res = ball.as_ref().map_err(Clone::clone).and_then(|ball| {
                let rep = counting_inequality_margin_in_ball(
                    model,
                    ball,
                    pair.delta,
                    &CoshPowerProfile { k },
                )?;
                Ok((
                    rep,
                    integer_count_check(model, ball, pair.delta),
                    ball.len(),
                ))
            });
            match res {
                Ok((rep, (count, bound), n)) => {
                    row.lhs = Some(rep.lhs);
                    row.rhs = Some(rep.rhs);
                    row.slack = Some(rep.slack);
                    row.allowance = Some(rep.tail_allowance);
                    row.count = Some(count);
                    row.count_bound = Some(bound);
                    row.elements = Some(n);
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

/// Runs the counting study on the sampled pairs. Pairs in the near regime
/// are skipped on groups with finite `r`, where the integral inequality
/// needs `δ > r/2`.
pub fn run_count(cfg: &SweepConfig) -> Result<Vec<CountRow>> {
    cfg.validate()?;
    let model = cfg.build_model()?;
    let finite = model.injectivity_radius().is_finite();
    let pairs: Vec<Pair> = sample_pairs(&model, &cfg.plan, cfg.seed)?
        .into_iter()
        .filter(|p| !finite || p.regime == Regime::Mid)
        .collect();
    let cache = BallCache::new(cfg.cache_dir.clone());
    Ok(pairs
        .par_iter()
        .map(|p| pair_rows(&model, cfg, &cache, p))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

pub fn write_count_csv<W: Write>(rows: &[CountRow], seed: u64, mut out: W) -> Result<()> {
    let model = rows.first().map(|r| r.model.as_str()).unwrap_or("");
    writeln!(out, "# bergman count model={model} seed={seed}")
        .map_err(|e| HarnessError::io("<csv>", e))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COUNT_COLUMNS)?;
    let opt = |x: Option<f64>| x.map(fmt_f).unwrap_or_default();
    let opt_n = |x: Option<usize>| x.map(|n| n.to_string()).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.model.clone(),
            r.k.to_string(),
            fmt_f(r.z.0),
            fmt_f(r.z.1),
            fmt_f(r.w.0),
            fmt_f(r.w.1),
            fmt_f(r.delta),
            fmt_f(r.radius),
            opt(r.lhs),
            opt(r.rhs),
            opt(r.slack),
            opt(r.allowance),
            opt_n(r.count),
            opt(r.count_bound),
            opt_n(r.elements),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(|e| HarnessError::io("<csv>", e))?;
    Ok(())
}

pub fn read_count_csv<R: Read>(input: R) -> Result<Vec<CountRow>> {
    let mut rdr = csv_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(COUNT_COLUMNS.iter().copied()) {
        return Err(HarnessError::usage("not a count CSV"));
    }
    fn num<T: std::str::FromStr>(s: &str) -> Result<Option<T>> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse()
                .map(Some)
                .map_err(|_| HarnessError::usage(format!("bad value `{s}` in count CSV")))
        }
    }
    fn req<T: std::str::FromStr>(s: &str) -> Result<T> {
        num(s)?.ok_or_else(|| HarnessError::usage("missing value in count CSV"))
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let f = |i: usize| rec.get(i).unwrap_or("");
        out.push(CountRow {
            model: f(0).to_owned(),
            k: req(f(1))?,
            z: (req(f(2))?, req(f(3))?),
            w: (req(f(4))?, req(f(5))?),
            delta: req(f(6))?,
            radius: req(f(7))?,
            lhs: num(f(8))?,
            rhs: num(f(9))?,
            slack: num(f(10))?,
            allowance: num(f(11))?,
            count: num(f(12))?,
            count_bound: num(f(13))?,
            elements: num(f(14))?,
            error: Some(f(15).to_owned()).filter(|s| !s.is_empty()),
        });
    }
    Ok(out)
}

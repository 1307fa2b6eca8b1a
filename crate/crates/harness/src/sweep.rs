use std::fs;
use std::io::{BufReader, Read, Write};
use std::path::{Path, PathBuf};

use bergman_core::bounds::{theorem_bound, BoundInput, Regime};
use bergman_core::fuchsian::{enumerate_ball, OrbitBall};
use bergman_core::kernel::kernel_norm;
use bergman_core::{Ball, Model, Params, Point};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::{HarnessError, Result};
use crate::sampling::{sample_pairs, Pair};

pub const SWEEP_COLUMNS: [&str; 15] = [
    "model",
    "k",
    "zx",
    "zy",
    "wx",
    "wy",
    "delta",
    "regime",
    "measured",
    "tail",
    "parabolic",
    "bound",
    "margin",
    "elements",
    "error",
];

/// Orbit balls on disk, keyed by model and base data.
#[derive(Debug, Clone, Default)]
pub struct BallCache {
    dir: Option<PathBuf>,
}

impl BallCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    fn path(&self, model: &Model, z: &Point, w: &Point, radius: f64) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(OrbitBall::cache_file_name(model.label(), z, w, radius)))
    }

    /// A cached ball when one is on disk, a fresh one otherwise. Unreadable
    /// cache files are rebuilt.
    pub fn ball(
        &self,
        model: &Model,
        z: &Point,
        w: &Point,
        radius: f64,
    ) -> bergman_core::Result<Ball> {
        let path = self.path(model, z, w, radius);
        if let Some(p) = &path {
            if let Ok(f) = fs::File::open(p) {
                if let Ok(ball) = OrbitBall::read_cache(BufReader::new(f)) {
                    return Ok(ball);
                }
            }
        }
        let ball = enumerate_ball(model, z, w, radius)?;
        if let Some(p) = &path {
            // A failed write only costs a rebuild next time.
            let _ = store(&ball, p);
        }
        Ok(ball)
    }
}

fn store(ball: &Ball, path: &Path) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    // Write then rename so concurrent readers never see a partial file.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut buf = Vec::new();
    ball.write_cache(&mut buf)
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    fs::File::create(&tmp)?.write_all(&buf)?;
    fs::rename(&tmp, path)
}

/// One CSV row. Numeric fields are `None` when the row failed before they
/// were computed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: String,
    pub k: u32,
    pub z: (f64, f64),
    pub w: (f64, f64),
    pub delta: f64,
    pub regime: Regime,
    pub measured: Option<f64>,
    pub tail: Option<f64>,
    pub parabolic: Option<f64>,
    pub bound: Option<f64>,
    pub margin: Option<f64>,
    pub elements: Option<usize>,
    pub error: Option<String>,
}

impl SweepRow {
    fn blank(model: &str, k: u32, pair: &Pair) -> Self {
        Self {
            model: model.to_owned(),
            k,
            z: (pair.z.x(), pair.z.y()),
            w: (pair.w.x(), pair.w.y()),
            delta: pair.delta,
            regime: pair.regime,
            measured: None,
            tail: None,
            parabolic: None,
            bound: None,
            margin: None,
            elements: None,
            error: None,
        }
    }
}

pub fn bound_input(model: &Model, k: u32, pair: &Pair) -> bergman_core::Result<BoundInput<f64>> {
    let r = model.injectivity_radius();
    if model.has_cusp() {
        BoundInput::noncompact(k, r, pair.delta, pair.z.y(), pair.w.y())
    } else {
        BoundInput::compact(k, r, pair.delta)
    }
}

fn evaluate_row(
    model: &Model,
    ball: &Ball,
    pair: &Pair,
    params: &Params,
    row: &mut SweepRow,
) -> bergman_core::Result<()> {
    let ev = kernel_norm(model, ball, &pair.z, &pair.w, params)?;
    row.measured = Some(ev.norm_value);
    row.tail = Some(ev.tail_bound);
    row.parabolic = Some(ev.parabolic_part);
    row.elements = Some(ev.element_count);
    let bound = theorem_bound(&bound_input(model, params.k(), pair)?)?;
    row.bound = Some(bound);
    row.margin = Some(bound - ev.norm_value - ev.tail_bound);
    Ok(())
}

/// Rows for one pair, one per `k`, sharing a single ball.
pub fn pair_rows(
    model: &Model,
    cfg: &SweepConfig,
    cache: &BallCache,
    pair: &Pair,
) -> Vec<SweepRow> {
    let ball = cache.ball(model, &pair.z, &pair.w, cfg.truncation_radius);
    cfg.ks
        .iter()
        .map(|&k| {
            let mut row = SweepRow::blank(model.label(), k, pair);
            let res = ball.as_ref().map_err(Clone::clone).and_then(|ball| {
                let params =
                    Params::new(k, cfg.truncation_radius)?.with_tail_tolerance(cfg.tail_tolerance);
                evaluate_row(model, ball, pair, &params, &mut row)
            });
            if let Err(e) = res {
                row.error = Some(e.to_string());
            }
            row
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub model: String,
    pub seed: u64,
    pub rows: Vec<SweepRow>,
}

/// Samples the pairs and evaluates every `(pair, k)`. Pairs run in parallel;
/// rows come back in `(pair, k)` order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let model = cfg.build_model()?;
    let pairs = sample_pairs(&model, &cfg.plan, cfg.seed)?;
    let cache = BallCache::new(cfg.cache_dir.clone());
    let rows = pairs
        .par_iter()
        .map(|pair| pair_rows(&model, cfg, &cache, pair))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(SweepResult {
        model: model.label().to_owned(),
        seed: cfg.seed,
        rows,
    })
}

pub(crate) fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f).unwrap_or_default()
}

/// Writes the seed comment, the header and the rows.
pub fn write_sweep_csv<W: Write>(result: &SweepResult, mut out: W) -> Result<()> {
    writeln!(
        out,
        "# bergman sweep model={} seed={}",
        result.model, result.seed
    )
    .map_err(|e| HarnessError::io("<csv>", e))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for r in &result.rows {
        w.write_record([
            r.model.clone(),
            r.k.to_string(),
            fmt_f(r.z.0),
            fmt_f(r.z.1),
            fmt_f(r.w.0),
            fmt_f(r.w.1),
            fmt_f(r.delta),
            r.regime.as_str().to_owned(),
            fmt_opt(r.measured),
            fmt_opt(r.tail),
            fmt_opt(r.parabolic),
            fmt_opt(r.bound),
            fmt_opt(r.margin),
            r.elements.map(|n| n.to_string()).unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(|e| HarnessError::io("<csv>", e))?;
    Ok(())
}

/// CSV reader that skips `#` comment lines and checks the header.
pub(crate) fn csv_reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input)
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
    let s = rec.get(i).unwrap_or("");
    s.parse().map_err(|_| {
        HarnessError::usage(format!(
            "cannot parse column `{}` value `{s}`",
            SWEEP_COLUMNS[i]
        ))
    })
}

fn opt_field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<Option<T>> {
    if rec.get(i).unwrap_or("").is_empty() {
        Ok(None)
    } else {
        field(rec, i).map(Some)
    }
}

pub fn parse_sweep_record(rec: &csv::StringRecord) -> Result<SweepRow> {
    Ok(SweepRow {
        model: field(rec, 0)?,
        k: field(rec, 1)?,
        z: (field(rec, 2)?, field(rec, 3)?),
        w: (field(rec, 4)?, field(rec, 5)?),
        delta: field(rec, 6)?,
        regime: field::<String>(rec, 7)?
            .parse()
            .map_err(|e: bergman_core::Error| HarnessError::usage(e.to_string()))?,
        measured: opt_field(rec, 8)?,
        tail: opt_field(rec, 9)?,
        parabolic: opt_field(rec, 10)?,
        bound: opt_field(rec, 11)?,
        margin: opt_field(rec, 12)?,
        elements: opt_field(rec, 13)?,
        error: opt_field(rec, 14)?,
    })
}

pub fn read_sweep_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut rdr = csv_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(SWEEP_COLUMNS.iter().copied()) {
        return Err(HarnessError::usage(format!(
            "not a sweep CSV, header is `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    rdr.records().map(|r| parse_sweep_record(&r?)).collect()
}

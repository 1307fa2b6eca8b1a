//! Flat `key = value` configuration.
//!
//! ```text
//! # lines starting with '#' are ignored
//! model = bolza
//! k = 3, 4, 6, 8, 12        # or a range: 3..12
//! near_pairs = 20
//! mid_pairs = 20
//! truncation_radius = 7
//! seed = 2024
//! out = results/bolza.csv
//! ```
//!
//! Command-line flags are applied with [`SweepConfig::set`] after the file,
//! so they win.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use bergman_core::fuchsian::build_named_model;
use bergman_core::Model;

use crate::error::{HarnessError, Result};

/// Where the first point `z` of each pair comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseChoice {
    /// Cycle through the model's own sample points, the points its
    /// injectivity radius was estimated on.
    Samples,
    /// Draw `z` at random: inside the standard fundamental domain for
    /// models with a cusp, near `i` otherwise.
    Random,
}

impl FromStr for BaseChoice {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "samples" => Ok(Self::Samples),
            "random" => Ok(Self::Random),
            _ => Err(HarnessError::usage(format!(
                "base must be `samples` or `random`, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for BaseChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Samples => "samples",
            Self::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairPlan {
    pub base: BaseChoice,
    /// Explicit distance targets, used once each.
    pub deltas: Vec<f64>,
    /// Pairs with a random target in `[0, r/2]`.
    pub near_pairs: usize,
    /// Pairs with a random target in `(r/2, r)`.
    pub mid_pairs: usize,
    /// Upper limit on `Im z` and `Im w` for models with a cusp.
    pub max_height: f64,
    /// Largest distance of a random `z` from `i` for models without a cusp.
    pub center_spread: f64,
}

impl Default for PairPlan {
    fn default() -> Self {
        Self {
            base: BaseChoice::Samples,
            deltas: Vec::new(),
            near_pairs: 5,
            mid_pairs: 5,
            max_height: 10.0,
            center_spread: 0.5,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: String,
    pub ks: Vec<u32>,
    pub plan: PairPlan,
    pub truncation_radius: f64,
    pub tail_tolerance: f64,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub cap: Option<usize>,
    /// Directory for cached orbit balls; `None` disables the disk cache.
    pub cache_dir: Option<PathBuf>,
    /// Boundary samples per strip sup in `diag` runs on models with a cusp.
    pub strip_samples: usize,
    /// Ball radius used by `count` runs.
    pub count_radius: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            model: "bolza".into(),
            ks: vec![3, 4, 6, 8, 12],
            plan: PairPlan::default(),
            truncation_radius: 7.0,
            tail_tolerance: 1e-12,
            out: None,
            seed: 0,
            cap: None,
            cache_dir: Some(PathBuf::from(".bergman-cache")),
            strip_samples: 24,
            count_radius: 7.0,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| HarnessError::usage(format!("cannot parse `{value}` for `{key}`")))
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_num(key, s))
        .collect()
}

fn parse_ks(value: &str) -> Result<Vec<u32>> {
    if let Some((lo, hi)) = value.split_once("..") {
        let (lo, hi): (u32, u32) = (parse_num("k", lo.trim())?, parse_num("k", hi.trim())?);
        return Ok((lo..=hi).collect());
    }
    parse_list("k", value)
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(HarnessError::usage(format!(
            "`{key}` expects a boolean, got `{value}`"
        ))),
    }
}

impl SweepConfig {
    /// Parses a config file body on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                HarnessError::usage(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    n + 1
                ))
            })?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| HarnessError::usage(format!("line {}: {e}", n + 1)))?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Self::parse(&text)
    }

    /// Sets one key. Unknown keys are an error.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "model" => self.model = value.to_owned(),
            "k" | "ks" => self.ks = parse_ks(value)?,
            "base" => self.plan.base = value.parse()?,
            "deltas" => self.plan.deltas = parse_list(key, value)?,
            "near_pairs" => self.plan.near_pairs = parse_num(key, value)?,
            "mid_pairs" => self.plan.mid_pairs = parse_num(key, value)?,
            "max_height" => self.plan.max_height = parse_num(key, value)?,
            "center_spread" => self.plan.center_spread = parse_num(key, value)?,
            "truncation_radius" => self.truncation_radius = parse_num(key, value)?,
            "tail_tolerance" => self.tail_tolerance = parse_num(key, value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            "seed" => self.seed = parse_num(key, value)?,
            "cap" => self.cap = Some(parse_num(key, value)?),
            "cache" => {
                if !parse_bool(key, value)? {
                    self.cache_dir = None;
                } else if self.cache_dir.is_none() {
                    self.cache_dir = Self::default().cache_dir;
                }
            }
            "cache_dir" => self.cache_dir = Some(PathBuf::from(value)),
            "strip_samples" => self.strip_samples = parse_num(key, value)?,
            "count_radius" => self.count_radius = parse_num(key, value)?,
            _ => return Err(HarnessError::usage(format!("unknown config key `{key}`"))),
        }
        Ok(())
    }

    /// Checks the values that do not depend on the model.
    pub fn validate(&self) -> Result<()> {
        if self.ks.is_empty() {
            return Err(HarnessError::usage("no k values given"));
        }
        if let Some(k) = self.ks.iter().find(|&&k| k < 3) {
            return Err(HarnessError::usage(format!(
                "every k must be at least 3, got {k}"
            )));
        }
        if !(self.truncation_radius > 0.0 && self.truncation_radius.is_finite()) {
            return Err(HarnessError::usage(format!(
                "truncation_radius must be positive, got {}",
                self.truncation_radius
            )));
        }
        if !(self.tail_tolerance > 0.0) {
            return Err(HarnessError::usage("tail_tolerance must be positive"));
        }
        if self.plan.deltas.iter().any(|d| !(*d >= 0.0)) {
            return Err(HarnessError::usage("distance targets must be non-negative"));
        }
        if !(self.plan.max_height > 1.0) {
            return Err(HarnessError::usage("max_height must exceed 1"));
        }
        if !(self.plan.center_spread >= 0.0) {
            return Err(HarnessError::usage("center_spread must be non-negative"));
        }
        if self.strip_samples < 8 {
            return Err(HarnessError::usage("strip_samples must be at least 8"));
        }
        Ok(())
    }

    /// The configured model with the element cap applied.
    pub fn build_model(&self) -> Result<Model> {
        let mut model = build_named_model::<f64>(&self.model)?;
        if let Some(cap) = self.cap {
            model = model.with_element_cap(cap);
        }
        Ok(model)
    }
}

//! Aggregation of sweep, count and diag CSVs into a pass/fail report.
//!
//! A sweep row with `bound - measured - tail ≥ 0` passes; the margin is
//! recomputed from those columns rather than read back. The true
//! kernel lies within `tail` of the truncated value, so a row fails only when
//! `measured - tail > bound`, that is `margin + 2 tail < 0`; rows in between
//! are reported as uncertified.

use std::collections::BTreeMap;
use std::fmt;

use crate::count::{read_count_csv, CountRow, COUNT_COLUMNS};
use crate::diag::{max_ratio_by_k, read_diag_csv, DiagRow, DIAG_COLUMNS};
use crate::error::{HarnessError, Result, Status};
use crate::sweep::{read_sweep_csv, SweepRow, SWEEP_COLUMNS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Uncertified,
    Violation,
}

/// Margin recomputed from the bound, measured and tail columns.
pub fn row_margin(row: &SweepRow) -> Option<f64> {
    Some(row.bound? - row.measured? - row.tail?)
}

pub fn classify_row(row: &SweepRow) -> Option<Verdict> {
    let (m, t) = (row_margin(row)?, row.tail?);
    Some(if m >= 0.0 {
        Verdict::Pass
    } else if m + 2.0 * t >= 0.0 {
        Verdict::Uncertified
    } else {
        Verdict::Violation
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupStats {
    pub rows: usize,
    pub passed: usize,
    pub uncertified: usize,
    pub violations: usize,
    /// Smallest margin (sweep) or slack plus allowance (count).
    pub min_margin: f64,
}

impl Default for GroupStats {
    fn default() -> Self {
        Self {
            rows: 0,
            passed: 0,
            uncertified: 0,
            violations: 0,
            min_margin: f64::INFINITY,
        }
    }
}

impl GroupStats {
    fn add(&mut self, verdict: Verdict, margin: f64) {
        self.rows += 1;
        match verdict {
            Verdict::Pass => self.passed += 1,
            Verdict::Uncertified => self.uncertified += 1,
            Verdict::Violation => self.violations += 1,
        }
        self.min_margin = self.min_margin.min(margin);
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    /// `sweep`, `count` or `diag`.
    pub kind: String,
    /// Keyed by `model/regime` for sweeps and `model/k` for counts.
    pub groups: BTreeMap<String, GroupStats>,
    /// Largest growth ratio per `k` for diag files.
    pub ratios: Vec<(u32, f64)>,
    pub cap_errors: usize,
    pub other_errors: usize,
}

impl Report {
    pub fn violations(&self) -> usize {
        self.groups.values().map(|g| g.violations).sum()
    }

    pub fn status(&self) -> Status {
        if self.violations() > 0 {
            Status::Violation
        } else if self.cap_errors > 0 {
            Status::ResourceCap
        } else if self.other_errors > 0 {
            Status::Usage
        } else {
            Status::Pass
        }
    }

    fn note_error(&mut self, err: &str) {
        if err.contains("element cap") {
            self.cap_errors += 1;
        } else {
            self.other_errors += 1;
        }
    }
}

pub fn report_sweep(rows: &[SweepRow]) -> Report {
    let mut rep = Report {
        kind: "sweep".into(),
        ..Default::default()
    };
    for row in rows {
        if let Some(e) = &row.error {
            rep.note_error(e);
            continue;
        }
        match classify_row(row) {
            Some(v) => rep
                .groups
                .entry(format!("{}/{}", row.model, row.regime))
                .or_default()
                .add(v, row_margin(row).unwrap_or(f64::NAN)),
            None => rep.other_errors += 1,
        }
    }
    rep
}

pub fn report_count(rows: &[CountRow]) -> Report {
    let mut rep = Report {
        kind: "count".into(),
        ..Default::default()
    };
    for row in rows {
        if let Some(e) = &row.error {
            rep.note_error(e);
            continue;
        }
        match (row.passed(), row.slack, row.allowance) {
            (Some(ok), Some(s), Some(a)) => {
                let v = if ok {
                    Verdict::Pass
                } else {
                    Verdict::Violation
                };
                rep.groups
                    .entry(format!("{}/k={:02}", row.model, row.k))
                    .or_default()
                    .add(v, s + a);
            }
            _ => rep.other_errors += 1,
        }
    }
    rep
}

pub fn report_diag(rows: &[DiagRow]) -> Report {
    let mut rep = Report {
        kind: "diag".into(),
        ratios: max_ratio_by_k(rows),
        ..Default::default()
    };
    for row in rows {
        if let Some(e) = &row.error {
            rep.note_error(e);
        }
    }
    rep
}

/// Reads any of the three CSV kinds, told apart by the header row.
pub fn verify_text(text: &str) -> Result<Report> {
    let header = text
        .lines()
        .find(|l| !l.starts_with('#') && !l.trim().is_empty())
        .ok_or_else(|| HarnessError::usage("CSV has no header row"))?;
    let cols: Vec<&str> = header.trim_end().split(',').collect();
    let bytes = text.as_bytes();
    if cols == SWEEP_COLUMNS {
        Ok(report_sweep(&read_sweep_csv(bytes)?))
    } else if cols == COUNT_COLUMNS {
        Ok(report_count(&read_count_csv(bytes)?))
    } else if cols == DIAG_COLUMNS {
        Ok(report_diag(&read_diag_csv(bytes)?))
    } else {
        Err(HarnessError::usage(format!(
            "unrecognized CSV header `{header}`"
        )))
    }
}

pub fn verify_file(path: &std::path::Path) -> Result<Report> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    verify_text(&text)
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} report", self.kind)?;
        for (key, g) in &self.groups {
            writeln!(
                f,
                "  {key:<24} rows {:>5}  pass {:>5}  uncertified {:>3}  violations {:>3}  min margin {:.6e}",
                g.rows, g.passed, g.uncertified, g.violations, g.min_margin
            )?;
        }
        if !self.ratios.is_empty() {
            writeln!(f, "  k   max ratio")?;
            for (k, q) in &self.ratios {
                writeln!(f, "  {k:<3} {q:.6e}")?;
            }
            let (lo, hi) = self
                .ratios
                .iter()
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), &(_, q)| {
                    (lo.min(q), hi.max(q))
                });
            writeln!(f, "  spread (max/min) {:.4}", hi / lo)?;
        }
        if self.cap_errors + self.other_errors > 0 {
            writeln!(
                f,
                "  errors: {} element cap, {} other",
                self.cap_errors, self.other_errors
            )?;
        }
        write!(f, "status: {:?}", self.status())
    }
}

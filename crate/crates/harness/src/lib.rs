//! Experiment runner for the kernel bounds: seeded pair sampling, sweeps over
//! `k` written as CSV, and a verifier that turns a CSV into a pass/fail
//! report.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod count;
pub mod diag;
pub mod error;
pub mod sampling;
pub mod sweep;
pub mod verify;

pub use config::{BaseChoice, PairPlan, SweepConfig};
pub use error::{HarnessError, Result, Status};
pub use sampling::{sample_pairs, Pair};
pub use sweep::{run_sweep, SweepResult, SweepRow};
pub use verify::{verify_file, verify_text, Report};

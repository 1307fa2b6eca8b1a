use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bergman_harness::count::{run_count, write_count_csv};
use bergman_harness::diag::{run_diag, write_diag_csv};
use bergman_harness::sweep::write_sweep_csv;
use bergman_harness::{run_sweep, verify_file, HarnessError, Result, Status, SweepConfig};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "bergman",
    version,
    about = "Kernel bound sweeps on hyperbolic surfaces"
)]
struct Cli {
    /// Flat `key = value` config file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for pair sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output CSV (input CSV for `verify`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Element cap per orbit ball.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Do not read or write cached orbit balls.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Extra `key=value` overrides, applied after the config file.
    #[arg(long = "set", short = 's', global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate kernel norms and theorem bounds on sampled pairs.
    Sweep,
    /// Summarize a sweep, count or diag CSV; the exit status reports the outcome.
    Verify {
        /// CSV to check; defaults to `--out` or the config's `out`.
        csv: Option<PathBuf>,
    },
    /// Diagonal growth of the kernel in `k`.
    Diag,
    /// Counting inequalities on sampled pairs.
    Count,
}

fn config(cli: &Cli) -> Result<SweepConfig> {
    let mut cfg = match &cli.config {
        Some(p) => SweepConfig::load(p)?,
        None => SweepConfig::default(),
    };
    for kv in &cli.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| HarnessError::usage(format!("--set expects KEY=VALUE, got `{kv}`")))?;
        cfg.set(k.trim(), v.trim())?;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(o) = &cli.out {
        cfg.out = Some(o.clone());
    }
    if let Some(c) = cli.cap {
        cfg.cap = Some(c);
    }
    if cli.no_cache {
        cfg.cache_dir = None;
    }
    Ok(cfg)
}

fn with_output<F>(path: Option<&Path>, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
            }
            let f = File::create(p).map_err(|e| HarnessError::io(p, e))?;
            let mut w = BufWriter::new(f);
            write(&mut w)?;
            w.flush().map_err(|e| HarnessError::io(p, e))
        }
        None => write(&mut std::io::stdout().lock()),
    }
}

fn run(cli: &Cli) -> Result<Status> {
    let cfg = config(cli)?;
    let out = cfg.out.as_deref();
    match &cli.command {
        Command::Sweep => {
            let res = run_sweep(&cfg)?;
            with_output(out, |w| write_sweep_csv(&res, w))?;
        }
        Command::Diag => {
            let rows = run_diag(&cfg)?;
            with_output(out, |w| write_diag_csv(&rows, cfg.seed, w))?;
        }
        Command::Count => {
            let rows = run_count(&cfg)?;
            with_output(out, |w| write_count_csv(&rows, cfg.seed, w))?;
        }
        Command::Verify { csv } => {
            let path = csv.as_deref().or(out).ok_or_else(|| {
                HarnessError::usage(
                    "verify needs a CSV path (argument, --out or `out` in the config)",
                )
            })?;
            let report = verify_file(path)?;
            println!("{report}");
            return Ok(report.status());
        }
    }
    Ok(Status::Pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Status::Usage.into()
            } else {
                Status::Pass.into()
            };
        }
    };
    match run(&cli) {
        Ok(s) => s.into(),
        Err(e) => {
            eprintln!("bergman: {e}");
            e.exit_code()
        }
    }
}

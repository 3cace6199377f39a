use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use robonet_core::lab::{
    check_rescheduling, emit_plot, fit_loglog, render_trajectories, run_scenario, spectral_sweep, sweep,
    write_spectral_csv, write_sweep_csv, Regressor, ReschedulingConfig, Scenario,
};
use robonet_core::spectral::Sign;
use robonet_core::{BandedMatrixSpec, Error};

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_HORIZON: u8 = 3;

#[derive(Parser)]
#[command(name = "robonet", version, about = "Simulate robotic network laws and measure their complexity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario and print its complexity report as JSON.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Per-round trace; `.jsonl` selects JSON lines, anything else CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// SVG of the agent trajectories.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit with status 3 when the task is not achieved within the horizon.
        #[arg(long)]
        strict: bool,
    },
    /// Run a scenario template over several network sizes and fit a log-log slope.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long = "n", value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seeds: usize,
        #[arg(long, value_enum, default_value_t = RegressorArg::N)]
        regressor: RegressorArg,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        plot: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit with status 3 when any cell exceeds its horizon.
        #[arg(long)]
        strict: bool,
    },
    /// Contraction time of a banded linear iteration from its worst-case vector.
    Spectral {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        /// Ignored by the `atrid` families.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        c: f64,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long = "n", value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare a static-law scenario with its rescheduled version.
    RescheduleCheck {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        s: usize,
        /// Blocks as a JSON array of agent-id arrays; round-robin by default.
        #[arg(long)]
        partition: Option<String>,
        /// Allowed trajectory gap at block boundaries.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RegressorArg {
    N,
    N2LogN,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Trid,
    Circ,
    AtridPlus,
    AtridMinus,
}

/// A failure that maps to a specific exit status.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("robonet: {e:#}");
            ExitCode::from(exit_status(&e))
        }
    }
}

fn exit_status(e: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = e.downcast_ref::<Exit>() {
        return *code;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Config(_)) => EXIT_CONFIG,
        _ => EXIT_FAILURE,
    }
}

fn load(path: &Path) -> Result<Scenario> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Exit(EXIT_CONFIG, format!("cannot read {}: {e}", path.display())))?;
    Scenario::from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn emit_json(value: &serde_json::Value, path: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("cannot write {}", p.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Run { config, trace, plot, report, strict } => {
            let sc = load(&config)?;
            let run = run_scenario(&sc)?;
            if let Some(path) = &trace {
                let out = create(path)?;
                if path.extension().is_some_and(|e| e == "jsonl") {
                    run.trace.write_jsonl(out)?;
                } else {
                    run.trace.write_csv(out)?;
                }
            }
            if let Some(path) = &plot {
                let svg = render_trajectories(&run.trace.positions())?;
                std::fs::write(path, svg).with_context(|| format!("cannot write {}", path.display()))?;
            }
            emit_json(&serde_json::to_value(&run.summary)?, report.as_deref())?;
            if strict && run.report().tc.tc().is_none() {
                return Err(
                    Exit(EXIT_HORIZON, format!("task not achieved within {} rounds", run.report().horizon)).into()
                );
            }
            Ok(())
        }
        Command::Sweep { config, ns, seeds, regressor, csv, plot, report, strict } => {
            let sc = load(&config)?;
            let regressor = match regressor {
                RegressorArg::N => Regressor::N,
                RegressorArg::N2LogN => Regressor::N2LogN,
            };
            let res = sweep(&sc, &ns, seeds, regressor)?;
            if let Some(path) = &csv {
                write_sweep_csv(&res, create(path)?)?;
            }
            if let Some(path) = &plot {
                emit_plot(&res, path)?;
            }
            emit_json(&serde_json::to_value(&res)?, report.as_deref())?;
            let missing = res.rows.iter().filter(|r| r.tc.is_none()).count();
            if strict && missing > 0 {
                return Err(Exit(EXIT_HORIZON, format!("{missing} sweep cell(s) exceeded the horizon")).into());
            }
            Ok(())
        }
        Command::Spectral { family, a, b, c, eps, ns, csv } => {
            let n0 = ns.first().copied().unwrap_or(2);
            let template = match family {
                FamilyArg::Trid => BandedMatrixSpec::trid(a, b, c, n0),
                FamilyArg::Circ => BandedMatrixSpec::circ(a, b, c, n0),
                FamilyArg::AtridPlus => BandedMatrixSpec::atrid(Sign::Plus, a, b, n0),
                FamilyArg::AtridMinus => BandedMatrixSpec::atrid(Sign::Minus, a, b, n0),
            };
            let rows = spectral_sweep(&template, &ns, eps)?;
            if let Some(path) = &csv {
                write_spectral_csv(&rows, create(path)?)?;
            }
            let pts: Vec<(usize, f64)> = rows.iter().map(|r| (r.n, r.measured as f64)).collect();
            let (fit, fit_error) = match fit_loglog(&pts, Regressor::N) {
                Ok(f) => (Some(f), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let rows: Vec<_> =
                rows.iter().map(|r| json!({"n": r.n, "measured": r.measured, "predicted": r.predicted})).collect();
            emit_json(&json!({"eps": eps, "rows": rows, "fit": fit, "fit_error": fit_error}), None)
        }
        Command::RescheduleCheck { config, s, partition, tol, strict } => {
            let sc = load(&config)?;
            let partition = partition
                .map(|p| serde_json::from_str::<Vec<Vec<usize>>>(&p))
                .transpose()
                .map_err(|e| Exit(EXIT_CONFIG, format!("bad --partition: {e}")))?;
            let rep = check_rescheduling(&sc, &ReschedulingConfig { s, partition })?;
            let holds = rep.holds(tol);
            let mut value = serde_json::to_value(&rep)?;
            value["holds"] = json!(holds);
            emit_json(&value, None)?;
            if strict && (rep.tc.tc().is_none() || rep.tc_resched.tc().is_none()) {
                return Err(Exit(EXIT_HORIZON, "task not achieved within the horizon".into()).into());
            }
            if !holds {
                return Err(Exit(EXIT_FAILURE, "rescheduling relations do not hold".into()).into());
            }
            Ok(())
        }
    }
}

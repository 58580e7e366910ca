//! Command-line front end: scenario runs, gauge audits and Trotter scans.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use floquet_meson::gauge::{gauge_audit, Boundary, LgtSystem};
use floquet_meson::hamiltonian::{trotter_scan, CouplingSign};
use floquet_meson::runner::config::parse_angle;
use floquet_meson::runner::presets::{describe, PRESET_NAMES};
use floquet_meson::runner::{emit, preset, run_scenario, OutputFormat, ScenarioConfig};
use floquet_meson::FloquetParams;

#[derive(Parser)]
#[command(name = "floquet-meson", version, about = "Floquet Ising chain scenarios and gauge checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a preset or a TOML scenario and write its time series.
    Run {
        #[arg(long, conflicts_with = "config", required_unless_present = "config")]
        preset: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<OutputFormat>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        shots: Option<usize>,
    },
    /// Certify gauge invariance of the dual drive cycle.
    GaugeAudit {
        #[arg(long)]
        sites: usize,
        #[arg(long, default_value = "open")]
        boundary: Boundary,
        #[arg(long, default_value_t = 20)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare one scaled drive cycle with exact evolution over a ladder of steps.
    TrotterScan {
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.025")]
        dt_list: Vec<f64>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long = "J", default_value = "pi/4", value_parser = angle)]
        coupling: f64,
        #[arg(long, default_value = "pi/10", value_parser = angle)]
        mu: f64,
        #[arg(long, default_value = "pi/8", value_parser = angle)]
        h: f64,
        #[arg(long, default_value = "match-cycle", value_parser = parse_sign)]
        sign: CouplingSign,
    },
    /// List the built-in scenarios.
    ListPresets,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn angle(s: &str) -> Result<f64, String> {
    parse_angle(s).map_err(|e| format!("{e}"))
}

fn parse_sign(s: &str) -> Result<CouplingSign, String> {
    match s {
        "match-cycle" | "match_cycle" => Ok(CouplingSign::MatchCycle),
        "ferromagnetic" => Ok(CouplingSign::Ferromagnetic),
        other => Err(format!("unknown sign {other:?} (match-cycle or ferromagnetic)")),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> floquet_meson::Result<ExitCode> {
    match cli.command {
        Command::Run {
            preset: name,
            config,
            out,
            format,
            seed,
            shots,
        } => {
            let mut cfg: ScenarioConfig = match (name, config) {
                (Some(n), _) => preset(&n)?,
                (None, Some(path)) => ScenarioConfig::from_file(&path)?,
                (None, None) => unreachable!("clap requires one of --preset/--config"),
            };
            if let Some(s) = seed {
                cfg.seed = Some(s);
            }
            if let Some(s) = shots {
                cfg.shots = Some(s);
            }
            if let Some(f) = format {
                cfg.output.format = f;
            }
            if let Some(p) = out {
                cfg.output.path = Some(p);
            }
            let manifest = run_scenario(&cfg)?;
            emit(&manifest, cfg.output.format, cfg.output.path.as_deref())?;
        }
        Command::GaugeAudit {
            sites,
            boundary,
            draws,
            seed,
        } => {
            let sys = LgtSystem::new(sites, boundary)?;
            let report = gauge_audit(&sys, draws, seed)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            if !report.passed() {
                eprintln!("gauge audit failed tolerance checks");
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::TrotterScan {
            dt_list,
            n,
            coupling,
            mu,
            h,
            sign,
        } => {
            let p = FloquetParams::new(n, coupling, mu, h)?;
            println!("dt,error,ratio");
            for pt in trotter_scan(&p, &dt_list, sign)? {
                let ratio = pt.ratio.map(|r| r.to_string()).unwrap_or_default();
                println!("{},{},{}", pt.dt, pt.error, ratio);
            }
        }
        Command::ListPresets => {
            for name in PRESET_NAMES {
                println!("{name:<12} {}", describe(name).unwrap_or(""));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

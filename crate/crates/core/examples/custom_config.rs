//! Loads a scenario from TOML and writes CSV to standard output.
//!
//!     cargo run --example custom_config -- examples/scenario.toml

use std::path::PathBuf;

use floquet_meson::runner::{emit, run_scenario, ScenarioConfig};

fn main() -> floquet_meson::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scenario.toml")));
    let cfg = ScenarioConfig::from_file(&path)?;
    let manifest = run_scenario(&cfg)?;
    eprintln!("{}: {} records", cfg.name, manifest.records.len());
    emit(&manifest, cfg.output.format, cfg.output.path.as_deref())
}

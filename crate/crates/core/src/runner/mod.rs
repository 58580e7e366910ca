//! Declarative scenarios: initial ket, drive parameters, engine and
//! observables in; a sorted list of time-series records out.

pub mod config;
pub mod emit;
pub mod presets;
pub mod run;

pub use config::{
    Engine, ObservableKind, ObservableSpec, OutputFormat, OutputSpec, ParamsSpec, ScenarioConfig,
};
pub use emit::{emit, to_csv_string, write_csv, write_json};
pub use presets::{preset, PRESET_NAMES};
pub use run::{run_scenario, ObservableRecord, RunManifest};

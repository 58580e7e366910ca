//! Ready-made quench scenarios on the eight-site chain.
//!
//! Every preset uses `J = π/4` and `μ = π/10` over `T = 15` cycles.

use std::f64::consts::PI;

use super::config::{
    Engine, ObservableKind, ObservableSpec, OutputSpec, ParamsSpec, ScenarioConfig,
};
use crate::gates::LayerOrder;
use crate::{Error, Result};

pub const PRESET_NAMES: [&str; 9] = [
    "fig2a",
    "fig2b",
    "fig2c",
    "fig2d",
    "fig3",
    "fig4_h8",
    "fig4_h4",
    "fig4_ham_h8",
    "fig4_ham_h4",
];

pub const PSI0: &str = "10000000";
pub const PSI1: &str = "00010000";
pub const PSI2: &str = "00111100";
pub const PSI3: &str = "00100100";

pub const CHAIN: usize = 8;
pub const CYCLES: usize = 15;
pub const COUPLING: f64 = PI / 4.0;
pub const TRANSVERSE: f64 = PI / 10.0;

/// One-line description shown by `list-presets`.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "fig2a" => "single kink |10000000>, h = 0: kink densities",
        "fig2b" => "single kink |10000000>, h = pi/10: kink densities",
        "fig2c" => "1-meson |00010000>, h = 0: kink densities",
        "fig2d" => "1-meson |00010000>, h = pi/8: kink densities",
        "fig3" => "4-meson |00111100>, h = pi/4: kinks, S_tot, D_tot, meson histogram",
        "fig4_h8" => "two 1-mesons |00100100>, h = pi/8: spin flips, N_1, N_4",
        "fig4_h4" => "two 1-mesons |00100100>, h = pi/4: spin flips, N_1, N_4",
        "fig4_ham_h8" => "as fig4_h8 under the time-independent Hamiltonian",
        "fig4_ham_h4" => "as fig4_h4 under the time-independent Hamiltonian",
        _ => return None,
    })
}

fn scenario(
    name: &str,
    engine: Engine,
    initial: &str,
    h: f64,
    observables: Vec<ObservableSpec>,
) -> ScenarioConfig {
    ScenarioConfig {
        name: name.to_string(),
        engine,
        initial: initial.parse().expect("preset ket is valid"),
        cycles: CYCLES,
        coupling_sign: None,
        shots: None,
        seed: None,
        params: ParamsSpec {
            n: CHAIN,
            coupling: COUPLING,
            mu: TRANSVERSE,
            h,
            layer_order: LayerOrder::Eq1,
        },
        observables,
        output: OutputSpec::default(),
    }
}

pub fn preset(name: &str) -> Result<ScenarioConfig> {
    use ObservableKind::*;
    let kinks = || vec![ObservableSpec::all(KinkDensity)];
    let scattering = || {
        vec![
            ObservableSpec::all(SpinFlipDensity),
            ObservableSpec::with_indices(MesonNumber, vec![1, 4]),
        ]
    };
    let cfg = match name {
        "fig2a" => scenario(name, Engine::Floquet, PSI0, 0.0, kinks()),
        "fig2b" => scenario(name, Engine::Floquet, PSI0, PI / 10.0, kinks()),
        "fig2c" => scenario(name, Engine::Floquet, PSI1, 0.0, kinks()),
        "fig2d" => scenario(name, Engine::Floquet, PSI1, PI / 8.0, kinks()),
        "fig3" => scenario(
            name,
            Engine::Floquet,
            PSI2,
            PI / 4.0,
            vec![
                ObservableSpec::all(KinkDensity),
                ObservableSpec::all(MesonHistogram),
                ObservableSpec::all(TotalKinks),
                ObservableSpec::all(TotalSpinFlips),
            ],
        ),
        "fig4_h8" => scenario(name, Engine::Floquet, PSI3, PI / 8.0, scattering()),
        "fig4_h4" => scenario(name, Engine::Floquet, PSI3, PI / 4.0, scattering()),
        "fig4_ham_h8" => scenario(name, Engine::Hamiltonian, PSI3, PI / 8.0, scattering()),
        "fig4_ham_h4" => scenario(name, Engine::Hamiltonian, PSI3, PI / 4.0, scattering()),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown preset {other:?}; known: {}",
                PRESET_NAMES.join(", ")
            )))
        }
    };
    debug_assert!(cfg.validate().is_ok());
    Ok(cfg)
}

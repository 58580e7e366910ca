#![allow(dead_code)]

pub mod goldens;

use floquet_meson::runner::{preset, run_scenario, ObservableKind, RunManifest};

pub fn run_preset(name: &str) -> RunManifest {
    run_scenario(&preset(name).unwrap()).unwrap()
}

/// Largest elementwise gap between two equal-length series.
pub fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Summed kink weight on bonds 2 and 3 (the two bonds touching site 3).
pub fn bonds_23(m: &RunManifest) -> Vec<f64> {
    let b2 = m.series(ObservableKind::KinkDensity, Some(2));
    let b3 = m.series(ObservableKind::KinkDensity, Some(3));
    b2.iter().zip(&b3).map(|(x, y)| x + y).collect()
}

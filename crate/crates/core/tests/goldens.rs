//! Preset trajectories against the frozen dense-matrix references.

mod common;

use common::goldens::*;
use common::{bonds_23, max_gap, run_preset};
use floquet_meson::runner::{preset, run_scenario, ObservableKind, ObservableSpec};

const TOL: f64 = 1e-10;

#[test]
fn spread_metric_trajectories() {
    for (name, golden) in [("fig2a", FIG2A_SPREAD), ("fig2b", FIG2B_SPREAD)] {
        let mut cfg = preset(name).unwrap();
        cfg.observables.push(ObservableSpec::all(ObservableKind::SpreadMetric));
        let got = run_scenario(&cfg).unwrap().series(ObservableKind::SpreadMetric, None);
        assert!(max_gap(&got, &golden) < TOL, "{name}");
    }
}

#[test]
fn meson_bond_weights() {
    assert!(max_gap(&bonds_23(&run_preset("fig2c")), &FIG2C_BONDS23) < TOL);
    assert!(max_gap(&bonds_23(&run_preset("fig2d")), &FIG2D_BONDS23) < TOL);
}

#[test]
fn string_breaking_trajectories() {
    let m = run_preset("fig3");
    let tol = 1e-9;
    assert!(max_gap(&m.series(ObservableKind::TotalSpinFlips, None), &FIG3_S_TOT) < tol);
    assert!(max_gap(&m.series(ObservableKind::TotalKinks, None), &FIG3_D_TOT) < tol);
    assert!(max_gap(&m.series(ObservableKind::MesonHistogram, Some(1)), &FIG3_N1) < tol);
    assert!(max_gap(&m.series(ObservableKind::MesonHistogram, Some(4)), &FIG3_N4) < tol);
}

#[test]
fn scattering_trajectories() {
    let cases = [
        ("fig4_h8", 1, FIG4_H8_N1),
        ("fig4_h8", 4, FIG4_H8_N4),
        ("fig4_h4", 1, FIG4_H4_N1),
        ("fig4_h4", 4, FIG4_H4_N4),
        ("fig4_ham_h4", 4, FIG4_HAM_H4_N4),
    ];
    for (name, len, golden) in cases {
        let got = run_preset(name).series(ObservableKind::MesonNumber, Some(len));
        assert!(max_gap(&got, &golden) < TOL, "{name} N_{len}");
    }
}

#[test]
fn longitudinal_field_is_invisible_after_one_cycle() {
    // The Z layer acts last and is diagonal.
    assert_eq!(FIG2C_BONDS23[1], FIG2D_BONDS23[1]);
    assert_eq!(FIG2A_SPREAD[1], FIG2B_SPREAD[1]);
    let a = bonds_23(&run_preset("fig2c"));
    let b = bonds_23(&run_preset("fig2d"));
    assert!((a[1] - b[1]).abs() < 1e-14);
}

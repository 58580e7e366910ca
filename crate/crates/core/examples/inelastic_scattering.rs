//! Two 1-mesons colliding. Compares the drive cycle with the
//! time-independent Hamiltonian for both field strengths.

use floquet_meson::runner::{preset, run_scenario, ObservableKind};

fn peak(xs: &[f64]) -> f64 {
    xs.iter().copied().fold(f64::MIN, f64::max)
}

fn main() -> floquet_meson::Result<()> {
    for name in ["fig4_h8", "fig4_h4", "fig4_ham_h8", "fig4_ham_h4"] {
        let m = run_scenario(&preset(name)?)?;
        let n1 = m.series(ObservableKind::MesonNumber, Some(1));
        let n4 = m.series(ObservableKind::MesonNumber, Some(4));
        println!(
            "{name:<12} N_1(15) = {:.4}  max N_4 = {:.4}",
            n1.last().unwrap(),
            peak(&n4)
        );
    }
    Ok(())
}

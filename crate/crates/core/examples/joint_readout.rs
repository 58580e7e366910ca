//! Shot-based estimates of meson numbers from simulated joint readout,
//! compared with exact expectation values.

use floquet_meson::observables::{meson_number, sample_bitstrings, sampled_meson_number};
use floquet_meson::runner::presets::PSI3;
use floquet_meson::{FloquetParams, StateVector};

fn main() -> floquet_meson::Result<()> {
    let p = FloquetParams::new(8, std::f64::consts::FRAC_PI_4, std::f64::consts::PI / 10.0, std::f64::consts::FRAC_PI_4)?;
    let mut psi = StateVector::basis_state(&PSI3.parse()?);
    for _ in 0..9 {
        p.apply_cycle(&mut psi)?;
    }
    println!("after 9 cycles:");
    for shots in [100, 1_000, 10_000, 100_000] {
        let counts = sample_bitstrings(&psi, shots, 17)?;
        println!(
            "  shots={shots:<7} N_1={:.4} N_4={:.4}",
            sampled_meson_number(&counts, 1),
            sampled_meson_number(&counts, 4)
        );
    }
    println!("  exact         N_1={:.4} N_4={:.4}", meson_number(&psi, 1)?, meson_number(&psi, 4)?);
    let counts = sample_bitstrings(&psi, 1000, 17)?;
    let mut top: Vec<_> = counts.into_iter().collect();
    top.sort_by_key(|e| std::cmp::Reverse(e.1));
    for (bits, c) in top.into_iter().take(5) {
        println!("  {bits} x{c}");
    }
    Ok(())
}

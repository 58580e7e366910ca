//! Kink weight next to a single flipped spin as the field is switched on.

use std::f64::consts::PI;

use floquet_meson::observables::kink_density;
use floquet_meson::runner::presets::{COUPLING, CYCLES, PSI1, TRANSVERSE};
use floquet_meson::{FloquetParams, StateVector};

fn main() -> floquet_meson::Result<()> {
    let ket = PSI1.parse()?;
    println!("{:>3} {:>10} {:>10}", "T", "h=0", "h=pi/8");
    let mut runs = Vec::new();
    for h in [0.0, PI / 8.0] {
        let p = FloquetParams::new(8, COUPLING, TRANSVERSE, h)?;
        let mut psi = StateVector::basis_state(&ket);
        let mut series = Vec::new();
        for _ in 0..=CYCLES {
            series.push(kink_density(&psi, 2)? + kink_density(&psi, 3)?);
            p.apply_cycle(&mut psi)?;
        }
        runs.push(series);
    }
    for t in 0..=CYCLES {
        println!("{t:>3} {:>10.4} {:>10.4}", runs[0][t], runs[1][t]);
    }
    Ok(())
}

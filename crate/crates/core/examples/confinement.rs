//! A single kink released from the chain edge, with and without a
//! longitudinal field. Prints the kink profile and its RMS spread per cycle.
//!
//!     cargo run --example confinement

use floquet_meson::observables::{kink_profile, spread_metric};
use floquet_meson::runner::presets::{COUPLING, CYCLES, PSI0, TRANSVERSE};
use floquet_meson::{BitString, FloquetParams, StateVector};

fn main() -> floquet_meson::Result<()> {
    let ket: BitString = PSI0.parse()?;
    for h in [0.0, std::f64::consts::PI / 10.0] {
        let params = FloquetParams::new(ket.len(), COUPLING, TRANSVERSE, h)?;
        let mut psi = StateVector::basis_state(&ket);
        let source = kink_profile(&psi).centroid().unwrap();
        println!("h = {h:.4}");
        for t in 0..=CYCLES {
            let profile = kink_profile(&psi);
            let row: Vec<String> = profile.bonds().iter().map(|w| format!("{w:.3}")).collect();
            println!("  T={t:>2}  spread {:.3}  [{}]", spread_metric(&profile, source)?, row.join(" "));
            params.apply_cycle(&mut psi)?;
        }
    }
    Ok(())
}

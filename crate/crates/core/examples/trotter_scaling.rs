// One drive cycle at angles scaled by dt against exp(-iHdt).

use std::f64::consts::PI;

use floquet_meson::hamiltonian::trotter_scan;
use floquet_meson::{CouplingSign, FloquetParams};

fn main() -> floquet_meson::Result<()> {
    let p = FloquetParams::new(4, PI / 4.0, PI / 10.0, PI / 8.0)?;
    let dts = [0.2, 0.1, 0.05, 0.025, 0.0125];
    for sign in [CouplingSign::MatchCycle, CouplingSign::Ferromagnetic] {
        println!("{sign:?}");
        for pt in trotter_scan(&p, &dts, sign)? {
            let ratio = pt.ratio.map(|r| format!("{r:.4}")).unwrap_or_else(|| "-".into());
            println!("  dt={:<7} error={:.4e} ratio={ratio}", pt.dt, pt.error);
        }
    }
    Ok(())
}

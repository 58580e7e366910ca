//! String breaking of a four-site meson at h = π/4, run through the
//! scenario runner and printed as a meson histogram per cycle.

use floquet_meson::runner::{preset, run_scenario, ObservableKind};

fn main() -> floquet_meson::Result<()> {
    let manifest = run_scenario(&preset("fig3")?)?;
    let s_tot = manifest.series(ObservableKind::TotalSpinFlips, None);
    let d_tot = manifest.series(ObservableKind::TotalKinks, None);
    println!("  T   S_tot  D_tot   N_1    N_2    N_3    N_4");
    for t in 0..s_tot.len() {
        let n: Vec<String> = (1..=4)
            .map(|l| {
                let v = manifest.value(t, ObservableKind::MesonHistogram, Some(l)).unwrap_or(0.0);
                format!("{v:.3}")
            })
            .collect();
        println!("{t:>3}  {:.3}  {:.3}  {}", s_tot[t], d_tot[t], n.join("  "));
    }
    Ok(())
}

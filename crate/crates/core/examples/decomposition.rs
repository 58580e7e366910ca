use floquet_meson::gates::{zz_decomposition, Gate};
use floquet_meson::{dense, C64};

fn main() -> floquet_meson::Result<()> {
    for j in [0.1, std::f64::consts::FRAC_PI_4, 1.3] {
        let seq = zz_decomposition(j);
        println!("J = {j:.4}, global phase {:.4}", seq.global_phase);
        for g in &seq.gates {
            match g {
                Gate::Rz { qubit, angle } => println!("  Rz(q{qubit}, {angle:.4})"),
                Gate::CPhase { control, target, angle } => {
                    println!("  CPhase(q{control}, q{target}, {angle:.4})")
                }
            }
        }
        let m = seq.matrix(2)?;
        let diag: Vec<String> = (0..4).map(|k| format!("{:.4}", m[(k, k)])).collect();
        println!("  diagonal {}", diag.join(", "));
        let mut off = m.clone();
        off.fill_diagonal(C64::new(0.0, 0.0));
        println!("  off-diagonal max {:.1e}", dense::max_abs(&off));
    }
    Ok(())
}

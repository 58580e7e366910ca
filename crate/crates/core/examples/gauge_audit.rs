//! Certifies that the dual lattice-gauge drive commutes with every local
//! generator on small open and periodic chains.

use floquet_meson::gauge::{gauge_audit, Boundary, LgtSystem};

fn main() -> floquet_meson::Result<()> {
    for boundary in [Boundary::Open, Boundary::Periodic] {
        for sites in [3, 4] {
            let sys = LgtSystem::new(sites, boundary)?;
            let audit = gauge_audit(&sys, 20, 0)?;
            println!(
                "{boundary:<8} sites={sites} qubits={:>2} max|[G,U]|={:.2e} passed={}",
                sys.n_qubits(),
                audit.max_generator_commutator,
                audit.passed()
            );
        }
    }
    Ok(())
}

//! Exact classical simulation of a digitally driven Floquet Ising chain.
//!
//! One drive cycle is
//!
//! ```text
//! U = exp(-i h Σ σz) · exp(-i μ Σ σx) · exp(i J H_zz),   H_zz = -Σ σz_j σz_{j+1}
//! ```
//!
//! on an open chain. The crate provides in-place statevector kernels for the
//! three layers, a dense-matrix oracle, the time-independent mixed-field
//! Ising Hamiltonian, the matter ⊗ gauge dual with its local Z2 generators,
//! the kink and meson observables, and a scenario runner that writes the
//! resulting time series as CSV or JSON.
//!
//! ```
//! use floquet_meson::{BitString, FloquetParams, StateVector};
//! use floquet_meson::observables::total_kinks;
//! use std::f64::consts::PI;
//!
//! let bits: BitString = "10000000".parse().unwrap();
//! let mut psi = StateVector::basis_state(&bits);
//! let params = FloquetParams::new(8, PI / 4.0, PI / 10.0, PI / 10.0).unwrap();
//! for _ in 0..15 {
//!     params.apply_cycle(&mut psi).unwrap();
//! }
//! assert!((psi.norm_sqr() - 1.0).abs() < 1e-10);
//! assert!(total_kinks(&psi) > 0.0);
//! ```

pub mod dense;
pub mod error;
pub mod gates;
pub mod gauge;
pub mod hamiltonian;
pub mod observables;
pub mod runner;
pub mod state;

pub use error::{Error, Result};
pub use gates::{FloquetParams, GateSequence, LayerOrder};
pub use hamiltonian::{CouplingSign, DenseHamiltonian};
pub use state::{BitString, StateVector};

/// Double-precision complex amplitude.
pub type C64 = num_complex::Complex64;

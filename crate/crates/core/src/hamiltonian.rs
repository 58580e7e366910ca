//! Time-independent mixed-field Ising chain and exact continuous-time
//! evolution.
//!
//! `H = s·J Σ σz_j σz_{j+1} + μ Σ σx_j + h Σ σz_j` on the open chain, where
//! the sign `s` of the Ising term is selected by [`CouplingSign`]. The drive
//! cycle `exp(-ihZ) exp(-iμX) exp(-iJ Σ σzσz)` is a first-order Trotter step
//! of the `s = +1` operator. The `s = -1` form is
//! [`CouplingSign::Ferromagnetic`].
//!
//! One Floquet cycle corresponds to `t = 1`.

use nalgebra::{DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::dense::{self, Matrix};
use crate::gates::{self, FloquetParams};
use crate::state::StateVector;
use crate::{Error, Result, C64};

pub const HAMILTONIAN_LIMIT: usize = 12;
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-10;

/// Sign of the Ising term relative to `J`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingSign {
    /// `+J Σ σzσz`: the generator whose Trotter step is the drive cycle.
    #[default]
    MatchCycle,
    /// `-J Σ σzσz`.
    Ferromagnetic,
}

impl CouplingSign {
    pub fn factor(self) -> f64 {
        match self {
            CouplingSign::MatchCycle => 1.0,
            CouplingSign::Ferromagnetic => -1.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DenseHamiltonian {
    pub n: usize,
    pub params: FloquetParams,
    pub sign: CouplingSign,
    pub matrix: Matrix,
}

/// Diagonal energy of basis index `i` (Ising + longitudinal terms).
fn diagonal_energy(i: usize, n: usize, ising: f64, h: f64) -> f64 {
    let bond_mask = (1usize << (n - 1)) - 1;
    let kinks = ((i ^ (i >> 1)) & bond_mask).count_ones() as f64;
    let zz_sum = (n - 1) as f64 - 2.0 * kinks;
    let mag = n as f64 - 2.0 * i.count_ones() as f64;
    ising * zz_sum + h * mag
}

pub fn build_hamiltonian(p: &FloquetParams, sign: CouplingSign) -> Result<DenseHamiltonian> {
    p.validate()?;
    let n = p.n;
    if n > HAMILTONIAN_LIMIT {
        return Err(Error::TooLarge {
            what: "dense Hamiltonian",
            qubits: n,
            limit: HAMILTONIAN_LIMIT,
        });
    }
    let dim = 1usize << n;
    let ising = sign.factor() * p.coupling;
    let mut m = Matrix::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = C64::new(diagonal_energy(i, n, ising, p.longitudinal), 0.0);
        for q in 0..n {
            m[(i ^ (1 << q), i)] += C64::new(p.transverse, 0.0);
        }
    }
    Ok(DenseHamiltonian {
        n,
        params: *p,
        sign,
        matrix: m,
    })
}

impl DenseHamiltonian {
    pub fn hermiticity_residual(&self) -> f64 {
        dense::hermiticity_residual(&self.matrix)
    }

    /// ⟨ψ|H|ψ⟩ (real part; the imaginary part vanishes for Hermitian H).
    pub fn expectation(&self, state: &StateVector) -> Result<f64> {
        let hpsi = dense::apply(&self.matrix, state)?;
        Ok(state.inner(&hpsi)?.re)
    }

    /// Full eigendecomposition, checked by its residual ‖HV − VΛ‖.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let eig = SymmetricEigen::new(self.matrix.clone());
        let lambda = Matrix::from_diagonal(&eig.eigenvalues.map(|e| C64::new(e, 0.0)));
        let residual = dense::max_abs(&(&self.matrix * &eig.eigenvectors - &eig.eigenvectors * lambda));
        if residual > EIGEN_RESIDUAL_TOL {
            return Err(Error::Numerical(format!(
                "eigensolver residual {residual:e} above {EIGEN_RESIDUAL_TOL:e}"
            )));
        }
        Ok(Spectrum {
            energies: eig.eigenvalues.iter().copied().collect(),
            vectors: eig.eigenvectors,
        })
    }

    /// `exp(-iHt)` as a dense matrix.
    pub fn propagator(&self, t: f64) -> Result<Matrix> {
        self.spectrum().map(|s| s.propagator(t))
    }
}

/// Eigenvalues and the unitary of column eigenvectors.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub energies: Vec<f64>,
    pub vectors: Matrix,
}

impl Spectrum {
    /// `exp(-iHt)|ψ⟩` with the phases applied in the eigenbasis.
    pub fn evolve(&self, state: &StateVector, t: f64) -> Result<StateVector> {
        let dim = self.energies.len();
        if state.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: state.dim(),
            });
        }
        let psi = DVector::from_column_slice(state.amplitudes());
        let mut coeffs = self.vectors.adjoint() * psi;
        for (c, &e) in coeffs.iter_mut().zip(&self.energies) {
            *c *= C64::from_polar(1.0, -e * t);
        }
        let out = &self.vectors * coeffs;
        StateVector::from_amplitudes(out.as_slice().to_vec())
    }

    pub fn propagator(&self, t: f64) -> Matrix {
        let phases = DVector::from_iterator(
            self.energies.len(),
            self.energies.iter().map(|&e| C64::from_polar(1.0, -e * t)),
        );
        &self.vectors * Matrix::from_diagonal(&phases) * self.vectors.adjoint()
    }
}

/// `exp(-iHt)·state` via [`DenseHamiltonian::spectrum`]. Callers evolving to
/// many times should keep the [`Spectrum`] instead.
pub fn exact_evolve(state: &StateVector, h: &DenseHamiltonian, t: f64) -> Result<StateVector> {
    h.spectrum()?.evolve(state, t)
}

/// ‖U_cycle(J·dt, μ·dt, h·dt) − exp(−i·H(J, μ, h)·dt)‖ in spectral norm.
pub fn trotter_error(p: &FloquetParams, dt: f64, sign: CouplingSign) -> Result<f64> {
    if p.n > gates::DENSE_UNITARY_LIMIT.min(HAMILTONIAN_LIMIT) {
        return Err(Error::TooLarge {
            what: "Trotter comparison",
            qubits: p.n,
            limit: gates::DENSE_UNITARY_LIMIT.min(HAMILTONIAN_LIMIT),
        });
    }
    let cycle = gates::dense_unitary(&p.scaled(dt))?;
    let exact = build_hamiltonian(p, sign)?.propagator(dt)?;
    Ok(dense::operator_norm(&(cycle - exact)))
}

/// One row of a Trotter ladder.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrotterPoint {
    pub dt: f64,
    pub error: f64,
    /// `error / previous error`; `None` on the first rung.
    pub ratio: Option<f64>,
}

/// [`trotter_error`] over a ladder of step sizes, with successive ratios.
pub fn trotter_scan(p: &FloquetParams, dts: &[f64], sign: CouplingSign) -> Result<Vec<TrotterPoint>> {
    let mut out: Vec<TrotterPoint> = Vec::with_capacity(dts.len());
    for &dt in dts {
        if !dt.is_finite() {
            return Err(Error::InvalidInput(format!("step {dt} is not finite")));
        }
        let error = trotter_error(p, dt, sign)?;
        let ratio = out.last().map(|prev| error / prev.error);
        out.push(TrotterPoint { dt, error, ratio });
    }
    Ok(out)
}

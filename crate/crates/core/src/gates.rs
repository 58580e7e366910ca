//! In-place kernels for the three Floquet layers and their dense oracle.
//!
//! All rotations use the literal convention `exp(-i·alpha·σ)`, no factor of
//! one half. The Ising layer `exp(i J H_zz)` with `H_zz = -Σ σz_j σz_{j+1}`
//! is the product of `exp(-i J σz_j σz_{j+1})` over the open-chain bonds
//! `j = 0..n-1`.

use serde::{Deserialize, Serialize};

use crate::dense::{self, Matrix};
use crate::state::StateVector;
use crate::{Error, Result, C64};

/// Largest chain for which [`dense_unitary`] will build a matrix.
pub const DENSE_UNITARY_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Z,
}

/// Order in which one cycle applies its layers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerOrder {
    /// ZZ, then X, then Z (the rightmost operator factor acts first).
    #[default]
    Eq1,
    /// X, then Z, then ZZ, as the circuit is drawn.
    Fig1b,
}

/// Drive angles and chain length for one Floquet family.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloquetParams {
    pub n: usize,
    /// Ising angle `J`.
    pub coupling: f64,
    /// Transverse-field angle `μ`.
    pub transverse: f64,
    /// Longitudinal-field angle `h`.
    pub longitudinal: f64,
    #[serde(default)]
    pub layer_order: LayerOrder,
}

impl FloquetParams {
    pub fn new(n: usize, coupling: f64, transverse: f64, longitudinal: f64) -> Result<Self> {
        let p = Self {
            n,
            coupling,
            transverse,
            longitudinal,
            layer_order: LayerOrder::Eq1,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_layer_order(mut self, order: LayerOrder) -> Self {
        self.layer_order = order;
        self
    }

    /// Same layer order and chain, every angle multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            coupling: self.coupling * factor,
            transverse: self.transverse * factor,
            longitudinal: self.longitudinal * factor,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidInput(format!(
                "chain length {} too short: the Ising layer needs at least one bond",
                self.n
            )));
        }
        if self.n > crate::state::MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "Floquet chain",
                qubits: self.n,
                limit: crate::state::MAX_QUBITS,
            });
        }
        for (name, v) in [
            ("J", self.coupling),
            ("mu", self.transverse),
            ("h", self.longitudinal),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!("angle {name} = {v} is not finite")));
            }
        }
        Ok(())
    }

    pub fn apply_cycle(&self, state: &mut StateVector) -> Result<()> {
        floquet_cycle(state, self)
    }
}

/// `exp(-i·alpha·σ^axis)` on one qubit.
pub fn apply_pauli_rotation(
    state: &mut StateVector,
    qubit: usize,
    axis: Axis,
    alpha: f64,
) -> Result<()> {
    let n = state.n_qubits();
    if qubit >= n {
        return Err(Error::OutOfRange {
            what: "qubit",
            index: qubit,
            limit: n,
        });
    }
    let mask = 1usize << qubit;
    let amps = state.amplitudes_mut();
    match axis {
        Axis::Z => {
            let (p0, p1) = (C64::from_polar(1.0, -alpha), C64::from_polar(1.0, alpha));
            for (i, a) in amps.iter_mut().enumerate() {
                *a *= if i & mask == 0 { p0 } else { p1 };
            }
        }
        Axis::X => {
            let c = C64::new(alpha.cos(), 0.0);
            let s = C64::new(0.0, -alpha.sin());
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let (a, b) = (amps[i], amps[i | mask]);
                    amps[i] = c * a + s * b;
                    amps[i | mask] = s * a + c * b;
                }
            }
        }
    }
    Ok(())
}

/// `exp(-i·theta·σz_j σz_{j+1})` on bond `j`.
pub fn apply_zz_phase(state: &mut StateVector, bond: usize, theta: f64) -> Result<()> {
    let n = state.n_qubits();
    if bond + 1 >= n {
        return Err(Error::OutOfRange {
            what: "bond",
            index: bond,
            limit: n.saturating_sub(1),
        });
    }
    let (aligned, anti) = (C64::from_polar(1.0, -theta), C64::from_polar(1.0, theta));
    for (i, a) in state.amplitudes_mut().iter_mut().enumerate() {
        let differ = ((i >> bond) ^ (i >> (bond + 1))) & 1 == 1;
        *a *= if differ { anti } else { aligned };
    }
    Ok(())
}

/// `exp(-i·alpha·Σ_j σx_j)`.
pub fn apply_x_layer(state: &mut StateVector, alpha: f64) {
    for q in 0..state.n_qubits() {
        apply_pauli_rotation(state, q, Axis::X, alpha).expect("qubit in range");
    }
}

/// `exp(-i·alpha·Σ_j σz_j)`, one diagonal sweep.
pub fn apply_z_layer(state: &mut StateVector, alpha: f64) {
    let n = state.n_qubits() as i64;
    for (i, a) in state.amplitudes_mut().iter_mut().enumerate() {
        let magnetization = n - 2 * i.count_ones() as i64;
        *a *= C64::from_polar(1.0, -alpha * magnetization as f64);
    }
}

/// `exp(-i·theta·Σ_j σz_j σz_{j+1})` over the open chain, one diagonal sweep.
pub fn apply_zz_layer(state: &mut StateVector, theta: f64) {
    let n = state.n_qubits();
    let bonds = n as i64 - 1;
    let bond_mask = (1usize << (n - 1)) - 1;
    for (i, a) in state.amplitudes_mut().iter_mut().enumerate() {
        let kinks = ((i ^ (i >> 1)) & bond_mask).count_ones() as i64;
        let zz_sum = bonds - 2 * kinks;
        *a *= C64::from_polar(1.0, -theta * zz_sum as f64);
    }
}

/// One Floquet cycle in the order selected by `p.layer_order`.
pub fn floquet_cycle(state: &mut StateVector, p: &FloquetParams) -> Result<()> {
    p.validate()?;
    state.check_qubits(p.n)?;
    match p.layer_order {
        LayerOrder::Eq1 => {
            apply_zz_layer(state, p.coupling);
            apply_x_layer(state, p.transverse);
            apply_z_layer(state, p.longitudinal);
        }
        LayerOrder::Fig1b => {
            apply_x_layer(state, p.transverse);
            apply_z_layer(state, p.longitudinal);
            apply_zz_layer(state, p.coupling);
        }
    }
    Ok(())
}

/// Runs `cycles` Floquet cycles, calling `recorder` at `t = 0` and after
/// every cycle. Returns the `cycles + 1` recorder outputs in time order.
pub fn evolve<R, F>(
    state: &mut StateVector,
    p: &FloquetParams,
    cycles: usize,
    mut recorder: F,
) -> Result<Vec<R>>
where
    F: FnMut(usize, &StateVector) -> Result<R>,
{
    p.validate()?;
    state.check_qubits(p.n)?;
    let mut out = Vec::with_capacity(cycles + 1);
    out.push(recorder(0, state)?);
    for t in 1..=cycles {
        floquet_cycle(state, p)?;
        out.push(recorder(t, state)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    /// `exp(-i·angle·σz)`.
    Rz { qubit: usize, angle: f64 },
    /// `diag(1, 1, 1, e^{i·angle})` on (control, target).
    CPhase {
        control: usize,
        target: usize,
        angle: f64,
    },
}

/// A gate list together with the global phase it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSequence {
    pub gates: Vec<Gate>,
    pub global_phase: C64,
}

impl GateSequence {
    /// The same gates relocated from qubits (0, 1) to `(a, b)`.
    pub fn on_qubits(&self, a: usize, b: usize) -> Self {
        let remap = |q: usize| if q == 0 { a } else { b };
        let gates = self
            .gates
            .iter()
            .map(|g| match *g {
                Gate::Rz { qubit, angle } => Gate::Rz {
                    qubit: remap(qubit),
                    angle,
                },
                Gate::CPhase {
                    control,
                    target,
                    angle,
                } => Gate::CPhase {
                    control: remap(control),
                    target: remap(target),
                    angle,
                },
            })
            .collect();
        Self {
            gates,
            global_phase: self.global_phase,
        }
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        let n = state.n_qubits();
        for g in &self.gates {
            match *g {
                Gate::Rz { qubit, angle } => apply_pauli_rotation(state, qubit, Axis::Z, angle)?,
                Gate::CPhase {
                    control,
                    target,
                    angle,
                } => {
                    for q in [control, target] {
                        if q >= n {
                            return Err(Error::OutOfRange {
                                what: "qubit",
                                index: q,
                                limit: n,
                            });
                        }
                    }
                    let mask = (1 << control) | (1 << target);
                    let phase = C64::from_polar(1.0, angle);
                    for (i, a) in state.amplitudes_mut().iter_mut().enumerate() {
                        if i & mask == mask {
                            *a *= phase;
                        }
                    }
                }
            }
        }
        let phase = self.global_phase;
        state.amplitudes_mut().iter_mut().for_each(|a| *a *= phase);
        Ok(())
    }

    /// Composed operator on an `n`-qubit register.
    pub fn matrix(&self, n: usize) -> Result<Matrix> {
        let dim = 1usize << n;
        let mut cols = Matrix::zeros(dim, dim);
        for c in 0..dim {
            let bits = crate::state::BitString::from_index(c, n)?;
            let mut psi = StateVector::basis_state(&bits);
            self.apply(&mut psi)?;
            for (r, a) in psi.amplitudes().iter().enumerate() {
                cols[(r, c)] = *a;
            }
        }
        Ok(cols)
    }
}

/// `exp(-i J σz⊗σz) = e^{iJ} · Rz_0(J) · Rz_1(J) · CPhase(-4J)`.
///
/// Writing `σz⊗σz = 1 - 2a - 2b + 4ab` for bit values `a, b` gives the phase
/// `e^{-iJ} e^{2iJa} e^{2iJb} e^{-4iJab}`. `Rz(J) = e^{-iJ} diag(1, e^{2iJ})`
/// supplies the single-bit factors. At `J = π/4` the controlled phase is CZ.
pub fn zz_decomposition(coupling: f64) -> GateSequence {
    GateSequence {
        gates: vec![
            Gate::Rz {
                qubit: 0,
                angle: coupling,
            },
            Gate::Rz {
                qubit: 1,
                angle: coupling,
            },
            Gate::CPhase {
                control: 0,
                target: 1,
                angle: -4.0 * coupling,
            },
        ],
        global_phase: C64::from_polar(1.0, coupling),
    }
}

/// Full-cycle matrix from Kronecker products of exact 2×2 and 4×4 blocks.
/// Independent of the statevector kernels; used as their oracle.
pub fn dense_unitary(p: &FloquetParams) -> Result<Matrix> {
    p.validate()?;
    if p.n > DENSE_UNITARY_LIMIT {
        return Err(Error::TooLarge {
            what: "dense Floquet unitary",
            qubits: p.n,
            limit: DENSE_UNITARY_LIMIT,
        });
    }
    let n = p.n;
    let x_site = dense::exp_involution(p.transverse, &dense::Pauli::X.matrix());
    let z_site = dense::diagonal_phases(&[p.longitudinal, -p.longitudinal]);
    let x_layer = dense::kron_sites(&vec![x_site; n]);
    let z_layer = dense::kron_sites(&vec![z_site; n]);
    let zz_bond = dense::diagonal_phases(&[p.coupling, -p.coupling, -p.coupling, p.coupling]);
    let zz_layer = (0..n - 1).fold(dense::identity(1 << n), |acc, j| {
        dense::embed_adjacent_pair(&zz_bond, j, n) * acc
    });
    Ok(match p.layer_order {
        LayerOrder::Eq1 => z_layer * x_layer * zz_layer,
        LayerOrder::Fig1b => zz_layer * z_layer * x_layer,
    })
}

//! Dense complex matrices for oracles and small exact computations.
//!
//! Row/column indices follow the statevector convention: qubit `j` is bit
//! `j` of the index. In Kronecker products the highest qubit is therefore
//! the leftmost factor.

use nalgebra::DMatrix;

use crate::state::StateVector;
use crate::{Error, Result, C64};

pub type Matrix = DMatrix<C64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> Matrix {
        let m = match self {
            Pauli::I => [ONE, ZERO, ZERO, ONE],
            Pauli::X => [ZERO, ONE, ONE, ZERO],
            Pauli::Y => [ZERO, -I, I, ZERO],
            Pauli::Z => [ONE, ZERO, ZERO, -ONE],
        };
        Matrix::from_row_slice(2, 2, &m)
    }
}

pub fn identity(dim: usize) -> Matrix {
    Matrix::identity(dim, dim)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kronecker(b)
}

/// `factors[j]` acts on qubit `j`; the product is `factors[n-1] ⊗ … ⊗ factors[0]`.
pub fn kron_sites(factors: &[Matrix]) -> Matrix {
    factors
        .iter()
        .rev()
        .fold(identity(1), |acc, f| acc.kronecker(f))
}

/// A 2×2 operator on `qubit`, identity elsewhere.
pub fn embed_single(op: &Matrix, qubit: usize, n: usize) -> Matrix {
    let factors: Vec<Matrix> = (0..n)
        .map(|q| if q == qubit { op.clone() } else { identity(2) })
        .collect();
    kron_sites(&factors)
}

/// A 4×4 operator on the adjacent pair `(low, low + 1)`. The 4×4 block is
/// indexed with `low` as the least-significant bit.
pub fn embed_adjacent_pair(op: &Matrix, low: usize, n: usize) -> Matrix {
    assert!(low + 1 < n);
    let above = identity(1 << (n - low - 2));
    let below = identity(1 << low);
    above.kronecker(op).kronecker(&below)
}

/// Tensor product of Paulis on the listed qubits, built directly as a
/// signed permutation. Qubits not listed carry the identity.
pub fn pauli_string(ops: &[(usize, Pauli)], n: usize) -> Matrix {
    let dim = 1usize << n;
    let mut flip = 0usize;
    for &(q, p) in ops {
        assert!(q < n, "qubit {q} outside {n}-qubit register");
        if matches!(p, Pauli::X | Pauli::Y) {
            flip ^= 1 << q;
        }
    }
    let mut m = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let mut phase = ONE;
        for &(q, p) in ops {
            let bit = col >> q & 1 == 1;
            phase *= match (p, bit) {
                (Pauli::I, _) | (Pauli::X, _) => ONE,
                (Pauli::Z, false) => ONE,
                (Pauli::Z, true) => -ONE,
                (Pauli::Y, false) => I,
                (Pauli::Y, true) => -I,
            };
        }
        m[(col ^ flip, col)] = phase;
    }
    m
}

/// `exp(-i·alpha·P)` for an involution `P` (`P² = 1`).
pub fn exp_involution(alpha: f64, p: &Matrix) -> Matrix {
    let dim = p.nrows();
    identity(dim) * C64::new(alpha.cos(), 0.0) - p * C64::new(0.0, alpha.sin())
}

/// Diagonal matrix `diag(exp(-i·phases))`.
pub fn diagonal_phases(phases: &[f64]) -> Matrix {
    Matrix::from_diagonal(&nalgebra::DVector::from_iterator(
        phases.len(),
        phases.iter().map(|&p| C64::from_polar(1.0, -p)),
    ))
}

pub fn dagger(m: &Matrix) -> Matrix {
    m.adjoint()
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a * b - b * a
}

pub fn anticommutator(a: &Matrix, b: &Matrix) -> Matrix {
    a * b + b * a
}

/// Exact spectral norm (largest singular value).
pub fn operator_norm(m: &Matrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .fold(0.0, |acc: f64, &s| acc.max(s))
}

/// Frobenius norm; an upper bound on [`operator_norm`] that avoids an SVD.
pub fn frobenius_norm(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// ‖U†U − 1‖_F.
pub fn unitarity_residual(u: &Matrix) -> f64 {
    frobenius_norm(&(u.adjoint() * u - identity(u.nrows())))
}

/// ‖H − H†‖_F.
pub fn hermiticity_residual(h: &Matrix) -> f64 {
    frobenius_norm(&(h - h.adjoint()))
}

pub fn apply(m: &Matrix, state: &StateVector) -> Result<StateVector> {
    if m.ncols() != state.dim() || m.nrows() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.ncols(),
            got: state.dim(),
        });
    }
    let v = nalgebra::DVector::from_column_slice(state.amplitudes());
    StateVector::from_amplitudes((m * v).as_slice().to_vec())
}

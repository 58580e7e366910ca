//! Dense statevectors over the computational basis of an `n`-qubit chain.
//!
//! Ket strings are written qubit-first: the leftmost character is `Q0`, so
//! `"00010000"` has only `Q3` excited. Internally `Q_j` is bit `j` of the
//! basis index (`Q0` is the least-significant bit). Everything outside this
//! module goes through [`BitString::index`] and [`BitString::from_index`],
//! never through the raw bit layout.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result, C64};

/// Largest register the dense representation accepts.
pub const MAX_QUBITS: usize = 24;

/// A computational-basis label, `Q0` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidInput("bit string must have at least one bit".into()));
        }
        if bits.len() > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "bit string",
                qubits: bits.len(),
                limit: MAX_QUBITS,
            });
        }
        Ok(Self { bits })
    }

    /// Inverse of [`BitString::index`].
    pub fn from_index(index: usize, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidInput(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
        }
        if index >> n != 0 {
            return Err(Error::OutOfRange {
                what: "basis",
                index,
                limit: 1 << n,
            });
        }
        Ok(Self {
            bits: (0..n).map(|q| index >> q & 1 == 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, qubit: usize) -> bool {
        self.bits[qubit]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Basis index of this label: `Q_j` contributes `2^j`.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (q, &b)| acc | (usize::from(b) << q))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Every bit inverted.
    pub fn flipped(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

/// Basis index of a ket string.
pub fn bitstring_index(bits: &BitString) -> usize {
    bits.index()
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidInput(format!(
                    "ket string {s:?} contains non-binary symbol {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}⟩")
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `2^n` complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// Unit vector on the basis state labelled by `bits`.
    pub fn basis_state(bits: &BitString) -> Self {
        let n = bits.len();
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[bits.index()] = C64::new(1.0, 0.0);
        Self { n, amps }
    }

    /// Wraps raw amplitudes. The length must be a power of two; the vector
    /// is taken as given, without normalization.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "amplitude count {len} is not 2^n for n >= 1"
            )));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "statevector",
                qubits: n,
                limit: MAX_QUBITS,
            });
        }
        Ok(Self { n, amps })
    }

    /// Haar-like random state: i.i.d. Gaussian components, normalized.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut gauss = || {
            // Box-Muller
            let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
            let u2: f64 = rng.random();
            (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
        };
        let mut amps: Vec<C64> = (0..1usize << n).map(|_| C64::new(gauss(), gauss())).collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        amps.iter_mut().for_each(|a| *a /= norm);
        Self { n, amps }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    pub fn amplitude(&self, bits: &BitString) -> C64 {
        self.amps[bits.index()]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// ⟨self|other⟩, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        self.check_same_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Entrywise |amplitude|², indexed like the amplitudes.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Largest |a_i − b_i| over all amplitudes.
    pub fn max_deviation(&self, other: &StateVector) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub(crate) fn check_same_dim(&self, other: &StateVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_qubits(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.n,
            });
        }
        Ok(())
    }
}

pub fn basis_state(bits: &BitString) -> StateVector {
    StateVector::basis_state(bits)
}

pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<C64> {
    a.inner(b)
}

pub fn probabilities(state: &StateVector) -> Vec<f64> {
    state.probabilities()
}

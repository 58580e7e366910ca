//! Kink, spin-flip and meson observables, plus seeded joint readout.
//!
//! A bit value 1 is a flipped spin. Bond `j` sits between sites `j` and
//! `j + 1` and carries the kink density `(1 − σz_j σz_{j+1})/2`. An
//! ℓ-meson is a maximal run of exactly ℓ ones. Sites beyond either end of
//! the open chain count as 0 under [`EdgeConvention::VirtualVacuum`], so a
//! run touching the boundary is still a meson.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::state::{BitString, StateVector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeConvention {
    /// Out-of-chain neighbours are fixed to 0.
    #[default]
    VirtualVacuum,
    /// A run touching either chain end is not counted.
    Excluded,
}

/// Convention used by [`meson_number`], [`meson_histogram`] and
/// [`count_mesons_bits`].
pub const EDGE_VACUUM: EdgeConvention = EdgeConvention::VirtualVacuum;

fn check_bond(state: &StateVector, bond: usize) -> Result<()> {
    let n = state.n_qubits();
    if bond + 1 >= n {
        return Err(Error::OutOfRange {
            what: "bond",
            index: bond,
            limit: n.saturating_sub(1),
        });
    }
    Ok(())
}

fn check_site(state: &StateVector, site: usize) -> Result<()> {
    if site >= state.n_qubits() {
        return Err(Error::OutOfRange {
            what: "site",
            index: site,
            limit: state.n_qubits(),
        });
    }
    Ok(())
}

/// Σ_i p_i · predicate(i).
fn diagonal_expectation(state: &StateVector, mut predicate: impl FnMut(usize) -> f64) -> f64 {
    state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| a.norm_sqr() * predicate(i))
        .sum()
}

pub fn kink_density(state: &StateVector, bond: usize) -> Result<f64> {
    check_bond(state, bond)?;
    Ok(diagonal_expectation(state, |i| {
        (((i >> bond) ^ (i >> (bond + 1))) & 1) as f64
    }))
}

/// Kink densities on bonds `0..n-1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KinkProfile(pub Vec<f64>);

impl KinkProfile {
    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn bonds(&self) -> &[f64] {
        &self.0
    }

    /// Weight-averaged bond position.
    pub fn centroid(&self) -> Option<f64> {
        let total = self.total();
        (total > 0.0).then(|| {
            self.0
                .iter()
                .enumerate()
                .map(|(b, &w)| b as f64 * w)
                .sum::<f64>()
                / total
        })
    }
}

pub fn kink_profile(state: &StateVector) -> KinkProfile {
    let n = state.n_qubits();
    let mut out = vec![0.0; n - 1];
    for (i, a) in state.amplitudes().iter().enumerate() {
        let p = a.norm_sqr();
        let kinks = (i ^ (i >> 1)) & ((1 << (n - 1)) - 1);
        for (b, slot) in out.iter_mut().enumerate() {
            if kinks >> b & 1 == 1 {
                *slot += p;
            }
        }
    }
    KinkProfile(out)
}

/// ⟨D_tot⟩ = Σ_j ⟨d_{j+1/2}⟩.
pub fn total_kinks(state: &StateVector) -> f64 {
    let n = state.n_qubits();
    let mask = (1usize << (n - 1)) - 1;
    diagonal_expectation(state, |i| ((i ^ (i >> 1)) & mask).count_ones() as f64)
}

/// ⟨S_tot⟩ = Σ_j ⟨σ⁺_j σ⁻_j⟩, the expected number of 1 bits.
pub fn total_spin_flips(state: &StateVector) -> f64 {
    diagonal_expectation(state, |i| i.count_ones() as f64)
}

/// ⟨σ⁺_j σ⁻_j⟩: probability that qubit `site` reads 1.
pub fn spin_flip_density(state: &StateVector, site: usize) -> Result<f64> {
    check_site(state, site)?;
    Ok(diagonal_expectation(state, |i| ((i >> site) & 1) as f64))
}

/// Bit masks `(ones, zeros)` of the projector `M_{j,ℓ}`: sites
/// `j..j+ℓ` set, the in-chain flanks `j−1` and `j+ℓ` clear. `None` when
/// the run does not fit or the convention excludes it.
fn meson_masks(n: usize, start: usize, len: usize, edge: EdgeConvention) -> Option<(usize, usize)> {
    if len == 0 || start + len > n {
        return None;
    }
    let touches_edge = start == 0 || start + len == n;
    if touches_edge && edge == EdgeConvention::Excluded {
        return None;
    }
    let ones = ((1usize << len) - 1) << start;
    let mut zeros = 0;
    if start > 0 {
        zeros |= 1 << (start - 1);
    }
    if start + len < n {
        zeros |= 1 << (start + len);
    }
    Some((ones, zeros))
}

/// ⟨N_ℓ⟩ = Σ_j ⟨M_{j,ℓ}⟩ from the diagonal projectors.
pub fn meson_number(state: &StateVector, len: usize) -> Result<f64> {
    meson_number_with(state, len, EDGE_VACUUM)
}

pub fn meson_number_with(state: &StateVector, len: usize, edge: EdgeConvention) -> Result<f64> {
    let n = state.n_qubits();
    if len == 0 || len > n {
        return Err(Error::OutOfRange {
            what: "meson length",
            index: len,
            limit: n + 1,
        });
    }
    let projectors: Vec<(usize, usize)> = (0..n)
        .filter_map(|j| meson_masks(n, j, len, edge))
        .collect();
    Ok(diagonal_expectation(state, |i| {
        projectors
            .iter()
            .filter(|&&(ones, zeros)| i & ones == ones && i & zeros == 0)
            .count() as f64
    }))
}

/// ⟨N_ℓ⟩ for every ℓ in `1..=n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MesonHistogram {
    pub n: usize,
    pub populations: BTreeMap<usize, f64>,
}

impl MesonHistogram {
    pub fn get(&self, len: usize) -> f64 {
        self.populations.get(&len).copied().unwrap_or(0.0)
    }

    /// Entries whose population exceeds `tol`.
    pub fn nonzero(&self, tol: f64) -> BTreeMap<usize, f64> {
        self.populations
            .iter()
            .filter(|(_, &v)| v.abs() > tol)
            .map(|(&k, &v)| (k, v))
            .collect()
    }

    /// Σ_ℓ ℓ·⟨N_ℓ⟩, which equals ⟨S_tot⟩ under the virtual-vacuum convention.
    pub fn weighted_sum(&self) -> f64 {
        self.populations.iter().map(|(&l, &v)| l as f64 * v).sum()
    }
}

pub fn meson_histogram(state: &StateVector) -> MesonHistogram {
    let n = state.n_qubits();
    let populations = (1..=n)
        .map(|l| (l, meson_number(state, l).expect("length in range")))
        .collect();
    MesonHistogram { n, populations }
}

/// Run-length count of maximal 1-runs, with the chain ends treated as 0.
pub fn count_mesons_bits(bits: &BitString) -> BTreeMap<usize, usize> {
    count_mesons_bits_with(bits, EDGE_VACUUM)
}

pub fn count_mesons_bits_with(bits: &BitString, edge: EdgeConvention) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    let n = bits.len();
    let mut q = 0;
    while q < n {
        if !bits.bit(q) {
            q += 1;
            continue;
        }
        let start = q;
        while q < n && bits.bit(q) {
            q += 1;
        }
        let touches_edge = start == 0 || q == n;
        if !(touches_edge && edge == EdgeConvention::Excluded) {
            *out.entry(q - start).or_insert(0) += 1;
        }
    }
    out
}

/// `shots` i.i.d. joint readouts of every qubit.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`; each shot
/// draws one uniform `f64` and inverts the cumulative distribution in basis
/// index order. The same `(state, shots, seed)` always gives the same counts.
pub fn sample_bitstrings(
    state: &StateVector,
    shots: usize,
    seed: u64,
) -> Result<BTreeMap<BitString, usize>> {
    if shots == 0 {
        return Err(Error::InvalidInput("shots must be at least 1".into()));
    }
    let mut cdf = Vec::with_capacity(state.dim());
    let mut acc = 0.0;
    for p in state.probabilities() {
        acc += p;
        cdf.push(acc);
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = vec![0usize; state.dim()];
    for _ in 0..shots {
        let u = rng.random::<f64>() * total;
        let idx = cdf.partition_point(|&c| c <= u).min(state.dim() - 1);
        hits[idx] += 1;
    }
    let n = state.n_qubits();
    hits.into_iter()
        .enumerate()
        .filter(|&(_, h)| h > 0)
        .map(|(i, h)| Ok((BitString::from_index(i, n)?, h)))
        .collect()
}

/// Shot-frequency estimate of ⟨N_ℓ⟩ from joint-readout counts.
pub fn sampled_meson_number(counts: &BTreeMap<BitString, usize>, len: usize) -> f64 {
    let shots: usize = counts.values().sum();
    if shots == 0 {
        return 0.0;
    }
    let hits: usize = counts
        .iter()
        .map(|(bits, &c)| c * count_mesons_bits(bits).get(&len).copied().unwrap_or(0))
        .sum();
    hits as f64 / shots as f64
}

/// Weight-normalized RMS distance of the kink profile from `source_bond`.
pub fn spread_metric(profile: &KinkProfile, source_bond: f64) -> Result<f64> {
    let total = profile.total();
    if total <= 0.0 {
        return Err(Error::InvalidInput("kink profile has zero total weight".into()));
    }
    let second_moment: f64 = profile
        .bonds()
        .iter()
        .enumerate()
        .map(|(b, &w)| {
            let d = b as f64 - source_bond;
            w * d * d
        })
        .sum();
    Ok((second_moment / total).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn ket(s: &str) -> StateVector {
        StateVector::basis_state(&s.parse().unwrap())
    }

    #[test]
    fn single_kink_state() {
        let psi = ket("10000000");
        let prof = kink_profile(&psi);
        assert_eq!(prof.bonds(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(kink_density(&psi, 0).unwrap(), 1.0);
        assert_eq!(total_kinks(&psi), 1.0);
        assert!(kink_density(&psi, 7).is_err());
    }

    #[test]
    fn four_meson_state() {
        let psi = ket("00111100");
        let prof = kink_profile(&psi);
        assert_eq!(prof.bonds(), &[0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(total_kinks(&psi), 2.0);
        assert_eq!(total_spin_flips(&psi), 4.0);
        assert_eq!(meson_number(&psi, 4).unwrap(), 1.0);
        for l in [1, 2, 3, 5, 6, 7, 8] {
            assert_eq!(meson_number(&psi, l).unwrap(), 0.0);
        }
    }

    #[test]
    fn two_one_mesons() {
        let psi = ket("00100100");
        assert_eq!(total_spin_flips(&psi), 2.0);
        assert_eq!(total_kinks(&psi), 4.0);
        assert_eq!(spin_flip_density(&psi, 2).unwrap(), 1.0);
        assert_eq!(spin_flip_density(&psi, 0).unwrap(), 0.0);
        assert!(spin_flip_density(&psi, 8).is_err());
        assert_eq!(meson_number(&psi, 1).unwrap(), 2.0);
        assert_eq!(meson_number(&ket("00010000"), 1).unwrap(), 1.0);
    }

    #[test]
    fn aligned_superposition_has_no_kinks() {
        let s = C64::new(FRAC_1_SQRT_2, 0.0);
        let z = C64::new(0.0, 0.0);
        let psi = StateVector::from_amplitudes(vec![s, z, z, s]).unwrap();
        assert!(kink_density(&psi, 0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn spin_flip_after_transverse_rotation() {
        let mu = 0.31;
        let mut psi = ket("0");
        crate::gates::apply_pauli_rotation(&mut psi, 0, crate::gates::Axis::X, mu).unwrap();
        assert!((spin_flip_density(&psi, 0).unwrap() - mu.sin().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn histograms() {
        let h = meson_histogram(&ket("11110000"));
        assert_eq!(h.nonzero(1e-12), BTreeMap::from([(4, 1.0)]));
        let h = meson_histogram(&ket("10101010"));
        assert_eq!(h.nonzero(1e-12), BTreeMap::from([(1, 4.0)]));
    }

    #[test]
    fn uniform_two_qubit_histogram_by_enumeration() {
        // Outcomes 00, 10, 01, 11 each with p = 1/4: "10" and "01" hold one
        // 1-meson, "11" one 2-meson.
        let psi = StateVector::from_amplitudes(vec![C64::new(0.5, 0.0); 4]).unwrap();
        let h = meson_histogram(&psi);
        assert!((h.get(1) - 0.5).abs() < 1e-15);
        assert!((h.get(2) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn meson_length_range() {
        let psi = ket("0110");
        assert!(meson_number(&psi, 0).is_err());
        assert!(meson_number(&psi, 5).is_err());
        assert_eq!(meson_number(&psi, 2).unwrap(), 1.0);
    }

    #[test]
    fn run_length_scan() {
        let c = |s: &str| count_mesons_bits(&s.parse().unwrap());
        assert_eq!(c("00111100"), BTreeMap::from([(4, 1)]));
        assert_eq!(c("11011011"), BTreeMap::from([(2, 3)]));
        assert!(c("00000000").is_empty());
        assert_eq!(c("11111111"), BTreeMap::from([(8, 1)]));
    }

    #[test]
    fn excluded_edges_drop_boundary_runs() {
        let bits: BitString = "11011011".parse().unwrap();
        assert_eq!(
            count_mesons_bits_with(&bits, EdgeConvention::Excluded),
            BTreeMap::from([(2, 1)])
        );
        let psi = StateVector::basis_state(&bits);
        assert_eq!(meson_number_with(&psi, 2, EdgeConvention::Excluded).unwrap(), 1.0);
    }

    #[test]
    fn sampling_basis_state() {
        let counts = sample_bitstrings(&ket("0110"), 1000, 42).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&"0110".parse::<BitString>().unwrap()], 1000);
        assert!(sample_bitstrings(&ket("0110"), 0, 42).is_err());
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let mut rng = <ChaCha8Rng as SeedableRng>::seed_from_u64(2);
        let psi = StateVector::random(4, &mut rng);
        let a = sample_bitstrings(&psi, 5000, 9).unwrap();
        let b = sample_bitstrings(&psi, 5000, 9).unwrap();
        let c = sample_bitstrings(&psi, 5000, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.values().sum::<usize>(), 5000);
    }

    #[test]
    fn balanced_coin_within_five_sigma() {
        let s = C64::new(FRAC_1_SQRT_2, 0.0);
        let psi = StateVector::from_amplitudes(vec![s, s]).unwrap();
        let shots = 100_000;
        let counts = sample_bitstrings(&psi, shots, 1234).unwrap();
        let ones = counts.get(&"1".parse::<BitString>().unwrap()).copied().unwrap_or(0);
        let sigma = (shots as f64 * 0.25).sqrt();
        assert!((ones as f64 - shots as f64 / 2.0).abs() < 5.0 * sigma);
    }

    #[test]
    fn spread_metric_cases() {
        let at_source = KinkProfile(vec![0.0, 1.0, 0.0]);
        assert_eq!(spread_metric(&at_source, 1.0).unwrap(), 0.0);
        let split = KinkProfile(vec![0.5, 0.0, 0.5]);
        assert!((spread_metric(&split, 1.0).unwrap() - 1.0).abs() < 1e-15);
        let uniform = KinkProfile(vec![1.0 / 7.0; 7]);
        let want = ((0..7).map(|d| (d * d) as f64).sum::<f64>() / 7.0).sqrt();
        assert!((spread_metric(&uniform, 0.0).unwrap() - want).abs() < 1e-14);
        assert!(spread_metric(&KinkProfile(vec![0.0; 3]), 0.0).is_err());
    }
}

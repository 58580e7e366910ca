use floquet_meson::observables::{meson_number, sample_bitstrings, sampled_meson_number};
use floquet_meson::StateVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn frequencies_converge_within_three_sigma() {
    let psi = StateVector::random(4, &mut ChaCha8Rng::seed_from_u64(5));
    let shots = 100_000;
    let counts = sample_bitstrings(&psi, shots, 99).unwrap();
    assert_eq!(counts.values().sum::<usize>(), shots);
    let probs = psi.probabilities();
    for (bits, &c) in &counts {
        let p = probs[bits.index()];
        let sigma = (p * (1.0 - p) / shots as f64).sqrt();
        let f = c as f64 / shots as f64;
        assert!((f - p).abs() < 3.0 * sigma + 1e-12, "{bits}: {f} vs {p}");
    }
}

#[test]
fn sampled_meson_numbers_track_exact_values() {
    let psi = StateVector::random(6, &mut ChaCha8Rng::seed_from_u64(8));
    let shots = 100_000;
    let counts = sample_bitstrings(&psi, shots, 3).unwrap();
    for len in 1..=3 {
        let exact = meson_number(&psi, len).unwrap();
        let est = sampled_meson_number(&counts, len);
        // N_ℓ ≤ 3 on six sites, so its variance is at most 9/4.
        assert!((est - exact).abs() < 3.0 * (2.25 / shots as f64).sqrt(), "N_{len}");
    }
}

#[test]
fn same_seed_same_counts() {
    let psi = StateVector::random(5, &mut ChaCha8Rng::seed_from_u64(1));
    let a = sample_bitstrings(&psi, 5000, 42).unwrap();
    let b = sample_bitstrings(&psi, 5000, 42).unwrap();
    let c = sample_bitstrings(&psi, 5000, 43).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn zero_shots_is_an_error() {
    let psi = StateVector::random(2, &mut ChaCha8Rng::seed_from_u64(1));
    assert!(sample_bitstrings(&psi, 0, 0).is_err());
}

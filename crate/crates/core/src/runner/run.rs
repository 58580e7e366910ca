use std::time::Instant;

use serde::Serialize;

use super::config::{Engine, ObservableKind, ObservableSpec, ScenarioConfig};
use crate::hamiltonian::{build_hamiltonian, CouplingSign};
use crate::observables as obs;
use crate::state::StateVector;
use crate::{gates, Result, C64};

/// One sample of one time series.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObservableRecord {
    pub cycle: usize,
    pub observable: ObservableKind,
    /// Bond, site or string length; `None` for scalars.
    pub index: Option<usize>,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub config: ScenarioConfig,
    pub version: String,
    pub wall_clock_seconds: f64,
    pub records: Vec<ObservableRecord>,
}

impl RunManifest {
    /// Values of one series in cycle order.
    pub fn series(&self, observable: ObservableKind, index: Option<usize>) -> Vec<f64> {
        self.records
            .iter()
            .filter(|r| r.observable == observable && r.index == index)
            .map(|r| r.value)
            .collect()
    }

    pub fn value(&self, cycle: usize, observable: ObservableKind, index: Option<usize>) -> Option<f64> {
        self.records
            .iter()
            .find(|r| r.cycle == cycle && r.observable == observable && r.index == index)
            .map(|r| r.value)
    }
}

/// Number of records each snapshot contributes.
pub fn components_per_cycle(cfg: &ScenarioConfig) -> usize {
    cfg.observables
        .iter()
        .map(|s| s.resolved_indices(cfg.params.n).len().max(1))
        .sum()
}

struct Recorder<'a> {
    cfg: &'a ScenarioConfig,
    spread_source: Option<f64>,
}

impl Recorder<'_> {
    fn record(&mut self, cycle: usize, state: &StateVector, out: &mut Vec<ObservableRecord>) -> Result<()> {
        let n = self.cfg.params.n;
        let measured;
        let state = match self.cfg.shots {
            Some(shots) => {
                let seed = self.cfg.seed.unwrap_or(0).wrapping_add(cycle as u64);
                measured = empirical_state(state, shots, seed)?;
                &measured
            }
            None => state,
        };
        let start = out.len();
        for spec in &self.cfg.observables {
            self.record_one(spec, n, cycle, state, out)?;
        }
        out[start..].sort_by_key(|r| (r.observable, r.index));
        Ok(())
    }

    fn record_one(
        &mut self,
        spec: &ObservableSpec,
        n: usize,
        cycle: usize,
        state: &StateVector,
        out: &mut Vec<ObservableRecord>,
    ) -> Result<()> {
        let mut push = |index: Option<usize>, value: f64| {
            out.push(ObservableRecord {
                cycle,
                observable: spec.name,
                index,
                value,
            })
        };
        match spec.name {
            ObservableKind::KinkDensity => {
                let profile = obs::kink_profile(state);
                for b in spec.resolved_indices(n) {
                    push(Some(b), profile.bonds()[b]);
                }
            }
            ObservableKind::SpinFlipDensity => {
                for s in spec.resolved_indices(n) {
                    push(Some(s), obs::spin_flip_density(state, s)?);
                }
            }
            ObservableKind::MesonNumber => {
                for l in spec.resolved_indices(n) {
                    push(Some(l), obs::meson_number(state, l)?);
                }
            }
            ObservableKind::MesonHistogram => {
                let h = obs::meson_histogram(state);
                for (&l, &v) in &h.populations {
                    push(Some(l), v);
                }
            }
            ObservableKind::TotalKinks => push(None, obs::total_kinks(state)),
            ObservableKind::TotalSpinFlips => push(None, obs::total_spin_flips(state)),
            ObservableKind::SpreadMetric => {
                let profile = obs::kink_profile(state);
                let source = match (spec.source, self.spread_source) {
                    (Some(s), _) | (None, Some(s)) => s,
                    (None, None) => {
                        let c = profile.centroid().ok_or_else(|| {
                            crate::Error::config(
                                "observables.spread_metric",
                                "initial state has no kinks; set `source`",
                            )
                        })?;
                        self.spread_source = Some(c);
                        c
                    }
                };
                push(None, obs::spread_metric(&profile, source)?);
            }
        }
        Ok(())
    }
}

/// A state whose probabilities are the shot frequencies of a joint readout.
/// Every observable here is diagonal, so it sees exactly the sampled estimate.
fn empirical_state(state: &StateVector, shots: usize, seed: u64) -> Result<StateVector> {
    let counts = obs::sample_bitstrings(state, shots, seed)?;
    let mut amps = vec![C64::new(0.0, 0.0); state.dim()];
    for (bits, c) in counts {
        amps[bits.index()] = C64::new((c as f64 / shots as f64).sqrt(), 0.0);
    }
    StateVector::from_amplitudes(amps)
}

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<RunManifest> {
    let started = Instant::now();
    cfg.validate()?;
    let params = cfg.floquet_params()?;
    let mut psi = StateVector::basis_state(&cfg.initial);
    let mut recorder = Recorder {
        cfg,
        spread_source: None,
    };
    let mut records = Vec::with_capacity((cfg.cycles + 1) * components_per_cycle(cfg));

    match cfg.engine {
        Engine::Floquet => {
            gates::evolve(&mut psi, &params, cfg.cycles, |t, state| {
                recorder.record(t, state, &mut records)
            })?;
        }
        Engine::Hamiltonian => {
            let sign = cfg.coupling_sign.unwrap_or(CouplingSign::MatchCycle);
            let spectrum = build_hamiltonian(&params, sign)?.spectrum()?;
            for t in 0..=cfg.cycles {
                let state = spectrum.evolve(&psi, t as f64)?;
                recorder.record(t, &state, &mut records)?;
            }
            psi = spectrum.evolve(&psi, cfg.cycles as f64)?;
        }
    }
    let drift = (psi.norm_sqr() - 1.0).abs();
    if drift > 1e-10 {
        return Err(crate::Error::Numerical(format!("final norm drift {drift:e}")));
    }

    Ok(RunManifest {
        config: cfg.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_clock_seconds: started.elapsed().as_secs_f64(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::presets::preset;

    #[test]
    fn fig2a_shape() {
        let m = run_scenario(&preset("fig2a").unwrap()).unwrap();
        assert_eq!(m.records.len(), 16 * 7);
        assert!(m.records.iter().all(|r| r.observable == ObservableKind::KinkDensity));
        assert_eq!(m.value(0, ObservableKind::KinkDensity, Some(0)), Some(1.0));
        let keys: Vec<_> = m.records.iter().map(|r| (r.cycle, r.observable, r.index)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn zero_cycles_gives_initial_row() {
        let mut cfg = preset("fig3").unwrap();
        cfg.cycles = 0;
        let m = run_scenario(&cfg).unwrap();
        assert_eq!(m.records.len(), components_per_cycle(&cfg));
        assert!(m.records.iter().all(|r| r.cycle == 0));
        assert_eq!(m.value(0, ObservableKind::TotalSpinFlips, None), Some(4.0));
        assert_eq!(m.value(0, ObservableKind::MesonHistogram, Some(4)), Some(1.0));
    }

    #[test]
    fn record_count_matches_components() {
        for name in crate::runner::presets::PRESET_NAMES {
            let cfg = preset(name).unwrap();
            let m = run_scenario(&cfg).unwrap();
            assert_eq!(m.records.len(), 16 * components_per_cycle(&cfg), "{name}");
        }
    }

    #[test]
    fn spread_metric_defaults_to_initial_centroid() {
        let mut cfg = preset("fig2b").unwrap();
        cfg.observables.push(ObservableSpec::all(ObservableKind::SpreadMetric));
        let m = run_scenario(&cfg).unwrap();
        let series = m.series(ObservableKind::SpreadMetric, None);
        assert_eq!(series.len(), 16);
        assert_eq!(series[0], 0.0);
        assert!(series[15] > 0.0);
    }

    #[test]
    fn shot_estimates_are_seeded() {
        let mut cfg = preset("fig4_h4").unwrap();
        cfg.shots = Some(500);
        cfg.seed = Some(3);
        let a = run_scenario(&cfg).unwrap();
        let b = run_scenario(&cfg).unwrap();
        assert_eq!(a.records, b.records);
        cfg.seed = Some(4);
        let c = run_scenario(&cfg).unwrap();
        assert_ne!(a.records, c.records);
        // Frequencies are multiples of 1/shots.
        for r in &a.records {
            if r.observable == ObservableKind::SpinFlipDensity {
                let k = r.value * 500.0;
                assert!((k - k.round()).abs() < 1e-6);
            }
        }
    }
}

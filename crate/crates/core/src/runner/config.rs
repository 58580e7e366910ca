//! Scenario configuration and its TOML form.
//!
//! ```toml
//! name = "fig2a"
//! engine = "floquet"            # or "hamiltonian"
//! initial = "10000000"          # ket string, Q0 first
//! cycles = 15
//! # coupling_sign = "match_cycle"   # hamiltonian engine only; or "ferromagnetic"
//! # shots = 2000                    # estimate observables from joint readout
//! # seed = 7
//!
//! [params]
//! n = 8
//! J = "pi/4"                    # number or multiple of pi
//! mu = "pi/10"
//! h = 0
//! layer_order = "eq1"           # or "fig1b"
//!
//! [[observables]]
//! name = "kink_density"         # indices default to every bond
//!
//! [output]
//! format = "csv"                # or "json"
//! path = "fig2a.csv"
//! ```
//!
//! Unknown keys are rejected.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::gates::{FloquetParams, LayerOrder};
use crate::hamiltonian::CouplingSign;
use crate::state::BitString;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Floquet,
    Hamiltonian,
}

/// Observable names as they appear in configs and output files. Declared in
/// lexicographic order of those names, which is also the record sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObservableKind {
    KinkDensity,
    MesonHistogram,
    MesonNumber,
    SpinFlipDensity,
    SpreadMetric,
    TotalKinks,
    TotalSpinFlips,
}

impl ObservableKind {
    pub const ALL: [ObservableKind; 7] = [
        ObservableKind::KinkDensity,
        ObservableKind::MesonHistogram,
        ObservableKind::MesonNumber,
        ObservableKind::SpinFlipDensity,
        ObservableKind::SpreadMetric,
        ObservableKind::TotalKinks,
        ObservableKind::TotalSpinFlips,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObservableKind::KinkDensity => "kink_density",
            ObservableKind::MesonHistogram => "meson_histogram",
            ObservableKind::MesonNumber => "meson_number",
            ObservableKind::SpinFlipDensity => "spin_flip_density",
            ObservableKind::SpreadMetric => "spread_metric",
            ObservableKind::TotalKinks => "total_kinks",
            ObservableKind::TotalSpinFlips => "total_spin_flips",
        }
    }

    pub fn is_scalar(self) -> bool {
        matches!(
            self,
            ObservableKind::SpreadMetric | ObservableKind::TotalKinks | ObservableKind::TotalSpinFlips
        )
    }

    /// Every valid index on an `n`-site chain: bonds, sites or lengths.
    pub fn default_indices(self, n: usize) -> Vec<usize> {
        match self {
            ObservableKind::KinkDensity => (0..n - 1).collect(),
            ObservableKind::SpinFlipDensity => (0..n).collect(),
            ObservableKind::MesonNumber | ObservableKind::MesonHistogram => (1..=n).collect(),
            _ => Vec::new(),
        }
    }

    fn index_valid(self, index: usize, n: usize) -> bool {
        match self {
            ObservableKind::KinkDensity => index + 1 < n,
            ObservableKind::SpinFlipDensity => index < n,
            ObservableKind::MesonNumber => (1..=n).contains(&index),
            _ => false,
        }
    }
}

impl fmt::Display for ObservableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObservableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObservableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::config("observables.name", format!("unknown observable {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservableSpec {
    pub name: ObservableKind,
    /// Bond, site or string length, depending on `name`. Omitted means all.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    /// Reference bond for `spread_metric`; defaults to the t = 0 kink centroid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<f64>,
}

impl ObservableSpec {
    pub fn all(name: ObservableKind) -> Self {
        Self {
            name,
            indices: None,
            source: None,
        }
    }

    pub fn with_indices(name: ObservableKind, indices: Vec<usize>) -> Self {
        Self {
            name,
            indices: Some(indices),
            source: None,
        }
    }

    /// Resolved index list; empty for scalar observables.
    pub fn resolved_indices(&self, n: usize) -> Vec<usize> {
        match (&self.indices, self.name) {
            (_, ObservableKind::MesonHistogram) => self.name.default_indices(n),
            (_, k) if k.is_scalar() => Vec::new(),
            (Some(ix), _) => ix.clone(),
            (None, k) => k.default_indices(n),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::config("output.format", format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default)]
    pub format: OutputFormat,
    /// Destination file; standard output when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

/// Drive angles as written in a config: plain numbers or multiples of π
/// such as `"pi/4"`, `"-3*pi/8"`, `"0.5pi"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSpec {
    pub n: usize,
    #[serde(rename = "J", deserialize_with = "de_angle")]
    pub coupling: f64,
    #[serde(deserialize_with = "de_angle")]
    pub mu: f64,
    #[serde(deserialize_with = "de_angle")]
    pub h: f64,
    #[serde(default)]
    pub layer_order: LayerOrder,
}

impl ParamsSpec {
    pub fn to_params(&self) -> Result<FloquetParams> {
        FloquetParams::new(self.n, self.coupling, self.mu, self.h)
            .map(|p| p.with_layer_order(self.layer_order))
            .map_err(|e| Error::config("params", e.to_string()))
    }
}

impl From<FloquetParams> for ParamsSpec {
    fn from(p: FloquetParams) -> Self {
        Self {
            n: p.n,
            coupling: p.coupling,
            mu: p.transverse,
            h: p.longitudinal,
            layer_order: p.layer_order,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub engine: Engine,
    pub initial: BitString,
    pub cycles: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coupling_sign: Option<CouplingSign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shots: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub params: ParamsSpec,
    pub observables: Vec<ObservableSpec>,
    #[serde(default)]
    pub output: OutputSpec,
}

impl ScenarioConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: ScenarioConfig =
            toml::from_str(s).map_err(|e| Error::config("toml", e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::config("toml", e.to_string()))
    }

    pub fn floquet_params(&self) -> Result<FloquetParams> {
        self.params.to_params()
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.floquet_params()?;
        if self.initial.len() != p.n {
            return Err(Error::config(
                "initial",
                format!(
                    "ket {} has {} qubits but params.n = {}",
                    self.initial,
                    self.initial.len(),
                    p.n
                ),
            ));
        }
        if self.observables.is_empty() {
            return Err(Error::config("observables", "at least one observable is required"));
        }
        if self.shots == Some(0) {
            return Err(Error::config("shots", "must be at least 1 when given"));
        }
        if self.coupling_sign.is_some() && self.engine != Engine::Hamiltonian {
            return Err(Error::config(
                "coupling_sign",
                "only meaningful with engine = \"hamiltonian\"",
            ));
        }
        if self.engine == Engine::Hamiltonian && p.n > crate::hamiltonian::HAMILTONIAN_LIMIT {
            return Err(Error::config(
                "params.n",
                format!(
                    "hamiltonian engine supports n <= {}",
                    crate::hamiltonian::HAMILTONIAN_LIMIT
                ),
            ));
        }
        let mut seen = Vec::new();
        for (k, spec) in self.observables.iter().enumerate() {
            let field = format!("observables[{k}]");
            if seen.contains(&spec.name) {
                return Err(Error::config(field, format!("{} listed twice", spec.name)));
            }
            seen.push(spec.name);
            if let Some(ix) = &spec.indices {
                if spec.name.is_scalar() || spec.name == ObservableKind::MesonHistogram {
                    return Err(Error::config(
                        format!("{field}.indices"),
                        format!("{} takes no indices", spec.name),
                    ));
                }
                if ix.is_empty() {
                    return Err(Error::config(format!("{field}.indices"), "empty index list"));
                }
                let mut sorted = ix.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != ix.len() {
                    return Err(Error::config(format!("{field}.indices"), "duplicate index"));
                }
                if let Some(bad) = ix.iter().find(|&&i| !spec.name.index_valid(i, p.n)) {
                    return Err(Error::config(
                        format!("{field}.indices"),
                        format!("{bad} out of range for {} on n = {}", spec.name, p.n),
                    ));
                }
            }
            if spec.source.is_some() && spec.name != ObservableKind::SpreadMetric {
                return Err(Error::config(
                    format!("{field}.source"),
                    "only spread_metric takes a source",
                ));
            }
            if let Some(s) = spec.source {
                if !s.is_finite() {
                    return Err(Error::config(format!("{field}.source"), "must be finite"));
                }
            }
        }
        Ok(())
    }
}

/// Parses `"pi/4"`, `"-3*pi/8"`, `"2pi"`, `"0.25*pi"` or a plain number.
pub fn parse_angle(text: &str) -> Result<f64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let bad = || Error::config("angle", format!("cannot parse {text:?}"));
    let Some(pos) = s.find("pi").or_else(|| s.find('π')) else {
        return s.parse::<f64>().map_err(|_| bad());
    };
    let token_len = if s[pos..].starts_with("pi") { 2 } else { 'π'.len_utf8() };
    let (head, tail) = (&s[..pos], &s[pos + token_len..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coeff = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    let denom = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .ok_or_else(bad)?
            .parse::<f64>()
            .map_err(|_| bad())?,
    };
    let v = coeff * std::f64::consts::PI / denom;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

fn de_angle<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Float(f64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Int(i) => Ok(i as f64),
        Raw::Float(f) => Ok(f),
        Raw::Text(t) => parse_angle(&t).map_err(serde::de::Error::custom),
    }
}

//! Matter ⊗ gauge dual of the drive cycle.
//!
//! Bond spins are mapped to link spins `τ` and the bond-flip `σx` to the
//! string `s^x_j τ^z_{j+1/2} s^x_{j+1}`. The enlarged register interleaves
//! matter sites and links as `s_0, τ_{1/2}, s_1, τ_{3/2}, …`, so site `j`
//! is qubit `2j` and link `j+1/2` is qubit `2j+1`. Under [`Boundary::Periodic`]
//! the extra link `τ_{n-1/2}` closes the ring between `s_{n-1}` and `s_0`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dense::{self, Matrix, Pauli};
use crate::gates::FloquetParams;
use crate::{Error, Result};

/// Largest enlarged register (sites + links) handled densely.
pub const LGT_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Open,
    Periodic,
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Boundary::Open),
            "periodic" => Ok(Boundary::Periodic),
            other => Err(Error::InvalidInput(format!(
                "unknown boundary {other:?} (expected open or periodic)"
            ))),
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Open => "open",
            Boundary::Periodic => "periodic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LgtSystem {
    pub n_sites: usize,
    pub boundary: Boundary,
}

impl LgtSystem {
    pub fn new(n_sites: usize, boundary: Boundary) -> Result<Self> {
        let min = match boundary {
            Boundary::Open => 2,
            Boundary::Periodic => 3,
        };
        if n_sites < min {
            return Err(Error::InvalidInput(format!(
                "{boundary} gauge chain needs at least {min} sites, got {n_sites}"
            )));
        }
        let sys = Self { n_sites, boundary };
        if sys.n_qubits() > LGT_LIMIT {
            return Err(Error::TooLarge {
                what: "gauge system",
                qubits: sys.n_qubits(),
                limit: LGT_LIMIT,
            });
        }
        Ok(sys)
    }

    pub fn n_links(&self) -> usize {
        match self.boundary {
            Boundary::Open => self.n_sites - 1,
            Boundary::Periodic => self.n_sites,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_sites + self.n_links()
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits()
    }

    pub fn site_qubit(&self, j: usize) -> usize {
        2 * j
    }

    /// Qubit of link `j + 1/2`.
    pub fn link_qubit(&self, j: usize) -> usize {
        2 * j + 1
    }

    /// Matter sites `(j, j + 1)` joined by link `j + 1/2`.
    pub fn link_ends(&self, j: usize) -> (usize, usize) {
        (j, (j + 1) % self.n_sites)
    }

    /// Sites that carry a generator: all of them on a ring, interior ones
    /// on an open chain.
    pub fn generator_sites(&self) -> Vec<usize> {
        match self.boundary {
            Boundary::Open => (1..self.n_sites - 1).collect(),
            Boundary::Periodic => (0..self.n_sites).collect(),
        }
    }

    /// Links `(j - 1/2, j + 1/2)` around site `j`, if both exist.
    fn adjacent_links(&self, j: usize) -> Option<(usize, usize)> {
        match self.boundary {
            Boundary::Open if j == 0 || j + 1 >= self.n_sites => None,
            Boundary::Open => Some((j - 1, j)),
            Boundary::Periodic => Some(((j + self.n_sites - 1) % self.n_sites, j)),
        }
    }

    fn op(&self, ops: &[(usize, Pauli)]) -> Matrix {
        dense::pauli_string(ops, self.n_qubits())
    }

    /// `τ^x_{j+1/2}`, the image of the bond spin `σz_{j+1/2}`.
    pub fn electric(&self, link: usize) -> Matrix {
        self.op(&[(self.link_qubit(link), Pauli::X)])
    }

    /// `s^x_j τ^z_{j+1/2} s^x_{j+1}`, the image of the bond flip `σx_{j+1/2}`.
    pub fn string_operator(&self, link: usize) -> Matrix {
        let (a, b) = self.link_ends(link);
        self.op(&[
            (self.site_qubit(a), Pauli::X),
            (self.link_qubit(link), Pauli::Z),
            (self.site_qubit(b), Pauli::X),
        ])
    }

    pub fn matter_z(&self, site: usize) -> Matrix {
        self.op(&[(self.site_qubit(site), Pauli::Z)])
    }
}

/// `G_j = τ^x_{j-1/2} s^z_j τ^x_{j+1/2}`.
#[derive(Clone, Debug)]
pub struct GaugeGenerator {
    pub site: usize,
    pub matrix: Matrix,
}

pub fn gauge_generator(j: usize, sys: &LgtSystem) -> Result<GaugeGenerator> {
    if j >= sys.n_sites {
        return Err(Error::OutOfRange {
            what: "site",
            index: j,
            limit: sys.n_sites,
        });
    }
    let (left, right) = sys.adjacent_links(j).ok_or_else(|| {
        Error::InvalidInput(format!(
            "site {j} of an open {}-site chain lacks two adjacent links",
            sys.n_sites
        ))
    })?;
    Ok(GaugeGenerator {
        site: j,
        matrix: sys.op(&[
            (sys.link_qubit(left), Pauli::X),
            (sys.site_qubit(j), Pauli::Z),
            (sys.link_qubit(right), Pauli::X),
        ]),
    })
}

pub fn all_generators(sys: &LgtSystem) -> Vec<GaugeGenerator> {
    sys.generator_sites()
        .into_iter()
        .map(|j| gauge_generator(j, sys).expect("generator site is valid"))
        .collect()
}

/// Electric field · kinetic term · mass term:
/// `exp(-ih Σ τ^x) · exp(-iμ Σ s^x τ^z s^x) · exp(+iJ Σ s^z)`.
/// Each exponential is a product of commuting involution exponentials.
pub fn build_lgt_unitary(p: &FloquetParams, sys: &LgtSystem) -> Result<Matrix> {
    p.validate()?;
    let dim = sys.dim();
    let electric = (0..sys.n_links()).fold(dense::identity(dim), |acc, l| {
        dense::exp_involution(p.longitudinal, &sys.electric(l)) * acc
    });
    let kinetic = (0..sys.n_links()).fold(dense::identity(dim), |acc, l| {
        dense::exp_involution(p.transverse, &sys.string_operator(l)) * acc
    });
    let mass = (0..sys.n_sites).fold(dense::identity(dim), |acc, j| {
        dense::exp_involution(-p.coupling, &sys.matter_z(j)) * acc
    });
    Ok(electric * kinetic * mass)
}

/// Max over generators of ‖[G_j, U]‖, bounded above by the Frobenius norm.
pub fn check_gauge_invariance(p: &FloquetParams, sys: &LgtSystem) -> Result<f64> {
    let u = build_lgt_unitary(p, sys)?;
    Ok(max_commutator_with_generators(&u, sys))
}

fn max_commutator_with_generators(m: &Matrix, sys: &LgtSystem) -> f64 {
    all_generators(sys)
        .iter()
        .map(|g| dense::frobenius_norm(&dense::commutator(&g.matrix, m)))
        .fold(0.0, f64::max)
}

/// `P = Π_j (1 + G_j)/2`, onto the `G_j = +1` sector.
pub fn gauge_sector_projector(sys: &LgtSystem) -> Matrix {
    let dim = sys.dim();
    let id = dense::identity(dim);
    let half = crate::C64::new(0.5, 0.0);
    all_generators(sys)
        .iter()
        .fold(id.clone(), |acc, g| acc * ((&id + &g.matrix) * half))
}

/// Pauli-algebra residuals of the bond images `A_j = τ^x`, `B_j = s^x τ^z s^x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct DualAlgebraReport {
    /// max ‖A_j² − 1‖, ‖B_j² − 1‖
    pub square: f64,
    /// max ‖{A_j, B_j}‖
    pub same_bond_anticommutator: f64,
    /// max ‖[A_j, B_k]‖, j ≠ k
    pub cross_commutator: f64,
    /// max ‖[A_j, A_k]‖, ‖[B_j, B_k]‖, j ≠ k
    pub like_commutator: f64,
}

impl DualAlgebraReport {
    pub fn max(&self) -> f64 {
        [
            self.square,
            self.same_bond_anticommutator,
            self.cross_commutator,
            self.like_commutator,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Checks the bond Pauli algebra on an open chain with `n_bonds` links.
pub fn dual_algebra_check(n_bonds: usize) -> Result<DualAlgebraReport> {
    let sys = LgtSystem::new(n_bonds + 1, Boundary::Open)?;
    dual_algebra_check_on(&sys)
}

pub fn dual_algebra_check_on(sys: &LgtSystem) -> Result<DualAlgebraReport> {
    let id = dense::identity(sys.dim());
    let a: Vec<Matrix> = (0..sys.n_links()).map(|l| sys.electric(l)).collect();
    let b: Vec<Matrix> = (0..sys.n_links()).map(|l| sys.string_operator(l)).collect();
    let norm = dense::frobenius_norm;
    let mut r = DualAlgebraReport::default();
    for j in 0..a.len() {
        r.square = r
            .square
            .max(norm(&(&a[j] * &a[j] - &id)))
            .max(norm(&(&b[j] * &b[j] - &id)));
        r.same_bond_anticommutator = r
            .same_bond_anticommutator
            .max(norm(&dense::anticommutator(&a[j], &b[j])));
        for k in 0..a.len() {
            if j == k {
                continue;
            }
            r.cross_commutator = r.cross_commutator.max(norm(&dense::commutator(&a[j], &b[k])));
            r.like_commutator = r
                .like_commutator
                .max(norm(&dense::commutator(&a[j], &a[k])))
                .max(norm(&dense::commutator(&b[j], &b[k])));
        }
    }
    Ok(r)
}

/// ‖P·(−Σ τ^x τ^x)·P − P·(−Σ s^z)·P‖ over the generator sites: inside the
/// `G_j = +1` sector the image of the Ising term is the mass term.
pub fn mass_term_identity_residual(sys: &LgtSystem) -> Result<f64> {
    let dim = sys.dim();
    let p = gauge_sector_projector(sys);
    let mut ising_image = Matrix::zeros(dim, dim);
    let mut mass = Matrix::zeros(dim, dim);
    for j in sys.generator_sites() {
        let (l, r) = sys.adjacent_links(j).expect("generator site has two links");
        ising_image -= sys.op(&[(sys.link_qubit(l), Pauli::X), (sys.link_qubit(r), Pauli::X)]);
        mass -= sys.matter_z(j);
    }
    Ok(dense::frobenius_norm(&(&p * ising_image * &p - &p * mass * &p)))
}

/// Machine-readable certificate printed by the `gauge-audit` command.
#[derive(Clone, Debug, Serialize)]
pub struct GaugeAudit {
    pub n_sites: usize,
    pub n_links: usize,
    pub boundary: Boundary,
    pub generators: usize,
    pub draws: usize,
    pub seed: u64,
    pub max_generator_commutator: f64,
    pub max_unitarity_residual: f64,
    pub generator_involution_residual: f64,
    pub generator_mutual_commutator: f64,
    pub projector_idempotence_residual: f64,
    pub projector_trace: f64,
    pub expected_sector_dim: usize,
    pub max_projector_commutator: f64,
    pub mass_term_identity_residual: f64,
    pub dual_algebra: DualAlgebraReport,
}

impl GaugeAudit {
    /// Every residual within the certification tolerances.
    pub fn passed(&self) -> bool {
        self.max_generator_commutator < 1e-10
            && self.max_unitarity_residual < 1e-10
            && self.generator_involution_residual < 1e-12
            && self.generator_mutual_commutator < 1e-12
            && self.projector_idempotence_residual < 1e-12
            && (self.projector_trace - self.expected_sector_dim as f64).abs() < 1e-9
            && self.max_projector_commutator < 1e-10
            && self.mass_term_identity_residual < 1e-10
            && self.dual_algebra.max() < 1e-12
    }
}

/// Parameter draws for an audit: the reference point `(π/4, π/10, π/8)`
/// followed by `draws - 1` uniform draws from `(-π, π]³`.
pub fn audit_parameters(n_sites: usize, draws: usize, seed: u64) -> Result<Vec<FloquetParams>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_sites.max(2);
    let mut out = Vec::with_capacity(draws);
    if draws > 0 {
        out.push(FloquetParams::new(n, PI / 4.0, PI / 10.0, PI / 8.0)?);
    }
    let mut angle = || PI - rng.random::<f64>() * 2.0 * PI;
    while out.len() < draws {
        out.push(FloquetParams::new(n, angle(), angle(), angle())?);
    }
    Ok(out)
}

pub fn gauge_audit(sys: &LgtSystem, draws: usize, seed: u64) -> Result<GaugeAudit> {
    let id = dense::identity(sys.dim());
    let gens = all_generators(sys);
    let norm = dense::frobenius_norm;
    let mut involution: f64 = 0.0;
    let mut mutual: f64 = 0.0;
    for g in &gens {
        involution = involution.max(norm(&(&g.matrix * &g.matrix - &id)));
        for k in &gens {
            mutual = mutual.max(norm(&dense::commutator(&g.matrix, &k.matrix)));
        }
    }
    let proj = gauge_sector_projector(sys);
    let idempotence = norm(&(&proj * &proj - &proj));
    let trace = proj.trace().re;

    let mut max_comm: f64 = 0.0;
    let mut max_unitarity: f64 = 0.0;
    let mut max_proj_comm: f64 = 0.0;
    for p in audit_parameters(sys.n_sites, draws, seed)? {
        let u = build_lgt_unitary(&p, sys)?;
        max_comm = max_comm.max(max_commutator_with_generators(&u, sys));
        max_unitarity = max_unitarity.max(dense::unitarity_residual(&u));
        max_proj_comm = max_proj_comm.max(norm(&dense::commutator(&proj, &u)));
    }

    Ok(GaugeAudit {
        n_sites: sys.n_sites,
        n_links: sys.n_links(),
        boundary: sys.boundary,
        generators: gens.len(),
        draws,
        seed,
        max_generator_commutator: max_comm,
        max_unitarity_residual: max_unitarity,
        generator_involution_residual: involution,
        generator_mutual_commutator: mutual,
        projector_idempotence_residual: idempotence,
        projector_trace: trace,
        expected_sector_dim: sys.dim() >> gens.len(),
        max_projector_commutator: max_proj_comm,
        mass_term_identity_residual: mass_term_identity_residual(sys)?,
        dual_algebra: dual_algebra_check_on(sys)?,
    })
}

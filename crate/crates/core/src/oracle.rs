//! Exhaustive grid searches over local measurement angles.
//!
//! Each search re-derives one closed form without the symmetry shortcuts the
//! closed forms rely on, and records the difference instead of asserting it:
//!
//! * [`minimize_relative_entropy_basis`] scans all four angles
//!   `(theta_A, phi_A, theta_B, phi_B)` for the basis whose dephased state is
//!   closest in relative entropy, and reports the mutual information there.
//! * [`maximize_laqc`] scans `(Phi_A, Phi_B)` over bases complementary to a
//!   supplied computational pair.
//! * [`brute_force_discord`] scans projective measurements on A.
//!
//! Ties between grid points within [`TIE_TOL`] resolve to the
//! lexicographically smallest angle tuple. The reduction runs in two
//! parallel passes (global optimum, then first index within tolerance), so
//! the result does not depend on thread scheduling.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{
    complementary_qubit_basis, local_qubit_basis, ComplementaryAngles, LocalBasisAngles, QubitBasis,
};
use crate::correlations::{
    classical_correlations_bd, discord_bd, laqc_bd, quantum_mutual_information,
};
use crate::error::{Error, Result};
use crate::linalg::{expectation2, hermitian_eigenvalues2, shannon_entropy, xlog2x, Mat2};
use crate::qstate::{
    bell_diagonal_state, partial_trace, von_neumann_entropy, BellDiagonalParams, DensityMatrix,
    Subsystem,
};

/// Objective values this close count as tied.
pub const TIE_TOL: f64 = 1e-10;
/// Tolerance used to recognise Bell-diagonal inputs.
const BELL_DIAGONAL_TOL: f64 = 1e-10;
const REFINE_FACTOR: usize = 10;

/// Grid resolution per angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub steps_theta: usize,
    pub steps_phi: usize,
    pub steps_big_phi: usize,
    /// One extra pass at ten times the resolution around the incumbent.
    pub refine: bool,
}

impl GridSpec {
    pub fn new(
        steps_theta: usize,
        steps_phi: usize,
        steps_big_phi: usize,
        refine: bool,
    ) -> Result<Self> {
        for (name, steps) in [
            ("steps_theta", steps_theta),
            ("steps_phi", steps_phi),
            ("steps_Phi", steps_big_phi),
        ] {
            if steps < 2 {
                return Err(Error::InvalidGrid(format!(
                    "{name} = {steps}, need at least 2"
                )));
            }
        }
        Ok(GridSpec {
            steps_theta,
            steps_phi,
            steps_big_phi,
            refine,
        })
    }

    pub fn uniform(steps: usize, refine: bool) -> Result<Self> {
        Self::new(steps, steps, steps, refine)
    }

    /// `theta_k = pi k / steps` for `k < steps`; `theta = pi` measures the
    /// same projectors as `theta = 0`.
    fn thetas(&self) -> Vec<f64> {
        (0..self.steps_theta)
            .map(|k| PI * k as f64 / self.steps_theta as f64)
            .collect()
    }

    fn phis(&self) -> Vec<f64> {
        azimuths(self.steps_phi)
    }

    fn big_phis(&self) -> Vec<f64> {
        azimuths(self.steps_big_phi)
    }

    fn theta_step(&self) -> f64 {
        PI / self.steps_theta as f64
    }

    fn phi_step(&self) -> f64 {
        TAU / self.steps_phi as f64
    }

    fn big_phi_step(&self) -> f64 {
        TAU / self.steps_big_phi as f64
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            steps_theta: 64,
            steps_phi: 64,
            steps_big_phi: 64,
            refine: true,
        }
    }
}

fn azimuths(steps: usize) -> Vec<f64> {
    (0..steps).map(|k| TAU * k as f64 / steps as f64).collect()
}

/// Points within one coarse step of `center` at a tenth of the spacing,
/// restricted to `[0, pi]`.
fn refine_polar(center: f64, step: f64) -> Vec<f64> {
    let fine = step / REFINE_FACTOR as f64;
    let r = REFINE_FACTOR as i64;
    let mut out: Vec<f64> = (-r..=r)
        .map(|j| {
            if j == 0 {
                center
            } else {
                center + j as f64 * fine
            }
        })
        .filter(|t| (0.0..=PI).contains(t))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Points within one coarse step of `center`, wrapped into `[0, 2 pi)`.
fn refine_azimuth(center: f64, step: f64) -> Vec<f64> {
    let fine = step / REFINE_FACTOR as f64;
    let r = REFINE_FACTOR as i64;
    let mut out: Vec<f64> = (-r..=r)
        .map(|j| {
            if j == 0 {
                center
            } else {
                let v = (center + j as f64 * fine).rem_euclid(TAU);
                if v >= TAU {
                    0.0
                } else {
                    v
                }
            }
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// First index (in order) whose value lies within [`TIE_TOL`] of the maximum.
fn argmax_first<F>(n: usize, objective: F) -> (usize, f64)
where
    F: Fn(usize) -> f64 + Sync,
{
    let best = (0..n)
        .into_par_iter()
        .map(&objective)
        .reduce(|| f64::NEG_INFINITY, f64::max);
    let index = (0..n)
        .into_par_iter()
        .find_first(|&i| objective(i) >= best - TIE_TOL)
        .expect("grid is nonempty");
    (index, objective(index))
}

/// Unnormalized conditional states of B, `M_i = <a_i| rho |a_i>`, after
/// outcome `i` on A.
fn conditional_b(rho: &DensityMatrix, basis_a: &QubitBasis) -> [Mat2; 2] {
    let m = rho.matrix();
    [0, 1].map(|i| {
        let a = basis_a.ket(i);
        Mat2::from_fn(|j, l| {
            let mut acc = crate::linalg::ZERO;
            for k in 0..2 {
                for kp in 0..2 {
                    acc += a[k].conj() * a[kp] * m[(2 * k + j, 2 * kp + l)];
                }
            }
            acc
        })
    })
}

fn table(cond: &[Mat2; 2], basis_b: &QubitBasis) -> [[f64; 2]; 2] {
    [0, 1].map(|i| [0, 1].map(|j| expectation2(&cond[i], basis_b.ket(j)).max(0.0)))
}

fn table_entropy(p: &[[f64; 2]; 2]) -> f64 {
    -p.iter().flatten().map(|&v| xlog2x(v)).sum::<f64>()
}

fn table_mutual_information(p: &[[f64; 2]; 2]) -> f64 {
    let pa = [p[0][0] + p[0][1], p[1][0] + p[1][1]];
    let pb = [p[0][0] + p[1][0], p[0][1] + p[1][1]];
    let mut total = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            if p[i][j] > 0.0 {
                total += p[i][j] * (p[i][j] / (pa[i] * pb[j])).log2();
            }
        }
    }
    total
}

/// Which angles an oracle optimized over.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum OracleAngles {
    Local(LocalBasisAngles),
    Complementary(ComplementaryAngles),
    /// Projective measurement on qubit A only.
    Measurement {
        theta: f64,
        phi: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub best_angles: OracleAngles,
    /// Best value found, in bits.
    pub objective: f64,
    /// Matching closed form, available when the input is Bell diagonal.
    pub closed_form: Option<f64>,
    /// `objective - closed_form`.
    pub gap: Option<f64>,
}

impl OracleResult {
    fn new(best_angles: OracleAngles, objective: f64, closed_form: Option<f64>) -> Self {
        OracleResult {
            best_angles,
            objective,
            closed_form,
            gap: closed_form.map(|c| objective - c),
        }
    }
}

/// Outcome of the relative-entropy basis search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalSearch {
    /// `objective` is the mutual information of the measurement in the
    /// minimizing basis, compared with the classical-correlations closed form.
    pub result: OracleResult,
    /// The minimal `S(rho || chi)` itself.
    pub relative_entropy: f64,
}

impl ClassicalSearch {
    pub fn angles(&self) -> LocalBasisAngles {
        match self.result.best_angles {
            OracleAngles::Local(a) => a,
            _ => unreachable!("classical search always reports local angles"),
        }
    }
}

struct PairSearch {
    thetas_a: Vec<f64>,
    phis_a: Vec<f64>,
    thetas_b: Vec<f64>,
    phis_b: Vec<f64>,
}

impl PairSearch {
    fn pairs(thetas: &[f64], phis: &[f64]) -> Vec<(f64, f64)> {
        thetas
            .iter()
            .flat_map(|&t| phis.iter().map(move |&p| (t, p)))
            .collect()
    }

    /// Minimizes the joint outcome entropy, which is `S(rho || chi) + S(rho)`.
    fn run(&self, rho: &DensityMatrix) -> (LocalBasisAngles, f64, [[f64; 2]; 2]) {
        let a_angles = Self::pairs(&self.thetas_a, &self.phis_a);
        let b_angles = Self::pairs(&self.thetas_b, &self.phis_b);
        let conds: Vec<[Mat2; 2]> = a_angles
            .iter()
            .map(|&(t, p)| conditional_b(rho, &local_qubit_basis(t, p)))
            .collect();
        let b_bases: Vec<QubitBasis> = b_angles
            .iter()
            .map(|&(t, p)| local_qubit_basis(t, p))
            .collect();
        let nb = b_bases.len();
        let (index, neg_entropy) = argmax_first(conds.len() * nb, |n| {
            -table_entropy(&table(&conds[n / nb], &b_bases[n % nb]))
        });
        let (ta, pa) = a_angles[index / nb];
        let (tb, pb) = b_angles[index % nb];
        let angles = LocalBasisAngles {
            theta_a: ta,
            phi_a: pa,
            theta_b: tb,
            phi_b: pb,
        };
        let p = table(&conds[index / nb], &b_bases[index % nb]);
        (angles, -neg_entropy, p)
    }
}

/// Searches all four local angles for the basis minimizing
/// `S(rho || dephase(rho, basis))`.
pub fn minimize_relative_entropy_basis(rho: &DensityMatrix, grid: &GridSpec) -> ClassicalSearch {
    let coarse = PairSearch {
        thetas_a: grid.thetas(),
        phis_a: grid.phis(),
        thetas_b: grid.thetas(),
        phis_b: grid.phis(),
    };
    let (mut angles, mut entropy, mut p) = coarse.run(rho);
    if grid.refine {
        let fine = PairSearch {
            thetas_a: refine_polar(angles.theta_a, grid.theta_step()),
            phis_a: refine_azimuth(angles.phi_a, grid.phi_step()),
            thetas_b: refine_polar(angles.theta_b, grid.theta_step()),
            phis_b: refine_azimuth(angles.phi_b, grid.phi_step()),
        };
        let (a, e, q) = fine.run(rho);
        if e < entropy {
            (angles, entropy, p) = (a, e, q);
        }
    }
    let closed = BellDiagonalParams::from_state(rho, BELL_DIAGONAL_TOL)
        .map(|params| classical_correlations_bd(&params));
    ClassicalSearch {
        result: OracleResult::new(
            OracleAngles::Local(angles),
            table_mutual_information(&p),
            closed,
        ),
        relative_entropy: (entropy - von_neumann_entropy(rho)).max(0.0),
    }
}

fn laqc_search(
    rho: &DensityMatrix,
    computational: &(QubitBasis, QubitBasis),
    phis_a: &[f64],
    phis_b: &[f64],
) -> (ComplementaryAngles, f64) {
    let conds: Vec<[Mat2; 2]> = phis_a
        .iter()
        .map(|&f| conditional_b(rho, &complementary_qubit_basis(f, &computational.0)))
        .collect();
    let b_bases: Vec<QubitBasis> = phis_b
        .iter()
        .map(|&f| complementary_qubit_basis(f, &computational.1))
        .collect();
    let nb = b_bases.len();
    let (index, value) = argmax_first(conds.len() * nb, |n| {
        table_mutual_information(&table(&conds[n / nb], &b_bases[n % nb]))
    });
    (
        ComplementaryAngles {
            phi_a: phis_a[index / nb],
            phi_b: phis_b[index % nb],
        },
        value,
    )
}

/// Maximizes the measured mutual information over bases complementary to
/// `computational`, searching `Phi_A` and `Phi_B` independently.
pub fn maximize_laqc(
    rho: &DensityMatrix,
    computational: &(QubitBasis, QubitBasis),
    grid: &GridSpec,
) -> OracleResult {
    let (mut angles, mut value) =
        laqc_search(rho, computational, &grid.big_phis(), &grid.big_phis());
    if grid.refine {
        let (a, v) = laqc_search(
            rho,
            computational,
            &refine_azimuth(angles.phi_a, grid.big_phi_step()),
            &refine_azimuth(angles.phi_b, grid.big_phi_step()),
        );
        if v > value {
            (angles, value) = (a, v);
        }
    }
    let closed = BellDiagonalParams::from_state(rho, BELL_DIAGONAL_TOL).map(|p| laqc_bd(&p));
    OracleResult::new(OracleAngles::Complementary(angles), value, closed)
}

fn entropy2(m: &Mat2) -> f64 {
    shannon_entropy(hermitian_eigenvalues2(m))
}

/// Classical correlation `S(rho_B) - sum_i p_i S(rho_B|i)` extracted by a
/// projective measurement on A.
fn extracted_information(rho: &DensityMatrix, entropy_b: f64, basis_a: &QubitBasis) -> f64 {
    let conds = conditional_b(rho, basis_a);
    let mut conditional = 0.0;
    for m in &conds {
        let p = m.trace().re;
        if p > 0.0 {
            conditional += p * entropy2(&(m / crate::linalg::C64::new(p, 0.0)));
        }
    }
    entropy_b - conditional
}

fn discord_search(
    rho: &DensityMatrix,
    entropy_b: f64,
    thetas: &[f64],
    phis: &[f64],
) -> ((f64, f64), f64) {
    let angles = PairSearch::pairs(thetas, phis);
    let bases: Vec<QubitBasis> = angles
        .iter()
        .map(|&(t, p)| local_qubit_basis(t, p))
        .collect();
    let (index, value) = argmax_first(bases.len(), |n| {
        extracted_information(rho, entropy_b, &bases[n])
    });
    (angles[index], value)
}

/// Discord `I(rho) - max_{Pi^A} J(rho | Pi^A)` minimized over projective
/// measurements on A.
pub fn brute_force_discord(rho: &DensityMatrix, grid: &GridSpec) -> OracleResult {
    let entropy_b = von_neumann_entropy(&partial_trace(rho, Subsystem::B));
    let ((mut theta, mut phi), mut extracted) =
        discord_search(rho, entropy_b, &grid.thetas(), &grid.phis());
    if grid.refine {
        let ((t, p), v) = discord_search(
            rho,
            entropy_b,
            &refine_polar(theta, grid.theta_step()),
            &refine_azimuth(phi, grid.phi_step()),
        );
        if v > extracted {
            (theta, phi, extracted) = (t, p, v);
        }
    }
    let discord = quantum_mutual_information(rho) - extracted;
    let discord = if discord.abs() < 1e-12 { 0.0 } else { discord };
    let closed = BellDiagonalParams::from_state(rho, BELL_DIAGONAL_TOL).map(|p| discord_bd(&p));
    OracleResult::new(OracleAngles::Measurement { theta, phi }, discord, closed)
}

/// All oracle outcomes for one Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditRecord {
    pub params: BellDiagonalParams,
    pub classical: ClassicalSearch,
    /// LAQC over bases complementary to the basis the classical search found.
    pub laqc: OracleResult,
    /// LAQC over bases complementary to the standard basis.
    pub laqc_standard: OracleResult,
    pub discord: OracleResult,
}

impl AuditRecord {
    pub fn results(&self) -> [(&'static str, &OracleResult); 4] {
        [
            ("classical", &self.classical.result),
            ("laqc", &self.laqc),
            ("laqc_standard", &self.laqc_standard),
            ("discord", &self.discord),
        ]
    }

    pub fn max_gap(&self) -> f64 {
        self.results()
            .iter()
            .filter_map(|(_, r)| r.gap)
            .map(f64::abs)
            .fold(0.0, f64::max)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.max_gap() <= tol
    }
}

/// Runs every oracle on `bell_diagonal_state(params)` and records the gaps
/// against the closed forms.
pub fn audit_closed_forms(params: &BellDiagonalParams, grid: &GridSpec) -> AuditRecord {
    let rho = bell_diagonal_state(params);
    let classical = minimize_relative_entropy_basis(&rho, grid);
    let optimal = classical.angles().bases();
    let standard = (QubitBasis::standard(), QubitBasis::standard());
    AuditRecord {
        params: *params,
        classical,
        laqc: maximize_laqc(&rho, &optimal, grid),
        laqc_standard: maximize_laqc(&rho, &standard, grid),
        discord: brute_force_discord(&rho, grid),
    }
}

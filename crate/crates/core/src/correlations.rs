//! Correlation quantifiers: mutual information, classical correlations,
//! local available quantum correlations (LAQC), discord and concurrence.
//!
//! The Bell-diagonal quantifiers all reduce to the binary function
//! [`correlation_entropy_function`] evaluated at one selected coefficient:
//! classical correlations use `c_m = min{|c2|, |c3|}` and LAQC uses
//! `c_M = max{|c1|, |c2|}`.

use serde::Serialize;

use crate::bases::JointDistribution;
use crate::linalg::{hermitian_eigen, kron, pauli, singular_values, xlog2x, Mat4, C64};
use crate::qstate::{
    bell_diagonal_state, partial_trace, von_neumann_entropy, BellDiagonalParams, DensityMatrix,
    Subsystem,
};

/// Report entries smaller than this in magnitude are printed as exactly zero.
pub const REPORT_ZERO: f64 = 1e-14;

/// Eigenvalues of `rho` below this are dropped before the concurrence
/// square roots.
const RANK_TOL: f64 = 1e-12;

/// Rounds rounding-level negatives up to zero; larger negatives pass through.
fn snap_nonnegative(x: f64) -> f64 {
    if x < 0.0 && x > -1e-12 {
        0.0
    } else {
        x
    }
}

/// `sum_ij p(i,j) log2[p(i,j) / (p_A(i) p_B(j))]` in bits.
pub fn mutual_information(d: &JointDistribution) -> f64 {
    let pa = d.marginal_a();
    let pb = d.marginal_b();
    let mut total = 0.0;
    for (i, a) in pa.iter().enumerate() {
        for (j, b) in pb.iter().enumerate() {
            let p = d.p(i, j);
            if p > 0.0 {
                total += p * (p / (a * b)).log2();
            }
        }
    }
    snap_nonnegative(total)
}

/// `((1+c)/2) log2(1+c) + ((1-c)/2) log2(1-c)`.
pub fn correlation_entropy_function(c: f64) -> f64 {
    0.5 * (xlog2x(1.0 + c) + xlog2x(1.0 - c))
}

/// `min{|c2|, |c3|}`.
pub fn c_min(params: &BellDiagonalParams) -> f64 {
    params.c2().abs().min(params.c3().abs())
}

/// `max{|c1|, |c2|}`.
pub fn c_max(params: &BellDiagonalParams) -> f64 {
    params.c1().abs().max(params.c2().abs())
}

pub fn classical_correlations_bd(params: &BellDiagonalParams) -> f64 {
    correlation_entropy_function(c_min(params))
}

pub fn laqc_bd(params: &BellDiagonalParams) -> f64 {
    correlation_entropy_function(c_max(params))
}

/// Discord of a Bell-diagonal state:
/// `sum_k (a_k/4) log2 a_k - f(c)` with `a_k` four times the Bell-basis
/// eigenvalues and `c = max{|c1|, |c2|, |c3|}`.
pub fn discord_bd(params: &BellDiagonalParams) -> f64 {
    let [c1, c2, c3] = params.as_array();
    let c = c1.abs().max(c2.abs()).max(c3.abs());
    let spectral: f64 = params
        .bell_eigenvalues()
        .iter()
        .map(|lambda| xlog2x(4.0 * lambda) / 4.0)
        .sum();
    snap_nonnegative(spectral - correlation_entropy_function(c))
}

/// `(1-z)/4 log2(1-z) - (1+z)/2 log2(1+z) + (1+3z)/4 log2(1+3z)`.
pub fn discord_werner(z: f64) -> f64 {
    let d = xlog2x(1.0 - z) / 4.0 - xlog2x(1.0 + z) / 2.0 + xlog2x(1.0 + 3.0 * z) / 4.0;
    snap_nonnegative(d)
}

/// `S(rho_A) + S(rho_B) - S(rho)`.
pub fn quantum_mutual_information(rho: &DensityMatrix) -> f64 {
    von_neumann_entropy(&partial_trace(rho, Subsystem::A))
        + von_neumann_entropy(&partial_trace(rho, Subsystem::B))
        - von_neumann_entropy(rho)
}

/// Wootters concurrence `max{0, l1 - l2 - l3 - l4}`.
///
/// The `l_k` are the singular values of `W^T (sigma_y (x) sigma_y) W` where
/// `rho = W W^dagger`; they equal the square roots of the eigenvalues of
/// `rho (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)` without a second
/// square root amplifying rounding near rank deficiency.
pub fn concurrence(rho: &DensityMatrix) -> f64 {
    let (values, vectors) = hermitian_eigen(rho.matrix());
    let w = Mat4::from_fn(|r, c| {
        let lambda = if values[c] < RANK_TOL { 0.0 } else { values[c] };
        vectors[(r, c)] * C64::new(lambda.sqrt(), 0.0)
    });
    let flip = kron(&pauli(2), &pauli(2));
    let tau = w.transpose() * flip * w;
    let s = singular_values(&tau);
    (s[0] - s[1] - s[2] - s[3]).clamp(0.0, 1.0)
}

/// `max{0, (3z - 1)/2}`.
pub fn concurrence_werner(z: f64) -> f64 {
    (0.5 * (3.0 * z - 1.0)).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub classical: f64,
    pub laqc: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub c_m: f64,
    #[serde(rename = "c_M")]
    pub c_big_m: f64,
}

fn clean(x: f64) -> f64 {
    if x.abs() < REPORT_ZERO {
        0.0
    } else {
        x
    }
}

pub fn full_report(params: &BellDiagonalParams) -> CorrelationReport {
    CorrelationReport {
        classical: clean(classical_correlations_bd(params)),
        laqc: clean(laqc_bd(params)),
        discord: clean(discord_bd(params)),
        concurrence: clean(concurrence(&bell_diagonal_state(params))),
        c_m: clean(c_min(params)),
        c_big_m: clean(c_max(params)),
    }
}

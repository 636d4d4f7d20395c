//! Markovian decoherence acting identically on both qubits.
//!
//! The closed-form parameter maps are the primary path for trajectories;
//! [`apply_product_channel`] is the explicit Kraus route used to check them.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlations::{full_report, CorrelationReport};
use crate::error::{check_range, Result};
use crate::linalg::{kron, pauli, xlog2x, Mat2, Mat4, C64, ONE, ZERO};
use crate::qstate::{BellDiagonalParams, DensityMatrix, SingleQubitState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    Depolarizing,
    PhaseDamping,
}

impl ChannelKind {
    pub fn kraus(self, gamma: f64) -> Result<KrausChannel> {
        match self {
            ChannelKind::Depolarizing => depolarizing_kraus(gamma),
            ChannelKind::PhaseDamping => phase_damping_kraus(gamma),
        }
    }

    /// Bell-diagonal coefficients of a Werner state after the channel.
    pub fn werner_params(self, z: f64, gamma: f64) -> Result<BellDiagonalParams> {
        match self {
            ChannelKind::Depolarizing => depolarized_werner_params(z, gamma),
            ChannelKind::PhaseDamping => phase_damped_werner_params(z, gamma),
        }
    }
}

/// Single-qubit Kraus operators together with their strength parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    operators: Vec<Mat2>,
    gamma: f64,
    kind: ChannelKind,
}

impl KrausChannel {
    pub fn operators(&self) -> &[Mat2] {
        &self.operators
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    /// Largest entry of `|sum_k E_k^dagger E_k - I|`.
    pub fn completeness_deviation(&self) -> f64 {
        let sum = self
            .operators
            .iter()
            .fold(Mat2::zeros(), |acc, e| acc + e.adjoint() * e);
        crate::linalg::max_abs_diff2(&sum, &Mat2::identity())
    }

    /// `rho -> sum_k E_k rho E_k^dagger` on one qubit.
    pub fn apply_single(&self, rho: &SingleQubitState) -> Result<SingleQubitState> {
        let out = self
            .operators
            .iter()
            .fold(Mat2::zeros(), |acc, e| acc + e * rho.matrix() * e.adjoint());
        SingleQubitState::new(out)
    }
}

/// `E0 = sqrt(1 - 3g/4) I`, `E1..3 = (sqrt g / 2) sigma_{x,y,z}`.
pub fn depolarizing_kraus(gamma: f64) -> Result<KrausChannel> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    let e0 = pauli(0) * C64::new((1.0 - 0.75 * gamma).sqrt(), 0.0);
    let w = C64::new(0.5 * gamma.sqrt(), 0.0);
    Ok(KrausChannel {
        operators: vec![e0, pauli(1) * w, pauli(2) * w, pauli(3) * w],
        gamma,
        kind: ChannelKind::Depolarizing,
    })
}

/// `E0 = diag(1, sqrt(1 - g))`, `E1 = diag(0, sqrt g)`.
pub fn phase_damping_kraus(gamma: f64) -> Result<KrausChannel> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    let e0 = Mat2::new(ONE, ZERO, ZERO, C64::new((1.0 - gamma).sqrt(), 0.0));
    let e1 = Mat2::new(ZERO, ZERO, ZERO, C64::new(gamma.sqrt(), 0.0));
    Ok(KrausChannel {
        operators: vec![e0, e1],
        gamma,
        kind: ChannelKind::PhaseDamping,
    })
}

/// `rho -> sum_ij (E_i (x) E_j) rho (E_i (x) E_j)^dagger`.
pub fn apply_product_channel(rho: &DensityMatrix, ch: &KrausChannel) -> Result<DensityMatrix> {
    let mut out = Mat4::zeros();
    for ei in &ch.operators {
        for ej in &ch.operators {
            let e = kron(ei, ej);
            out += e * rho.matrix() * e.adjoint();
        }
    }
    DensityMatrix::new(out)
}

/// `(z', -z', z')` with `z' = z (1 - gamma)^2`.
pub fn depolarized_werner_params(z: f64, gamma: f64) -> Result<BellDiagonalParams> {
    check_range("z", z, 0.0, 1.0)?;
    check_range("gamma", gamma, 0.0, 1.0)?;
    let contracted = z * (1.0 - gamma).powi(2);
    BellDiagonalParams::werner(contracted)
}

/// `((1 - gamma) z, -(1 - gamma) z, z)`.
pub fn phase_damped_werner_params(z: f64, gamma: f64) -> Result<BellDiagonalParams> {
    check_range("z", z, 0.0, 1.0)?;
    check_range("gamma", gamma, 0.0, 1.0)?;
    let c = (1.0 - gamma) * z;
    BellDiagonalParams::new(c, -c, z)
}

/// Discord of a depolarized Werner state.
pub fn depolarized_werner_discord(z: f64, gamma: f64) -> f64 {
    let zp = z * (1.0 - gamma).powi(2);
    xlog2x(1.0 - zp) / 4.0 - xlog2x(1.0 + zp) / 2.0 + xlog2x(1.0 + 3.0 * zp) / 4.0
}

/// `max{0, (3 z (1 - gamma)^2 - 1)/2}`.
pub fn depolarized_werner_concurrence(z: f64, gamma: f64) -> f64 {
    (0.5 * (3.0 * z * (1.0 - gamma).powi(2) - 1.0)).max(0.0)
}

/// Discord of a phase-damped Werner state.
pub fn phase_damped_werner_discord(z: f64, gamma: f64) -> f64 {
    let up = z * (3.0 - 2.0 * gamma);
    let down = z * (1.0 - 2.0 * gamma);
    xlog2x(1.0 + up) / 4.0 + xlog2x(1.0 - down) / 4.0 - xlog2x(1.0 + z) / 2.0
}

/// `max{0, (z/2)(3 - 2 gamma) - 1/2}`.
pub fn phase_damped_werner_concurrence(z: f64, gamma: f64) -> f64 {
    (0.5 * z * (3.0 - 2.0 * gamma) - 0.5).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub gamma: f64,
    pub params: BellDiagonalParams,
    pub report: CorrelationReport,
}

/// Quantifiers of a Werner state `z` along a grid of channel strengths,
/// returned in grid order.
pub fn correlation_trajectory(
    z: f64,
    gammas: &[f64],
    kind: ChannelKind,
) -> Result<Vec<TrajectoryPoint>> {
    check_range("z", z, 0.0, 1.0)?;
    gammas
        .par_iter()
        .map(|&gamma| {
            let params = kind.werner_params(z, gamma)?;
            Ok(TrajectoryPoint {
                gamma,
                params,
                report: full_report(&params),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::correlation_entropy_function;
    use crate::qstate::{bell_diagonal_state, bloch_decompose, werner_state};
    use approx::assert_abs_diff_eq;

    fn grid(n: usize) -> Vec<f64> {
        (0..=n).map(|k| k as f64 / n as f64).collect()
    }

    #[test]
    fn depolarizing_examples() {
        let id = depolarizing_kraus(0.0).unwrap();
        assert_eq!(id.operators()[0], Mat2::identity());
        assert!(id.operators()[1..].iter().all(|e| *e == Mat2::zeros()));

        let full = depolarizing_kraus(1.0).unwrap();
        for r in [[0.0, 0.0, 1.0], [0.6, -0.8, 0.0], [0.1, 0.2, 0.3]] {
            let out = full
                .apply_single(&SingleQubitState::from_bloch(r).unwrap())
                .unwrap();
            assert!(
                crate::linalg::max_abs_diff2(
                    out.matrix(),
                    SingleQubitState::maximally_mixed().matrix()
                ) < 1e-15
            );
        }

        let half = depolarizing_kraus(0.5).unwrap();
        assert_abs_diff_eq!(
            half.operators()[0][(0, 0)].re,
            (5.0f64 / 8.0).sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            half.operators()[1][(0, 1)].re,
            0.5f64.sqrt() / 2.0,
            epsilon = 1e-15
        );
        assert!(depolarizing_kraus(1.1).is_err());
        assert!(depolarizing_kraus(-0.1).is_err());
    }

    #[test]
    fn phase_damping_examples() {
        let id = phase_damping_kraus(0.0).unwrap();
        let w = werner_state(0.7).unwrap();
        assert!(apply_product_channel(&w, &id).unwrap().distance(&w) < 1e-15);

        let full = phase_damping_kraus(1.0).unwrap();
        let plus = SingleQubitState::from_bloch([1.0, 0.0, 0.0]).unwrap();
        let out = full.apply_single(&plus).unwrap();
        assert_eq!(out.matrix()[(0, 1)], ZERO);
        assert_eq!(out.matrix()[(1, 0)], ZERO);

        let half = phase_damping_kraus(0.5).unwrap();
        assert_abs_diff_eq!(
            half.operators()[0][(1, 1)].re,
            0.5f64.sqrt(),
            epsilon = 1e-15
        );
        assert!(phase_damping_kraus(2.0).is_err());
    }

    #[test]
    fn completeness_on_grid() {
        for g in grid(20) {
            for kind in [ChannelKind::Depolarizing, ChannelKind::PhaseDamping] {
                assert!(kind.kraus(g).unwrap().completeness_deviation() <= 1e-12);
            }
        }
    }

    #[test]
    fn kraus_route_matches_parameter_maps() {
        for z in grid(20) {
            let w = werner_state(z).unwrap();
            for g in grid(20) {
                for kind in [ChannelKind::Depolarizing, ChannelKind::PhaseDamping] {
                    let out = apply_product_channel(&w, &kind.kraus(g).unwrap()).unwrap();
                    let b = bloch_decompose(&out);
                    let p = kind.werner_params(z, g).unwrap();
                    for n in 0..3 {
                        assert!(b.x[n].abs() <= 1e-12 && b.y[n].abs() <= 1e-12);
                        for m in 0..3 {
                            let expected = if n == m { p.as_array()[n] } else { 0.0 };
                            assert_abs_diff_eq!(b.t[n][m], expected, epsilon = 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_map_examples() {
        let p = depolarized_werner_params(0.6, 0.0).unwrap();
        assert_eq!(p.as_array(), [0.6, -0.6, 0.6]);
        let p = depolarized_werner_params(0.6, 1.0).unwrap();
        assert_eq!(p.as_array().map(f64::abs), [0.0; 3]);
        let p = depolarized_werner_params(0.8, 0.5).unwrap();
        assert_abs_diff_eq!(p.c1(), 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(p.c2(), -0.2, epsilon = 1e-15);

        assert_eq!(
            phase_damped_werner_params(0.4, 0.0).unwrap().as_array(),
            [0.4, -0.4, 0.4]
        );
        let p = phase_damped_werner_params(0.4, 1.0).unwrap();
        assert_eq!((p.c1().abs(), p.c2().abs(), p.c3()), (0.0, 0.0, 0.4));
        assert_eq!(
            phase_damped_werner_params(0.5, 0.5).unwrap().as_array(),
            [0.25, -0.25, 0.5]
        );
    }

    #[test]
    fn depolarizing_werner_becomes_contracted_werner() {
        let (z, g) = (0.9, 0.3);
        let out = apply_product_channel(&werner_state(z).unwrap(), &depolarizing_kraus(g).unwrap())
            .unwrap();
        let expected = werner_state(z * (1.0 - g) * (1.0 - g)).unwrap();
        assert!(out.distance(&expected) < 1e-12);
    }

    #[test]
    fn depolarizing_composes_multiplicatively() {
        for (g1, g2) in [(0.1, 0.2), (0.5, 0.5), (0.9, 0.05)] {
            let z = 0.85;
            let ch1 = depolarizing_kraus(g1).unwrap();
            let ch2 = depolarizing_kraus(g2).unwrap();
            let twice = apply_product_channel(
                &apply_product_channel(&werner_state(z).unwrap(), &ch1).unwrap(),
                &ch2,
            )
            .unwrap();
            let t = bloch_decompose(&twice).t[0][0];
            let contraction: f64 = (1.0 - g1) * (1.0 - g1) * (1.0 - g2) * (1.0 - g2);
            assert_abs_diff_eq!(t, z * contraction, epsilon = 1e-12);
            let g = 1.0 - contraction.sqrt();
            let once =
                apply_product_channel(&werner_state(z).unwrap(), &depolarizing_kraus(g).unwrap())
                    .unwrap();
            assert!(once.distance(&twice) < 1e-12);
        }
    }

    #[test]
    fn trajectory_examples() {
        let esd = 1.0 - 3f64.powf(-0.5);
        let t = correlation_trajectory(
            1.0,
            &[esd - 1e-6, esd, esd + 1e-6],
            ChannelKind::Depolarizing,
        )
        .unwrap();
        assert!(t[0].report.concurrence > 0.0);
        assert!(t[1].report.concurrence < 1e-10);
        assert_eq!(t[2].report.concurrence, 0.0);

        let t = correlation_trajectory(0.8, &[0.5], ChannelKind::Depolarizing).unwrap();
        assert_abs_diff_eq!(t[0].report.laqc, 0.029049, epsilon = 1e-6);

        let t = correlation_trajectory(0.5, &[0.5], ChannelKind::PhaseDamping).unwrap();
        assert_abs_diff_eq!(t[0].report.laqc, 0.045566, epsilon = 1e-6);
        assert_abs_diff_eq!(t[0].report.discord, 0.061278, epsilon = 1e-6);
        assert_eq!(t[0].report.concurrence, 0.0);
    }

    #[test]
    fn trajectories_follow_dynamic_closed_forms() {
        let gammas = grid(20);
        for z in grid(20) {
            let dep = correlation_trajectory(z, &gammas, ChannelKind::Depolarizing).unwrap();
            let pd = correlation_trajectory(z, &gammas, ChannelKind::PhaseDamping).unwrap();
            for (k, &g) in gammas.iter().enumerate() {
                let zp = z * (1.0 - g).powi(2);
                assert_eq!(dep[k].gamma, g);
                assert_abs_diff_eq!(
                    dep[k].report.laqc,
                    correlation_entropy_function(zp),
                    epsilon = 1e-12
                );
                assert_abs_diff_eq!(dep[k].report.classical, dep[k].report.laqc, epsilon = 1e-12);
                assert_abs_diff_eq!(
                    dep[k].report.discord,
                    depolarized_werner_discord(z, g),
                    epsilon = 1e-12
                );
                assert_abs_diff_eq!(
                    dep[k].report.concurrence,
                    depolarized_werner_concurrence(z, g),
                    epsilon = 1e-10
                );

                let c = (1.0 - g) * z;
                assert_abs_diff_eq!(
                    pd[k].report.laqc,
                    correlation_entropy_function(c),
                    epsilon = 1e-12
                );
                assert_eq!(pd[k].report.classical, pd[k].report.laqc);
                assert_abs_diff_eq!(
                    pd[k].report.discord,
                    phase_damped_werner_discord(z, g),
                    epsilon = 1e-12
                );
                assert_abs_diff_eq!(
                    pd[k].report.concurrence,
                    phase_damped_werner_concurrence(z, g),
                    epsilon = 1e-10
                );
            }
        }
    }

    #[test]
    fn laqc_only_vanishes_at_full_strength() {
        for z in grid(20).into_iter().skip(1) {
            for g in grid(20) {
                for kind in [ChannelKind::Depolarizing, ChannelKind::PhaseDamping] {
                    let r = full_report(&kind.werner_params(z, g).unwrap());
                    if g < 1.0 {
                        assert!(r.laqc > 0.0, "{kind:?} z={z} g={g}");
                    } else {
                        assert_eq!(r.laqc, 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn channel_outputs_are_bell_diagonal() {
        let out = apply_product_channel(
            &werner_state(0.5).unwrap(),
            &phase_damping_kraus(0.5).unwrap(),
        )
        .unwrap();
        let expected = bell_diagonal_state(&BellDiagonalParams::new(0.25, -0.25, 0.5).unwrap());
        assert!(out.distance(&expected) < 1e-12);
    }
}

//! Local projective measurement bases and what they do to a two-qubit state.

use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::correlations::mutual_information;
use crate::error::{check_range, Error, Result};
use crate::linalg::{kron, kron_ket, Ket2, Ket4, Mat2, Mat4, C64, ONE, ZERO};
use crate::qstate::{relative_entropy, DensityMatrix};

const ORTHONORMAL_TOL: f64 = 1e-12;
/// Largest out-of-range probability attributed to rounding.
pub const PROBABILITY_TOL: f64 = 1e-10;

/// Polar and azimuthal angles of the measurement directions on A and B.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalBasisAngles {
    pub theta_a: f64,
    pub phi_a: f64,
    pub theta_b: f64,
    pub phi_b: f64,
}

impl LocalBasisAngles {
    pub fn new(theta_a: f64, phi_a: f64, theta_b: f64, phi_b: f64) -> Result<Self> {
        check_range("theta_a", theta_a, 0.0, PI)?;
        check_range("theta_b", theta_b, 0.0, PI)?;
        check_azimuth("phi_a", phi_a)?;
        check_azimuth("phi_b", phi_b)?;
        Ok(LocalBasisAngles {
            theta_a,
            phi_a,
            theta_b,
            phi_b,
        })
    }

    pub fn standard() -> Self {
        LocalBasisAngles {
            theta_a: 0.0,
            phi_a: 0.0,
            theta_b: 0.0,
            phi_b: 0.0,
        }
    }

    pub fn bases(&self) -> (QubitBasis, QubitBasis) {
        (
            local_qubit_basis(self.theta_a, self.phi_a),
            local_qubit_basis(self.theta_b, self.phi_b),
        )
    }
}

/// Directions in the planes orthogonal to a pair of computational bases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplementaryAngles {
    pub phi_a: f64,
    pub phi_b: f64,
}

impl ComplementaryAngles {
    pub fn new(phi_a: f64, phi_b: f64) -> Result<Self> {
        check_azimuth("Phi_a", phi_a)?;
        check_azimuth("Phi_b", phi_b)?;
        Ok(ComplementaryAngles { phi_a, phi_b })
    }

    pub fn bases(&self, computational: &(QubitBasis, QubitBasis)) -> (QubitBasis, QubitBasis) {
        (
            complementary_qubit_basis(self.phi_a, &computational.0),
            complementary_qubit_basis(self.phi_b, &computational.1),
        )
    }
}

fn check_azimuth(name: &'static str, phi: f64) -> Result<()> {
    if (0.0..TAU).contains(&phi) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value: phi,
            min: 0.0,
            max: TAU,
        })
    }
}

/// An orthonormal pair of single-qubit kets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBasis {
    kets: [Ket2; 2],
}

impl QubitBasis {
    pub fn new(ket0: Ket2, ket1: Ket2) -> Result<Self> {
        let deviation = [
            (ket0.dotc(&ket0) - ONE).norm(),
            (ket1.dotc(&ket1) - ONE).norm(),
            ket0.dotc(&ket1).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if deviation.is_nan() || deviation > ORTHONORMAL_TOL {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(QubitBasis { kets: [ket0, ket1] })
    }

    /// `{|0>, |1>}`.
    pub fn standard() -> Self {
        QubitBasis {
            kets: [Ket2::new(ONE, ZERO), Ket2::new(ZERO, ONE)],
        }
    }

    pub fn ket(&self, i: usize) -> &Ket2 {
        &self.kets[i]
    }

    /// Unitary whose rows are the bras of this basis.
    pub fn unitary(&self) -> Mat2 {
        Mat2::from_fn(|r, c| self.kets[r][c].conj())
    }

    /// Largest `| |<a_i|b_j>|^2 - target |` over all ket pairs.
    pub fn overlap_deviation(&self, other: &QubitBasis, target: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for a in &self.kets {
            for b in &other.kets {
                worst = worst.max((a.dotc(b).norm_sqr() - target).abs());
            }
        }
        worst
    }
}

/// `ket_0 = cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>`,
/// `ket_1 = -sin(theta/2)|0> + cos(theta/2) e^{i phi}|1>`.
pub fn local_qubit_basis(theta: f64, phi: f64) -> QubitBasis {
    let (s, c) = (0.5 * theta).sin_cos();
    let phase = C64::from_polar(1.0, phi);
    QubitBasis {
        kets: [
            Ket2::new(C64::new(c, 0.0), phase * s),
            Ket2::new(C64::new(-s, 0.0), phase * c),
        ],
    }
}

/// `|u_0> = (|0> + e^{i Phi}|1>)/sqrt 2`, `|u_1> = (|0> - e^{i Phi}|1>)/sqrt 2`
/// where `|0>, |1>` are the kets of `computational`.
pub fn complementary_qubit_basis(big_phi: f64, computational: &QubitBasis) -> QubitBasis {
    let phase = C64::from_polar(1.0, big_phi);
    let [k0, k1] = computational.kets;
    let r = C64::new(FRAC_1_SQRT_2, 0.0);
    QubitBasis {
        kets: [(k0 + k1 * phase) * r, (k0 - k1 * phase) * r],
    }
}

/// Outcome probabilities `p(i, j)` of a local projective measurement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JointDistribution {
    p: [[f64; 2]; 2],
}

impl JointDistribution {
    /// Validates a table, clamping entries within [`PROBABILITY_TOL`] of the
    /// unit interval.
    pub fn new(p: [[f64; 2]; 2]) -> Result<Self> {
        let mut total = 0.0;
        let mut out = p;
        for row in out.iter_mut() {
            for v in row.iter_mut() {
                if !(*v >= -PROBABILITY_TOL && *v <= 1.0 + PROBABILITY_TOL) {
                    return Err(Error::Probability { value: *v });
                }
                *v = v.clamp(0.0, 1.0);
                total += *v;
            }
        }
        if (total - 1.0).abs() > PROBABILITY_TOL {
            return Err(Error::Probability { value: total });
        }
        Ok(JointDistribution { p: out })
    }

    pub(crate) fn from_raw(p: [[f64; 2]; 2]) -> Self {
        let mut out = p;
        for v in out.iter_mut().flatten() {
            debug_assert!(
                *v > -PROBABILITY_TOL && *v < 1.0 + PROBABILITY_TOL,
                "p = {v}"
            );
            *v = v.clamp(0.0, 1.0);
        }
        JointDistribution { p: out }
    }

    pub fn p(&self, i: usize, j: usize) -> f64 {
        self.p[i][j]
    }

    pub fn table(&self) -> [[f64; 2]; 2] {
        self.p
    }

    /// Row-major `[p00, p01, p10, p11]`.
    pub fn flattened(&self) -> [f64; 4] {
        [self.p[0][0], self.p[0][1], self.p[1][0], self.p[1][1]]
    }

    pub fn marginal_a(&self) -> [f64; 2] {
        [self.p[0][0] + self.p[0][1], self.p[1][0] + self.p[1][1]]
    }

    pub fn marginal_b(&self) -> [f64; 2] {
        [self.p[0][0] + self.p[1][0], self.p[0][1] + self.p[1][1]]
    }
}

fn product_ket(a: &QubitBasis, b: &QubitBasis, i: usize, j: usize) -> Ket4 {
    kron_ket(&a.kets[i], &b.kets[j])
}

/// `p(i, j) = <a_i b_j| rho |a_i b_j>`.
pub fn joint_projective_distribution(
    rho: &DensityMatrix,
    basis_a: &QubitBasis,
    basis_b: &QubitBasis,
) -> JointDistribution {
    let mut p = [[0.0; 2]; 2];
    for (i, row) in p.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let ket = product_ket(basis_a, basis_b, i, j);
            *v = crate::linalg::expectation4(rho.matrix(), &ket);
        }
    }
    JointDistribution::from_raw(p)
}

/// The strictly classical state `sum_ij p(i, j) |a_i b_j><a_i b_j|`.
pub fn dephase_in_basis(
    rho: &DensityMatrix,
    basis_a: &QubitBasis,
    basis_b: &QubitBasis,
) -> DensityMatrix {
    let dist = joint_projective_distribution(rho, basis_a, basis_b);
    let mut m = Mat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let ket = product_ket(basis_a, basis_b, i, j);
            m += ket * ket.adjoint() * C64::new(dist.p(i, j), 0.0);
        }
    }
    DensityMatrix::trusted(m)
}

/// `(U_a (x) U_b) rho (U_a (x) U_b)^dagger`, with the rows of each `U` the
/// bras of the corresponding basis.
pub fn rotate_to_basis(
    rho: &DensityMatrix,
    basis_a: &QubitBasis,
    basis_b: &QubitBasis,
) -> DensityMatrix {
    let u = kron(&basis_a.unitary(), &basis_b.unitary());
    DensityMatrix::trusted(u * rho.matrix() * u.adjoint())
}

/// Both candidate classicality scores of a local basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BasisScore {
    /// `S(rho || chi)` with `chi` the state dephased in the basis.
    pub relative_entropy: f64,
    /// Mutual information of the measurement outcomes in the basis.
    pub mutual_information: f64,
}

pub fn basis_score(rho: &DensityMatrix, basis_a: &QubitBasis, basis_b: &QubitBasis) -> BasisScore {
    let chi = dephase_in_basis(rho, basis_a, basis_b);
    BasisScore {
        relative_entropy: relative_entropy(rho, &chi),
        mutual_information: mutual_information(&joint_projective_distribution(
            rho, basis_a, basis_b,
        )),
    }
}

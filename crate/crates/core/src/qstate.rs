//! Two-qubit density operators.
//!
//! A [`DensityMatrix`] can only be obtained through validation, so every value
//! of the type is Hermitian, has unit trace and is positive semidefinite
//! within the tolerances below.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues2, kron, pauli, shannon_entropy, Mat2, Mat4, C64, ONE,
    ZERO,
};

/// Hermiticity and trace tolerance.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD_TOL: f64 = 1e-9;
/// Slack on the Bell-basis eigenvalues of [`BellDiagonalParams`].
pub const BELL_EIGENVALUE_TOL: f64 = 1e-12;

/// One failed density-matrix invariant and by how much it failed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Violation {
    NonFinite,
    /// Largest `|m_ij - conj(m_ji)|`.
    Hermiticity(f64),
    /// `|Tr m - 1|`.
    Trace(f64),
    /// Magnitude of the most negative eigenvalue.
    Positivity(f64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFinite => write!(f, "non-finite entry"),
            Violation::Hermiticity(d) => write!(f, "Hermiticity violated by {d:e}"),
            Violation::Trace(d) => write!(f, "trace differs from 1 by {d:e}"),
            Violation::Positivity(d) => write!(f, "eigenvalue -{d} below zero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

impl ValidationReport {
    pub fn positivity(&self) -> Option<f64> {
        self.violations.iter().find_map(|v| match v {
            Violation::Positivity(d) => Some(*d),
            _ => None,
        })
    }

    pub fn trace(&self) -> Option<f64> {
        self.violations.iter().find_map(|v| match v {
            Violation::Trace(d) => Some(*d),
            _ => None,
        })
    }

    pub fn hermiticity(&self) -> Option<f64> {
        self.violations.iter().find_map(|v| match v {
            Violation::Hermiticity(d) => Some(*d),
            _ => None,
        })
    }
}

/// Validates a candidate two-qubit density matrix.
///
/// `tol` bounds the Hermiticity and trace deviations. Positivity is always
/// judged against [`PSD_TOL`], which is looser because channel application
/// compounds rounding.
pub fn validate_density(
    m: &Mat4,
    tol: f64,
) -> std::result::Result<DensityMatrix, ValidationReport> {
    let mut violations = Vec::new();
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(ValidationReport {
            violations: vec![Violation::NonFinite],
        });
    }
    let herm = m
        .iter()
        .zip(m.adjoint().iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if herm > tol {
        violations.push(Violation::Hermiticity(herm));
    }
    let trace = (m.trace() - ONE).norm();
    if trace > tol {
        violations.push(Violation::Trace(trace));
    }
    let hermitian_part = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let (eigenvalues, _) = hermitian_eigen(&hermitian_part);
    let min = eigenvalues[0];
    if min < -PSD_TOL {
        violations.push(Violation::Positivity(-min));
    }
    if violations.is_empty() {
        Ok(DensityMatrix(*m))
    } else {
        Err(ValidationReport { violations })
    }
}

/// Validated 4x4 two-qubit density operator in the computational basis
/// `|00>, |01>, |10>, |11>` (qubit A is the left factor).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(Mat4);

impl DensityMatrix {
    pub fn new(m: Mat4) -> Result<Self> {
        Ok(validate_density(&m, HERMITIAN_TOL)?)
    }

    /// Wraps the image of a valid state under a map known to preserve validity.
    pub(crate) fn trusted(m: Mat4) -> Self {
        debug_assert!(validate_density(&m, HERMITIAN_TOL).is_ok());
        DensityMatrix(m)
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(Mat4::identity() * C64::new(0.25, 0.0))
    }

    /// `|psi><psi|` for a normalized two-qubit ket.
    pub fn pure(psi: &crate::linalg::Ket4) -> Result<Self> {
        Self::new(psi * psi.adjoint())
    }

    /// `rho_a (x) rho_b`.
    pub fn product(a: &SingleQubitState, b: &SingleQubitState) -> Self {
        DensityMatrix(kron(a.matrix(), b.matrix()))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let (v, _) = hermitian_eigen(&self.0);
        [v[0], v[1], v[2], v[3]]
    }

    /// Exchanges the roles of qubits A and B.
    pub fn swap_subsystems(&self) -> Self {
        const PERM: [usize; 4] = [0, 2, 1, 3];
        DensityMatrix(Mat4::from_fn(|r, c| self.0[(PERM[r], PERM[c])]))
    }

    /// Largest entrywise distance to another state.
    pub fn distance(&self, other: &DensityMatrix) -> f64 {
        crate::linalg::max_abs_diff4(&self.0, &other.0)
    }
}

/// Validated single-qubit density operator.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleQubitState(Mat2);

impl SingleQubitState {
    pub fn new(m: Mat2) -> Result<Self> {
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(ValidationReport {
                violations: vec![Violation::NonFinite],
            }
            .into());
        }
        let mut violations = Vec::new();
        let herm = (m[(0, 1)] - m[(1, 0)].conj())
            .norm()
            .max(m[(0, 0)].im.abs())
            .max(m[(1, 1)].im.abs());
        if herm > HERMITIAN_TOL {
            violations.push(Violation::Hermiticity(herm));
        }
        let trace = (m.trace() - ONE).norm();
        if trace > HERMITIAN_TOL {
            violations.push(Violation::Trace(trace));
        }
        let [lo, _] = hermitian_eigenvalues2(&m);
        if lo < -PSD_TOL {
            violations.push(Violation::Positivity(-lo));
        }
        if violations.is_empty() {
            Ok(SingleQubitState(m))
        } else {
            Err(ValidationReport { violations }.into())
        }
    }

    pub fn maximally_mixed() -> Self {
        SingleQubitState(Mat2::identity() * C64::new(0.5, 0.0))
    }

    /// State with Bloch vector `r` (|r| <= 1).
    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let mut m = pauli(0);
        for (n, rn) in r.iter().enumerate() {
            m += pauli(n + 1) * C64::new(*rn, 0.0);
        }
        Self::new(m * C64::new(0.5, 0.0))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn eigenvalues(&self) -> [f64; 2] {
        hermitian_eigenvalues2(&self.0)
    }
}

/// Anything with a real spectrum whose entropy can be taken.
pub trait Spectrum {
    fn spectrum(&self) -> Vec<f64>;
}

impl Spectrum for DensityMatrix {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

impl Spectrum for SingleQubitState {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

/// Bell-diagonal states use their closed-form eigenvalues.
impl Spectrum for BellDiagonalParams {
    fn spectrum(&self) -> Vec<f64> {
        self.bell_eigenvalues().to_vec()
    }
}

/// `-sum lambda log2 lambda` in bits.
pub fn von_neumann_entropy<S: Spectrum + ?Sized>(state: &S) -> f64 {
    shannon_entropy(state.spectrum())
}

/// Coefficients `(c1, c2, c3)` of `(1/4)(I + sum c_i sigma_i (x) sigma_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellDiagonalParams {
    c1: f64,
    c2: f64,
    c3: f64,
}

impl BellDiagonalParams {
    /// Accepts the triple when all four Bell-basis eigenvalues are nonnegative.
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for (name, c) in [("c1", c1), ("c2", c2), ("c3", c3)] {
            check_range(
                name,
                c,
                -1.0 - BELL_EIGENVALUE_TOL,
                1.0 + BELL_EIGENVALUE_TOL,
            )?;
        }
        let p = BellDiagonalParams { c1, c2, c3 };
        let min_eigenvalue = p
            .bell_eigenvalues()
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eigenvalue < -BELL_EIGENVALUE_TOL {
            return Err(Error::NonPhysical {
                c1,
                c2,
                c3,
                min_eigenvalue,
            });
        }
        Ok(p)
    }

    /// The Werner family `(z, -z, z)`.
    pub fn werner(z: f64) -> Result<Self> {
        check_range("z", z, 0.0, 1.0)?;
        Self::new(z, -z, z)
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn c3(&self) -> f64 {
        self.c3
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Eigenvalues on `|Phi+>, |Phi->, |Psi+>, |Psi->` in that order.
    pub fn bell_eigenvalues(&self) -> [f64; 4] {
        let (c1, c2, c3) = (self.c1, self.c2, self.c3);
        [
            (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0,
            (1.0 - c1 - c2 - c3) / 4.0,
        ]
    }

    /// Recovers the coefficients when `rho` is Bell diagonal within `tol`.
    pub fn from_state(rho: &DensityMatrix, tol: f64) -> Option<Self> {
        let b = bloch_decompose(rho);
        let local = b.x.iter().chain(b.y.iter()).all(|v| v.abs() <= tol);
        let off_diagonal = (0..3)
            .flat_map(|n| (0..3).map(move |m| (n, m)))
            .filter(|(n, m)| n != m)
            .all(|(n, m)| b.t[n][m].abs() <= tol);
        if local && off_diagonal {
            Self::new(b.t[0][0], b.t[1][1], b.t[2][2]).ok()
        } else {
            None
        }
    }
}

/// `(1/4)(I (x) I + sum_i c_i sigma_i (x) sigma_i)`.
pub fn bell_diagonal_state(params: &BellDiagonalParams) -> DensityMatrix {
    let (c1, c2, c3) = (params.c1, params.c2, params.c3);
    let re = |x: f64| C64::new(x / 4.0, 0.0);
    let (d, e, corner, inner) = (re(1.0 + c3), re(1.0 - c3), re(c1 - c2), re(c1 + c2));
    #[rustfmt::skip]
    let m = Mat4::new(
        d,      ZERO,  ZERO,  corner,
        ZERO,   e,     inner, ZERO,
        ZERO,   inner, e,     ZERO,
        corner, ZERO,  ZERO,  d,
    );
    // Physical parameters give a matrix whose spectrum is the Bell eigenvalues.
    DensityMatrix(m)
}

/// `z |Phi+><Phi+| + (1 - z)/4 I`.
pub fn werner_state(z: f64) -> Result<DensityMatrix> {
    check_range("z", z, 0.0, 1.0)?;
    let mut m = Mat4::identity() * C64::new((1.0 - z) / 4.0, 0.0);
    let half = C64::new(z / 2.0, 0.0);
    for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(r, c)] += half;
    }
    Ok(DensityMatrix(m))
}

/// Local Bloch vectors and correlation tensor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochParams {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochParams {
    pub fn zero() -> Self {
        BlochParams {
            x: [0.0; 3],
            y: [0.0; 3],
            t: [[0.0; 3]; 3],
        }
    }

    pub fn bell_diagonal(c: [f64; 3]) -> Self {
        let mut b = Self::zero();
        for (n, cn) in c.into_iter().enumerate() {
            b.t[n][n] = cn;
        }
        b
    }
}

pub fn bloch_decompose(rho: &DensityMatrix) -> BlochParams {
    let tr = |a: usize, b: usize| (rho.0 * kron(&pauli(a), &pauli(b))).trace().re;
    let mut out = BlochParams::zero();
    for n in 0..3 {
        out.x[n] = tr(n + 1, 0);
        out.y[n] = tr(0, n + 1);
        for m in 0..3 {
            out.t[n][m] = tr(n + 1, m + 1);
        }
    }
    out
}

/// Builds `(1/4)(I + x.sigma (x) I + I (x) y.sigma + sum T_nm sigma_n (x) sigma_m)`
/// and rejects parameter sets that are not positive semidefinite.
pub fn bloch_compose(params: &BlochParams) -> Result<DensityMatrix> {
    let mut m = Mat4::identity();
    for n in 0..3 {
        m += kron(&pauli(n + 1), &pauli(0)) * C64::new(params.x[n], 0.0);
        m += kron(&pauli(0), &pauli(n + 1)) * C64::new(params.y[n], 0.0);
        for k in 0..3 {
            m += kron(&pauli(n + 1), &pauli(k + 1)) * C64::new(params.t[n][k], 0.0);
        }
    }
    DensityMatrix::new(m * C64::new(0.25, 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Reduced state of `keep`, tracing out the other qubit.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> SingleQubitState {
    let m = &rho.0;
    let reduced = match keep {
        Subsystem::A => Mat2::from_fn(|i, k| m[(2 * i, 2 * k)] + m[(2 * i + 1, 2 * k + 1)]),
        Subsystem::B => Mat2::from_fn(|j, l| m[(j, l)] + m[(2 + j, 2 + l)]),
    };
    SingleQubitState(reduced)
}

/// Eigenvalues of `chi` below this count as outside its support.
const SUPPORT_TOL: f64 = 1e-12;

/// `S(rho || chi) = -Tr(rho log2 chi) - S(rho)` in bits.
///
/// Returns `f64::INFINITY` when `rho` has weight outside the support of `chi`.
pub fn relative_entropy(rho: &DensityMatrix, chi: &DensityMatrix) -> f64 {
    let (mu, vectors) = hermitian_eigen(&chi.0);
    let mut cross = 0.0;
    for k in 0..4 {
        let v = vectors.column(k).into_owned();
        let weight = crate::linalg::expectation4(&rho.0, &v);
        if mu[k] <= SUPPORT_TOL {
            if weight > 1e-10 {
                return f64::INFINITY;
            }
            continue;
        }
        cross -= weight * mu[k].log2();
    }
    let s = cross - von_neumann_entropy(rho);
    if s < 0.0 && s > -1e-12 {
        0.0
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron_ket, max_abs_diff2, max_abs_diff4, Ket2, Ket4};
    use approx::assert_abs_diff_eq;

    fn phi_plus() -> DensityMatrix {
        let s = C64::new(0.5f64.sqrt(), 0.0);
        DensityMatrix::pure(&Ket4::new(s, ZERO, ZERO, s)).unwrap()
    }

    /// Independent construction: explicit Kronecker sum of Pauli products.
    fn bd_by_kron(c: [f64; 3]) -> Mat4 {
        let mut m = kron(&pauli(0), &pauli(0));
        for (i, ci) in c.into_iter().enumerate() {
            m += kron(&pauli(i + 1), &pauli(i + 1)) * C64::new(ci, 0.0);
        }
        m * C64::new(0.25, 0.0)
    }

    #[test]
    fn bell_diagonal_examples() {
        let mixed = bell_diagonal_state(&BellDiagonalParams::new(0.0, 0.0, 0.0).unwrap());
        assert_abs_diff_eq!(mixed.distance(&DensityMatrix::maximally_mixed()), 0.0);

        let bell = bell_diagonal_state(&BellDiagonalParams::new(1.0, -1.0, 1.0).unwrap());
        assert!(bell.distance(&phi_plus()) < 1e-15);

        let p = BellDiagonalParams::new(0.25, -0.25, 0.5).unwrap();
        let rho = bell_diagonal_state(&p);
        let diag: Vec<f64> = (0..4).map(|i| rho.entry(i, i).re).collect();
        assert_eq!(diag, vec![0.375, 0.125, 0.125, 0.375]);
        assert_eq!(rho.entry(0, 3).re, 0.125);
        assert_eq!(rho.entry(3, 0).re, 0.125);
        assert!(max_abs_diff4(rho.matrix(), &bd_by_kron([0.25, -0.25, 0.5])) < 1e-15);
        let back = bloch_decompose(&rho);
        assert!(bloch_compose(&back).unwrap().distance(&rho) < 1e-15);
    }

    #[test]
    fn bell_diagonal_rejects_unphysical() {
        let err = BellDiagonalParams::new(1.0, 1.0, 1.0).unwrap_err();
        match err {
            Error::NonPhysical { min_eigenvalue, .. } => assert_eq!(min_eigenvalue, -0.5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(BellDiagonalParams::new(1.5, 0.0, 0.0).is_err());
        assert!(BellDiagonalParams::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn werner_examples() {
        assert_abs_diff_eq!(
            werner_state(0.0)
                .unwrap()
                .distance(&DensityMatrix::maximally_mixed()),
            0.0
        );
        let w1 = werner_state(1.0).unwrap();
        let expected = [0.5, 0.0, 0.0, 0.5];
        for (i, e) in expected.into_iter().enumerate() {
            assert_eq!(w1.entry(i, i).re, e);
        }
        assert_eq!(w1.entry(0, 3).re, 0.5);
        let w = werner_state(0.5).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| w.entry(i, i).re).collect();
        assert_eq!(diag, vec![0.375, 0.125, 0.125, 0.375]);
        assert_eq!(w.entry(0, 3).re, 0.25);
        assert!(werner_state(1.01).is_err());
        assert!(werner_state(-0.1).is_err());
    }

    #[test]
    fn werner_equals_bell_diagonal() {
        for k in 0..=100 {
            let z = k as f64 / 100.0;
            let a = werner_state(z).unwrap();
            let b = bell_diagonal_state(&BellDiagonalParams::werner(z).unwrap());
            assert!(a.distance(&b) <= 1e-15, "z = {z}");
        }
    }

    #[test]
    fn bloch_examples() {
        let b = bloch_decompose(&DensityMatrix::maximally_mixed());
        assert_eq!(b, BlochParams::zero());

        let z = 0.37;
        let b = bloch_decompose(&werner_state(z).unwrap());
        assert_eq!(b.x, [0.0; 3]);
        assert_eq!(b.y, [0.0; 3]);
        let expected = [[z, 0.0, 0.0], [0.0, -z, 0.0], [0.0, 0.0, z]];
        for n in 0..3 {
            for m in 0..3 {
                assert_abs_diff_eq!(b.t[n][m], expected[n][m], epsilon = 1e-15);
            }
        }

        let bell = bloch_compose(&BlochParams::bell_diagonal([1.0, -1.0, 1.0])).unwrap();
        assert!(bell.distance(&phi_plus()) < 1e-15);
    }

    #[test]
    fn bloch_compose_rejects_negative_spectrum() {
        let err = bloch_compose(&BlochParams::bell_diagonal([1.0, 1.0, 1.0])).unwrap_err();
        let Error::InvalidDensity(report) = err else {
            panic!("expected a validation report");
        };
        assert_abs_diff_eq!(report.positivity().unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn partial_trace_examples() {
        let half = SingleQubitState::maximally_mixed();
        for z in [0.0, 0.3, 1.0] {
            let w = werner_state(z).unwrap();
            for s in [Subsystem::A, Subsystem::B] {
                assert!(max_abs_diff2(partial_trace(&w, s).matrix(), half.matrix()) < 1e-15);
            }
        }
        assert!(
            max_abs_diff2(
                partial_trace(&phi_plus(), Subsystem::A).matrix(),
                half.matrix()
            ) < 1e-15
        );

        let a = SingleQubitState::from_bloch([0.1, -0.2, 0.3]).unwrap();
        let b = SingleQubitState::from_bloch([0.0, 0.6, -0.5]).unwrap();
        let prod = DensityMatrix::product(&a, &b);
        assert!(max_abs_diff2(partial_trace(&prod, Subsystem::B).matrix(), b.matrix()) < 1e-15);
        assert!(max_abs_diff2(partial_trace(&prod, Subsystem::A).matrix(), a.matrix()) < 1e-15);
    }

    #[test]
    fn entropy_examples() {
        assert_abs_diff_eq!(von_neumann_entropy(&phi_plus()), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            von_neumann_entropy(&DensityMatrix::maximally_mixed()),
            2.0,
            epsilon = 1e-12
        );
        // eigenvalues (1 + 3z)/4 once and (1 - z)/4 three times
        let z: f64 = 0.5;
        let oracle = -(xl((1.0 + 3.0 * z) / 4.0) + 3.0 * xl((1.0 - z) / 4.0));
        let w = werner_state(z).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&w), oracle, epsilon = 1e-12);
        assert_abs_diff_eq!(oracle, 1.548795, epsilon = 1e-6);
        assert_abs_diff_eq!(
            von_neumann_entropy(&SingleQubitState::maximally_mixed()),
            1.0,
            epsilon = 1e-15
        );
    }

    fn xl(x: f64) -> f64 {
        x * x.log2()
    }

    #[test]
    fn relative_entropy_examples() {
        let w = werner_state(0.5).unwrap();
        assert_abs_diff_eq!(relative_entropy(&w, &w), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            relative_entropy(&phi_plus(), &DensityMatrix::maximally_mixed()),
            2.0,
            epsilon = 1e-12
        );

        let mut diag = Mat4::zeros();
        for i in 0..4 {
            diag[(i, i)] = w.entry(i, i);
        }
        let chi = DensityMatrix::new(diag).unwrap();
        let s_chi = -(2.0 * xl(0.375) + 2.0 * xl(0.125));
        let s_rho = -(xl(0.625) + 3.0 * xl(0.125));
        assert_abs_diff_eq!(relative_entropy(&w, &chi), s_chi - s_rho, epsilon = 1e-12);
        assert_abs_diff_eq!(s_chi - s_rho, 0.26248, epsilon = 1e-5);
    }

    #[test]
    fn relative_entropy_support_violation() {
        let zero = Ket2::new(ONE, ZERO);
        let one = Ket2::new(ZERO, ONE);
        let chi = DensityMatrix::pure(&kron_ket(&zero, &zero)).unwrap();
        let rho = DensityMatrix::pure(&kron_ket(&one, &one)).unwrap();
        assert_eq!(relative_entropy(&rho, &chi), f64::INFINITY);
    }

    #[test]
    fn validation_reports() {
        assert!(validate_density(&(Mat4::identity() * C64::new(0.25, 0.0)), 1e-12).is_ok());

        let report =
            validate_density(&(Mat4::identity() * C64::new(0.275, 0.0)), 1e-12).unwrap_err();
        assert_abs_diff_eq!(report.trace().unwrap(), 0.1, epsilon = 1e-12);
        assert!(report.positivity().is_none());

        let mut m = Mat4::identity() * C64::new(0.25, 0.0);
        m[(0, 1)] = C64::new(0.1, 0.0);
        let report = validate_density(&m, 1e-12).unwrap_err();
        assert_abs_diff_eq!(report.hermiticity().unwrap(), 0.1, epsilon = 1e-15);

        let unphysical = bd_by_kron([1.0, 1.0, 1.0]);
        let report = validate_density(&unphysical, 1e-12).unwrap_err();
        assert_eq!(report.violations.len(), 1);
        assert_abs_diff_eq!(report.positivity().unwrap(), 0.5, epsilon = 1e-12);

        let mut nan = Mat4::identity() * C64::new(0.25, 0.0);
        nan[(2, 2)] = C64::new(f64::NAN, 0.0);
        assert_eq!(
            validate_density(&nan, 1e-12).unwrap_err().violations,
            vec![Violation::NonFinite]
        );
    }

    #[test]
    fn swap_is_an_involution() {
        let a = SingleQubitState::from_bloch([0.3, 0.0, 0.1]).unwrap();
        let b = SingleQubitState::from_bloch([0.0, 0.2, -0.4]).unwrap();
        let ab = DensityMatrix::product(&a, &b);
        let ba = DensityMatrix::product(&b, &a);
        assert!(ab.swap_subsystems().distance(&ba) < 1e-15);
        assert_eq!(ab.swap_subsystems().swap_subsystems(), ab);
    }
}

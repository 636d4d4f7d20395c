//! Small fixed-size complex linear algebra shared by the other modules.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector2, Vector4, SVD};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;
pub type Ket2 = Vector2<C64>;
pub type Ket4 = Vector4<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Pauli matrix by index: 0 = identity, 1 = x, 2 = y, 3 = z.
pub fn pauli(n: usize) -> Mat2 {
    match n {
        0 => Mat2::new(ONE, ZERO, ZERO, ONE),
        1 => Mat2::new(ZERO, ONE, ONE, ZERO),
        2 => Mat2::new(ZERO, -I, I, ZERO),
        3 => Mat2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {n} out of range"),
    }
}

pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

pub fn kron_ket(a: &Ket2, b: &Ket2) -> Ket4 {
    Ket4::from_fn(|r, _| a[r / 2] * b[r % 2])
}

/// `x log2 x` with the `0 log 0 = 0` convention.
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Eigenvalues at or above this are treated as zero before taking logarithms.
pub const SPECTRUM_CLAMP: f64 = -1e-9;

/// `-sum p log2 p` over a spectrum or distribution, clamping small negatives.
pub fn shannon_entropy<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let s: f64 = values
        .into_iter()
        .map(|v| {
            if (SPECTRUM_CLAMP..0.0).contains(&v) {
                0.0
            } else {
                v
            }
        })
        .map(xlog2x)
        .sum();
    -s + 0.0
}

/// Real eigenvalues (ascending) and eigenvectors of a Hermitian 4x4 matrix.
pub fn hermitian_eigen(m: &Mat4) -> (Vector4<f64>, Mat4) {
    let eig = SymmetricEigen::new(*m);
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = Vector4::from_fn(|i, _| eig.eigenvalues[order[i]]);
    let vectors = Mat4::from_fn(|r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Singular values of a complex 4x4 matrix, in decreasing order.
pub fn singular_values(m: &Mat4) -> [f64; 4] {
    let svd = SVD::new(*m, false, false);
    let mut s = [
        svd.singular_values[0],
        svd.singular_values[1],
        svd.singular_values[2],
        svd.singular_values[3],
    ];
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Eigenvalues (ascending) of a Hermitian 2x2 matrix.
pub fn hermitian_eigenvalues2(m: &Mat2) -> [f64; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let mean = 0.5 * (a + d);
    let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    [mean - radius, mean + radius]
}

/// `<v| m |v>` for a Hermitian 2x2 matrix; the imaginary part is dropped.
#[inline]
pub fn expectation2(m: &Mat2, v: &Ket2) -> f64 {
    m[(0, 0)].re * v[0].norm_sqr()
        + m[(1, 1)].re * v[1].norm_sqr()
        + 2.0 * (v[0].conj() * m[(0, 1)] * v[1]).re
}

/// `<v| m |v>` for a Hermitian 4x4 matrix.
pub fn expectation4(m: &Mat4, v: &Ket4) -> f64 {
    (v.adjoint() * m * v)[(0, 0)].re
}

pub fn max_abs_diff4(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_abs_diff2(a: &Mat2, b: &Mat2) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

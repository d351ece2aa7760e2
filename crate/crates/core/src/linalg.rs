//! Small dense complex linear algebra on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::PI;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `[F_c]_{jk} = exp(2 pi i jk / c) / sqrt(c)`.
pub fn fourier(n: usize) -> CMat {
    let s = 1.0 / (n as f64).sqrt();
    CMat::from_fn(n, n, |j, k| {
        Complex64::from_polar(s, 2.0 * PI * ((j * k) % n) as f64 / n as f64)
    })
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |U^dagger U - I|`.
pub fn unitarity_residual(u: &CMat) -> f64 {
    max_abs(&(u.adjoint() * u - identity(u.ncols())))
}

pub fn hermiticity_residual(m: &CMat) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// `|v><v|`.
pub fn outer(v: &CVec) -> CMat {
    v * v.adjoint()
}

pub fn conj(m: &CMat) -> CMat {
    m.map(|z| z.conj())
}

/// Eigenvalues (ascending) and matching eigenvector columns of the Hermitian
/// part of `m`.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let h = (m + m.adjoint()).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(h);
    let mut idx: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMat::from_fn(m.nrows(), idx.len(), |r, col| eig.eigenvectors[(r, idx[col])]);
    (values, vectors)
}

/// Projector onto the span of eigenvectors with eigenvalue above `threshold`.
pub struct Support {
    pub projector: CMat,
    pub rank: usize,
    /// Some eigenvalue lies within a factor 10 of the threshold.
    pub ambiguous: bool,
}

pub fn support(m: &CMat, threshold: f64) -> Support {
    let (values, vectors) = hermitian_eigen(m);
    let n = m.nrows();
    let mut projector = CMat::zeros(n, n);
    let mut rank = 0;
    let mut ambiguous = false;
    for (i, &lambda) in values.iter().enumerate() {
        if lambda > threshold / 10.0 && lambda < threshold * 10.0 {
            ambiguous = true;
        }
        if lambda > threshold {
            let v = vectors.column(i).into_owned();
            projector += outer(&v);
            rank += 1;
        }
    }
    Support {
        projector,
        rank,
        ambiguous,
    }
}

/// Number of eigenvalues above 1/2, i.e. the rank of a (near-)projector.
pub fn projector_rank(m: &CMat) -> usize {
    hermitian_eigen(m).0.iter().filter(|&&l| l > 0.5).count()
}

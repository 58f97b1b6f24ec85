//! Small dense complex matrices and the Hermitian spectral routines built on
//! a cyclic complex Jacobi eigensolver.
//!
//! Everything here is sized for the handful-of-levels problems in this crate
//! (dimension 2 to ~16). Storage is a flat row-major `Vec<Complex64>`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity tolerance on max |m - m^H|, relative to max(1, max |m_ij|).
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues down to this (relative) negative value are rounded to zero.
pub const PSD_CLAMP_TOL: f64 = 1e-12;
/// Eigenvalues below this (relative) negative value reject the input as non-PSD.
pub const PSD_REJECT_TOL: f64 = 1e-9;
/// Iteration cap for the Jacobi eigensolver, in full cyclic sweeps.
pub const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as
    /// there are rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Complex64> {
        (row < self.dim && col < self.dim).then(|| self.data[row * self.dim + col])
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    /// Entry-wise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// max |a_ij - b_ij|. Panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max |m - m^H|.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol * self.max_abs().max(1.0)
    }

    /// (m + m^H) / 2
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |r, c| 0.5 * (self[(r, c)] + self[(c, r)].conj()))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Determinant by LU factorisation with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm()))
                .unwrap();
            if a[pivot * n + k].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != k {
                for c in 0..n {
                    a.swap(k * n + c, pivot * n + c);
                }
                det = -det;
            }
            let akk = a[k * n + k];
            det *= akk;
            for i in k + 1..n {
                let factor = a[i * n + k] / akk;
                for c in k + 1..n {
                    let upper = a[k * n + c];
                    a[i * n + c] -= factor * upper;
                }
            }
        }
        det
    }

    fn check_hermitian(&self) -> Result<()> {
        let defect = self.hermitian_defect();
        if defect > HERMITIAN_TOL * self.max_abs().max(1.0) {
            return Err(Error::NotHermitian {
                max_deviation: defect,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(
            r < self.dim && c < self.dim,
            "index ({r}, {c}) out of bounds for {0}x{0} matrix",
            self.dim
        );
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(
            r < self.dim && c < self.dim,
            "index ({r}, {c}) out of bounds for {0}x{0} matrix",
            self.dim
        );
        &mut self.data[r * self.dim + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let lhs = self.data[r * n + k];
                if lhs == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += lhs * rhs.data[k * n + c];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {0}x{0} [", self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let z = self[(r, c)];
                write!(f, "{:>12.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigenvalues in ascending order with the matching unit eigenvectors stored
/// as the columns of a unitary matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// U f(diag(lambda)) U^H
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let weights: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let u = &self.vectors;
        ComplexMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|k| u[(r, k)] * u[(c, k)].conj() * weights[k])
                .sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|l| l)
    }
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen> {
    m.check_hermitian()?;
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let mut converged = n == 1;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                if jacobi_rotate(&mut a, &mut v, p, q) {
                    rotated = true;
                }
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Annihilates a[p][q] with a unitary plane rotation. Returns false when the
/// element was already negligible against both diagonal entries.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) -> bool {
    let n = a.dim();
    let b = a[(p, q)];
    let abs_b = b.norm();
    if abs_b == 0.0 {
        return false;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let guard = 100.0 * abs_b;
    if app.abs() + guard == app.abs() && aqq.abs() + guard == aqq.abs() {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return false;
    }

    let tau = (aqq - app) / (2.0 * abs_b);
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase = b / abs_b;
    // U = [[c, s e^{i phi}], [-s e^{-i phi}, c]] acting on the (p, q) plane.
    let u_pq = phase * s;
    let u_qp = -phase.conj() * s;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * u_qp.conj();
        a[(q, k)] = apk * u_pq.conj() + aqk * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * abs_b, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * abs_b, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * c;
    }
    true
}

/// exp(scale * m) for Hermitian m.
pub fn mat_exp_hermitian(m: &ComplexMatrix, scale: f64) -> Result<ComplexMatrix> {
    Ok(eig_hermitian(m)?.map_spectrum(|l| (scale * l).exp()))
}

/// Clamps roundoff-negative eigenvalues of a PSD spectrum to zero, rejecting
/// anything more negative than the PSD tolerance.
fn clamp_psd_spectrum(values: &mut [f64]) -> Result<()> {
    let scale = values.iter().fold(1.0_f64, |acc, l| acc.max(l.abs()));
    for l in values.iter_mut() {
        if *l < -PSD_REJECT_TOL * scale {
            return Err(Error::NotPsd { eigenvalue: *l });
        }
        if *l < 0.0 {
            debug_assert!(*l >= -PSD_REJECT_TOL * scale);
            *l = 0.0;
        }
    }
    Ok(())
}

/// Principal square root of a Hermitian positive-semidefinite matrix.
pub fn mat_sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let mut eig = eig_hermitian(m)?;
    clamp_psd_spectrum(&mut eig.values)?;
    Ok(eig.map_spectrum(f64::sqrt))
}

/// Eigenvalues of the (generally non-Hermitian) product `a * b` of two PSD
/// matrices, in descending order.
///
/// Obtained from the Hermitian matrix sqrt(a) b sqrt(a), which is similar to
/// `a * b`, so the result is real and non-negative.
pub fn product_eigenvalues_psd(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Vec<f64>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    b.check_hermitian()?;
    let root = mat_sqrt_psd(a)?;
    let sandwich = (&(&root * b) * &root).hermitian_part();
    let mut values = eig_hermitian(&sandwich)?.values;
    clamp_psd_spectrum(&mut values)?;
    values.reverse();
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n);
        for r in 0..n {
            m[(r, r)] = c(rng.gen_range(-2.0..2.0), 0.0);
            for col in r + 1..n {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[(r, col)] = z;
                m[(col, r)] = z.conj();
            }
        }
        m
    }

    fn random_psd(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
        let x = random_hermitian(rng, n);
        &x * &x.adjoint()
    }

    #[test]
    fn diagonal_input_is_already_solved() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, 2.0, 3.0, 4.0]);
        let eig = eig_hermitian(&m).unwrap();
        assert_eq!(eig.values, vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(eig.vectors, ComplexMatrix::identity(4));
    }

    #[test]
    fn pauli_x_spectrum() {
        let m = ComplexMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]])
            .unwrap();
        let eig = eig_hermitian(&m).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-15);
        assert!((eig.values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn random_hermitian_matches_characteristic_polynomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_hermitian(&mut rng, 4);
            let oracle = oracle::hermitian_eigenvalues_by_bisection(&m);
            let eig = eig_hermitian(&m).unwrap();
            for (a, b) in eig.values.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-10, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn reconstruction_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 2, 3, 4, 6, 8, 16] {
            for _ in 0..20 {
                let m = random_hermitian(&mut rng, n);
                let eig = eig_hermitian(&m).unwrap();
                let rel = (&eig.reconstruct() - &m).frobenius_norm() / m.frobenius_norm();
                assert!(rel < 1e-12, "n={n} rel={rel:e}");
                let gram = &eig.vectors.adjoint() * &eig.vectors;
                assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
                assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn trace_and_determinant_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let m = random_hermitian(&mut rng, 4);
            let eig = eig_hermitian(&m).unwrap();
            let sum: f64 = eig.values.iter().sum();
            assert!((sum - m.trace().re).abs() < 1e-12 * m.max_abs().max(1.0));
            let prod: f64 = eig.values.iter().product();
            let det = m.determinant();
            assert!(det.im.abs() < 1e-10 * det.norm().max(1e-300) + 1e-14);
            assert!(
                (prod - det.re).abs() <= 1e-10 * det.re.abs().max(1e-12),
                "{prod} {det}"
            );
        }
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let mut m = ComplexMatrix::identity(3);
        m[(0, 2)] = c(0.5, 0.0);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn zero_matrix_and_one_by_one() {
        let eig = eig_hermitian(&ComplexMatrix::zeros(4)).unwrap();
        assert_eq!(eig.values, vec![0.0; 4]);
        let one = ComplexMatrix::from_real_diagonal(&[-2.5]);
        assert_eq!(eig_hermitian(&one).unwrap().values, vec![-2.5]);
    }

    #[test]
    fn exponential_of_zero_is_identity() {
        for scale in [-3.0, 0.0, 10.0] {
            let e = mat_exp_hermitian(&ComplexMatrix::zeros(4), scale).unwrap();
            assert_eq!(e, ComplexMatrix::identity(4));
        }
    }

    #[test]
    fn exponential_of_diagonal() {
        let e = mat_exp_hermitian(&ComplexMatrix::from_real_diagonal(&[1.0, -1.0]), 1.0).unwrap();
        assert!((e[(0, 0)].re - std::f64::consts::E).abs() < 1e-15);
        assert!((e[(1, 1)].re - 1.0 / std::f64::consts::E).abs() < 1e-15);
        assert_eq!(e[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn exponential_matches_taylor_squaring_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let m = random_hermitian(&mut rng, 4);
            let ours = mat_exp_hermitian(&m, -0.7).unwrap();
            let reference = oracle::exp_taylor_squaring(&m.scale_real(-0.7));
            let rel = (&ours - &reference).frobenius_norm() / reference.frobenius_norm();
            assert!(rel < 1e-10, "rel={rel:e}");
            assert!(ours.is_hermitian(1e-12));
            assert!(eig_hermitian(&ours).unwrap().values[0] > 0.0);
        }
    }

    #[test]
    fn exponential_inverse_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let m = random_hermitian(&mut rng, 4);
            let s = rng.gen_range(-3.0..3.0);
            let p = &mat_exp_hermitian(&m, s).unwrap() * &mat_exp_hermitian(&m, -s).unwrap();
            assert!(p.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-10);
        }
    }

    #[test]
    fn square_roots() {
        assert_eq!(
            mat_sqrt_psd(&ComplexMatrix::identity(3)).unwrap(),
            ComplexMatrix::identity(3)
        );
        let r = mat_sqrt_psd(&ComplexMatrix::from_real_diagonal(&[4.0, 9.0])).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[2.0, 3.0])) < 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let m = random_psd(&mut rng, 4);
            let s = mat_sqrt_psd(&m).unwrap();
            assert!((&s * &s).max_abs_diff(&m) < 1e-10 * m.max_abs().max(1.0));
            assert!(s.is_hermitian(1e-12));
        }
    }

    #[test]
    fn square_root_rejects_indefinite() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, -1e-3]);
        assert!(matches!(mat_sqrt_psd(&m), Err(Error::NotPsd { .. })));
        // roundoff-sized negatives are clamped
        let m = ComplexMatrix::from_real_diagonal(&[1.0, -1e-13]);
        let s = mat_sqrt_psd(&m).unwrap();
        assert_eq!(s[(1, 1)], c(0.0, 0.0));
    }

    #[test]
    fn product_eigenvalues_trivial_cases() {
        let quarter = ComplexMatrix::identity(4).scale_real(0.25);
        let vals = product_eigenvalues_psd(&quarter, &quarter).unwrap();
        for v in vals {
            assert!((v - 1.0 / 16.0).abs() < 1e-15);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = random_psd(&mut rng, 4);
        let vals = product_eigenvalues_psd(&ComplexMatrix::identity(4), &b).unwrap();
        let mut direct = eig_hermitian(&b).unwrap().values;
        direct.reverse();
        for (a, b) in vals.iter().zip(&direct) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn product_eigenvalues_are_symmetric_in_arguments() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let a = random_psd(&mut rng, 4);
            let b = random_psd(&mut rng, 4);
            let ab = product_eigenvalues_psd(&a, &b).unwrap();
            let ba = product_eigenvalues_psd(&b, &a).unwrap();
            let scale = ab[0].max(1.0);
            for (x, y) in ab.iter().zip(&ba) {
                assert!((x - y).abs() < 1e-10 * scale, "{x} {y}");
            }
        }
    }

    #[test]
    fn product_eigenvalues_dimension_mismatch() {
        let r = product_eigenvalues_psd(&ComplexMatrix::identity(2), &ComplexMatrix::identity(4));
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    #[should_panic(expected = "out of bounds")]
    fn indexing_is_bounds_checked() {
        let m = ComplexMatrix::identity(2);
        let _ = m[(2, 0)];
    }

    #[test]
    fn get_returns_none_out_of_bounds() {
        let m = ComplexMatrix::identity(2);
        assert_eq!(m.get(1, 1), Some(c(1.0, 0.0)));
        assert_eq!(m.get(0, 2), None);
    }
}

//! Independent reference computations used to check the production routines.
//!
//! Nothing in here shares code paths with `linalg`'s Jacobi solver: spectra
//! come from characteristic polynomials, exponentials from a truncated Taylor
//! series with scaling and squaring, fits from raw normal-equation sums.
//! Built for the crate's own tests and, behind the `oracle` feature, for
//! downstream test suites.

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;

/// Coefficients c_0..c_n (c_n = 1) of det(lambda I - m), by Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &ComplexMatrix) -> Vec<Complex64> {
    let n = m.dim();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let identity = ComplexMatrix::identity(n);
    let mut aux = ComplexMatrix::zeros(n);
    for k in 1..=n {
        aux = &(m * &aux) + &identity.scale(coeffs[n - k + 1]);
        coeffs[n - k] = -(m * &aux).trace() / k as f64;
    }
    coeffs
}

fn eval_real(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn eval_complex(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Real eigenvalues of a Hermitian matrix, ascending, located as sign changes
/// of the characteristic polynomial on a fine grid and refined by bisection.
///
/// Panics if fewer than `dim` distinct roots are bracketed (degenerate
/// spectra are outside what this oracle resolves).
pub fn hermitian_eigenvalues_by_bisection(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim();
    let coeffs: Vec<f64> = characteristic_polynomial(m).iter().map(|c| c.re).collect();
    // Gershgorin radius bounds every eigenvalue.
    let bound = (0..n)
        .map(|r| (0..n).map(|c| m[(r, c)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1e-9;
    let steps = 20_000;
    let mut roots = Vec::with_capacity(n);
    let mut prev_x = -bound;
    let mut prev_f = eval_real(&coeffs, prev_x);
    for i in 1..=steps {
        let x = -bound + 2.0 * bound * i as f64 / steps as f64;
        let f = eval_real(&coeffs, x);
        if f == 0.0 {
            roots.push(x);
        } else if prev_f != 0.0 && prev_f.signum() != f.signum() {
            let (mut lo, mut hi, mut flo) = (prev_x, x, prev_f);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = eval_real(&coeffs, mid);
                if fm == 0.0 || mid == lo || mid == hi {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = f;
    }
    assert_eq!(
        roots.len(),
        n,
        "bisection oracle bracketed {} of {n} roots",
        roots.len()
    );
    roots
}

/// All complex roots of the monic polynomial with coefficients c_0..c_n, by
/// Weierstrass (Durand-Kerner) iteration followed by Newton polishing.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius * 0.5).collect();
    for _ in 0..5_000 {
        let mut delta = 0.0_f64;
        for i in 0..n {
            let denom: Complex64 = (0..n).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            let step = eval_complex(&monic, z[i]) / denom;
            if step.is_finite() {
                z[i] -= step;
                delta = delta.max(step.norm());
            }
        }
        if delta < 1e-18 * radius {
            break;
        }
    }
    let derivative: Vec<Complex64> = (1..=n).map(|k| monic[k] * k as f64).collect();
    for root in z.iter_mut() {
        for _ in 0..4 {
            let d = eval_complex(&derivative, *root);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval_complex(&monic, *root) / d;
            if !step.is_finite() || step.norm() > 1e-6 * radius {
                break;
            }
            *root -= step;
        }
    }
    z
}

/// Inverse of a general complex matrix by Gauss-Jordan elimination with
/// partial pivoting. `None` if a pivot vanishes exactly.
fn inverse(m: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = m.dim();
    let mut a = m.clone();
    let mut inv = ComplexMatrix::identity(n);
    for k in 0..n {
        let pivot = (k..n).max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))?;
        if a[(pivot, k)].norm() == 0.0 {
            return None;
        }
        for c in 0..n {
            let (x, y) = (a[(k, c)], a[(pivot, c)]);
            a[(k, c)] = y;
            a[(pivot, c)] = x;
            let (x, y) = (inv[(k, c)], inv[(pivot, c)]);
            inv[(k, c)] = y;
            inv[(pivot, c)] = x;
        }
        let d = a[(k, k)];
        for c in 0..n {
            a[(k, c)] /= d;
            inv[(k, c)] /= d;
        }
        for r in 0..n {
            if r == k {
                continue;
            }
            let f = a[(r, k)];
            for c in 0..n {
                let (ak, ik) = (a[(k, c)], inv[(k, c)]);
                a[(r, c)] -= f * ak;
                inv[(r, c)] -= f * ik;
            }
        }
    }
    Some(inv)
}

/// Roots of det(lambda I - m), seeded from the polynomial coefficients and
/// then refined by Aberth steps on the determinant itself, whose logarithmic
/// derivative is tr((lambda I - m)^-1). Working on the matrix avoids the
/// coefficient roundoff that limits small roots.
pub fn characteristic_roots(m: &ComplexMatrix) -> Vec<Complex64> {
    let n = m.dim();
    let mut z = polynomial_roots(&characteristic_polynomial(m));
    let identity = ComplexMatrix::identity(n);
    for _ in 0..50 {
        let mut moved = 0.0_f64;
        for i in 0..n {
            let shifted = &identity.scale(z[i]) - m;
            let Some(resolvent) = inverse(&shifted) else {
                continue;
            };
            let log_derivative = resolvent.trace();
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = Complex64::new(1.0, 0.0) / (log_derivative - repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm());
            }
        }
        if moved == 0.0 {
            break;
        }
    }
    z
}

/// Eigenvalues of the explicit product a*b from its characteristic
/// polynomial, as real parts sorted descending.
pub fn product_eigenvalues_by_charpoly(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<f64> {
    let product = a * b;
    let mut values: Vec<f64> = characteristic_roots(&product)
        .into_iter()
        .map(|z| z.re)
        .collect();
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

/// exp(m) by scaling the argument below norm 1/2, summing 30 Taylor terms and
/// squaring back up.
pub fn exp_taylor_squaring(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.dim();
    let norm = m.frobenius_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = m.scale_real(0.5_f64.powi(squarings));
    let mut term = ComplexMatrix::identity(n);
    let mut sum = ComplexMatrix::identity(n);
    for k in 1..=30 {
        term = (&term * &scaled).scale_real(1.0 / k as f64);
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Ordinary least-squares line y = slope*x + intercept from the raw
/// normal-equation sums.
pub fn least_squares_line(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let det = n * sxx - sx * sx;
    if det == 0.0 {
        return (0.0, sy / n);
    }
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sxx * sy - sx * sxy) / det;
    (slope, intercept)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_diagonal() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, 2.0, 3.0]);
        let c: Vec<f64> = characteristic_polynomial(&m).iter().map(|z| z.re).collect();
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(c, vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(hermitian_eigenvalues_by_bisection(&m).len(), 3);
    }

    #[test]
    fn roots_of_known_polynomial() {
        // (x - 0.25)(x - 0.5)(x + 1)(x - 2)
        let r = [0.25, 0.5, -1.0, 2.0];
        let m = ComplexMatrix::from_real_diagonal(&r);
        let mut found: Vec<f64> = polynomial_roots(&characteristic_polynomial(&m))
            .iter()
            .map(|z| z.re)
            .collect();
        found.sort_by(f64::total_cmp);
        for (a, b) in found.iter().zip([-1.0, 0.25, 0.5, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn taylor_exponential_of_diagonal() {
        let e = exp_taylor_squaring(&ComplexMatrix::from_real_diagonal(&[3.0, -2.0]));
        assert!((e[(0, 0)].re - 3.0_f64.exp()).abs() < 1e-12);
        assert!((e[(1, 1)].re - (-2.0_f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn exact_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys: Vec<f64> = xs.iter().map(|x| -0.5 * x + 0.25).collect();
        let (s, i) = least_squares_line(&xs, &ys);
        assert!((s + 0.5).abs() < 1e-15 && (i - 0.25).abs() < 1e-15);
    }
}

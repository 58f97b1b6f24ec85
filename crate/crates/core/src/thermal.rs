//! Thermal (Gibbs) states, Wootters concurrence and magnetization.
//!
//! The four levels of a spin 3/2 are read as two qubits in the order
//! |3/2>, |1/2>, |-1/2>, |-3/2>  <->  |00>, |01>, |10>, |11>.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, product_eigenvalues_psd, ComplexMatrix};
use crate::spin::SpinSystem;

/// Tolerance for the trace/Hermiticity/positivity checks on density matrices.
pub const DENSITY_TOL: f64 = 1e-12;
/// Absolute error assumed on each eigenvalue of rho * rho_tilde, as a multiple
/// of machine epsilon times the largest one.
pub const PRODUCT_EIGENVALUE_ROUNDOFF: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone)]
pub struct DensityMatrix {
    rho: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        let defect = rho.hermitian_defect();
        if defect > DENSITY_TOL {
            return Err(Error::NotHermitian {
                max_deviation: defect,
            });
        }
        let trace = rho.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > DENSITY_TOL {
            return Err(Error::OutOfRange {
                name: "trace",
                value: trace.re,
                range: "{1}",
            });
        }
        let min = eig_hermitian(&rho)?.values[0];
        if min < -DENSITY_TOL {
            return Err(Error::NotPsd { eigenvalue: min });
        }
        Ok(Self { rho })
    }

    /// |psi><psi| for a (not necessarily normalised) state vector.
    pub fn pure(state: &[Complex64]) -> Result<Self> {
        let norm: f64 = state.iter().map(|z| z.norm_sqr()).sum();
        if state.is_empty() || norm == 0.0 {
            return Err(Error::OutOfRange {
                name: "state norm",
                value: norm,
                range: "(0, inf)",
            });
        }
        let rho = ComplexMatrix::from_fn(state.len(), |r, c| state[r] * state[c].conj() / norm);
        Self::new(rho)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            rho: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }
}

/// Gibbs state of `h` together with the spectrum it was built from.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub density: DensityMatrix,
    /// Eigenvalues of `h`, ascending.
    pub energies: Vec<f64>,
    /// Boltzmann weights matching `energies`.
    pub populations: Vec<f64>,
}

/// exp(-h) / Tr exp(-h), with the spectrum shifted so the largest weight is 1
/// before exponentiating.
pub fn gibbs_state(h: &ComplexMatrix) -> Result<ThermalState> {
    let eig = eig_hermitian(h)?;
    let ground = eig.values[0];
    let weights: Vec<f64> = eig.values.iter().map(|&e| (ground - e).exp()).collect();
    let partition: f64 = weights.iter().sum();
    let populations: Vec<f64> = weights.iter().map(|w| w / partition).collect();
    let n = h.dim();
    let u = &eig.vectors;
    let rho = ComplexMatrix::from_fn(n, |r, c| {
        (0..n)
            .map(|k| u[(r, k)] * u[(c, k)].conj() * populations[k])
            .sum()
    })
    .hermitian_part();
    Ok(ThermalState {
        density: DensityMatrix { rho },
        energies: eig.values,
        populations,
    })
}

pub fn thermal_state(h: &ComplexMatrix) -> Result<DensityMatrix> {
    Ok(gibbs_state(h)?.density)
}

/// The spin-flip matrix G = antidiag(-1, 1, 1, -1).
pub fn spin_flip_matrix() -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(4);
    g[(0, 3)] = Complex64::new(-1.0, 0.0);
    g[(1, 2)] = Complex64::new(1.0, 0.0);
    g[(2, 1)] = Complex64::new(1.0, 0.0);
    g[(3, 0)] = Complex64::new(-1.0, 0.0);
    g
}

fn require_four(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionNotFour { found: rho.dim() });
    }
    Ok(())
}

/// G conj(rho) G
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_four(rho)?;
    let g = spin_flip_matrix();
    Ok(&(&g * &rho.rho.conj()) * &g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceResult {
    pub concurrence: f64,
    /// Square roots of the eigenvalues of rho * rho_tilde, descending.
    pub lambda: [f64; 4],
    pub entangled: bool,
}

pub fn concurrence(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    let flipped = spin_flip(rho)?;
    let values = product_eigenvalues_psd(&rho.rho, &flipped)?;
    let mut lambda = [0.0; 4];
    for (slot, v) in lambda.iter_mut().zip(&values) {
        *slot = v.sqrt();
    }
    let sum: f64 = lambda.iter().sum();
    let raw = 2.0 * lambda[0] - sum;
    let concurrence = if raw <= concurrence_noise_floor(&values) {
        0.0
    } else {
        raw.min(1.0)
    };
    Ok(ConcurrenceResult {
        concurrence,
        lambda,
        entangled: concurrence > 0.0,
    })
}

/// Worst-case change of 2 nu_1 - sum(nu) when every eigenvalue of
/// rho * rho_tilde moves by its roundoff. Square roots amplify the error on
/// near-zero eigenvalues, so the floor grows to O(sqrt(eps)) for nearly pure
/// states. Anything below it is indistinguishable from a separable state.
fn concurrence_noise_floor(values: &[f64]) -> f64 {
    let delta = PRODUCT_EIGENVALUE_ROUNDOFF * values[0].max(f64::MIN_POSITIVE);
    let spread = |l: f64| (l + delta).sqrt() - l.sqrt();
    2.0 * spread(values[0]) + values.iter().map(|&l| spread(l)).sum::<f64>()
}

/// Tr(rho Iz), in units of hbar.
pub fn magnetization(rho: &DensityMatrix, s: &SpinSystem) -> Result<f64> {
    if rho.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: rho.dim(),
        });
    }
    let m = (&rho.rho * &s.iz).trace();
    debug_assert!(m.im.abs() < DENSITY_TOL, "imaginary magnetization {}", m.im);
    Ok(m.re)
}

/// Tr(rho Iz) / I, the polarisation in [-1, 1].
pub fn reduced_magnetization(rho: &DensityMatrix, s: &SpinSystem) -> Result<f64> {
    Ok(magnetization(rho, s)? / s.spin.value())
}

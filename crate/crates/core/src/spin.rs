//! Angular-momentum operators and the rank-2 quadrupole tensor operators.
//!
//! Basis convention used throughout the crate: descending magnetic quantum
//! number, |I>, |I-1>, ..., |-I>. Operators are in units of hbar.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Spin quantum number, stored as 2I so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const THREE_HALVES: Spin = Spin { twice: 3 };

    pub fn new(value: f64) -> Result<Self> {
        let twice = 2.0 * value;
        if !twice.is_finite() || twice < 0.5 || (twice - twice.round()).abs() > 1e-12 {
            return Err(Error::InvalidSpin(value));
        }
        Ok(Self {
            twice: twice.round() as u32,
        })
    }

    pub fn from_twice(twice: u32) -> Result<Self> {
        if twice == 0 {
            return Err(Error::InvalidSpin(0.0));
        }
        Ok(Self { twice })
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    /// m value of basis index `k` (k = 0 is m = I).
    pub fn magnetic_number(self, k: usize) -> f64 {
        self.value() - k as f64
    }

    /// I(I+1)
    pub fn casimir(self) -> f64 {
        let i = self.value();
        i * (i + 1.0)
    }

    /// 4I(2I-1), the quadrupole energy denominator. Zero for I = 1/2.
    pub fn quadrupole_denominator(self) -> f64 {
        let i = self.value();
        4.0 * i * (2.0 * i - 1.0)
    }
}

#[derive(Debug, Clone)]
pub struct SpinSystem {
    pub spin: Spin,
    pub iz: ComplexMatrix,
    pub iplus: ComplexMatrix,
    pub iminus: ComplexMatrix,
}

impl SpinSystem {
    pub fn new(spin: Spin) -> Self {
        let n = spin.dim();
        let i = spin.value();
        let diag: Vec<f64> = (0..n).map(|k| spin.magnetic_number(k)).collect();
        let iz = ComplexMatrix::from_real_diagonal(&diag);
        // I+ |m> = sqrt(I(I+1) - m(m+1)) |m+1>; |m+1> sits one row above |m>.
        let mut iplus = ComplexMatrix::zeros(n);
        for k in 1..n {
            let m = spin.magnetic_number(k);
            iplus[(k - 1, k)] = Complex64::new((i * (i + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
        }
        let iminus = iplus.adjoint();
        Self {
            spin,
            iz,
            iplus,
            iminus,
        }
    }

    pub fn dim(&self) -> usize {
        self.spin.dim()
    }

    pub fn ix(&self) -> ComplexMatrix {
        (&self.iplus + &self.iminus).scale_real(0.5)
    }

    pub fn iy(&self) -> ComplexMatrix {
        (&self.iplus - &self.iminus).scale(Complex64::new(0.0, -0.5))
    }
}

pub fn build_spin_system(spin: f64) -> Result<SpinSystem> {
    Ok(SpinSystem::new(Spin::new(spin)?))
}

/// Rank-2 spherical tensor operators Q_m, m = -2..=2.
#[derive(Debug, Clone)]
pub struct QuadrupoleTensor {
    components: [ComplexMatrix; 5],
}

impl QuadrupoleTensor {
    pub fn new(s: &SpinSystem) -> Self {
        let iz = &s.iz;
        let ip = &s.iplus;
        let im = &s.iminus;
        let n = s.dim();
        let q0 = (&(iz * iz).scale_real(3.0)
            - &ComplexMatrix::identity(n).scale_real(s.spin.casimir()))
            .scale_real(0.5);
        let q_plus1 = (&(iz * ip) + &(ip * iz)).scale_real(0.5);
        let q_minus1 = (&(iz * im) + &(im * iz)).scale_real(-0.5);
        let q_plus2 = (ip * ip).scale_real(0.5);
        let q_minus2 = (im * im).scale_real(0.5);
        Self {
            components: [q_minus2, q_minus1, q0, q_plus1, q_plus2],
        }
    }

    /// Component Q_m. Panics unless -2 <= m <= 2.
    pub fn get(&self, m: i32) -> &ComplexMatrix {
        assert!(
            (-2..=2).contains(&m),
            "quadrupole component m = {m} outside -2..=2"
        );
        &self.components[(m + 2) as usize]
    }
}

pub fn build_quadrupole_tensor(s: &SpinSystem) -> QuadrupoleTensor {
    QuadrupoleTensor::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPINS: [f64; 5] = [0.5, 1.0, 1.5, 2.0, 2.5];

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn spin_half_is_pauli_over_two() {
        let s = build_spin_system(0.5).unwrap();
        assert_eq!(s.iz, ComplexMatrix::from_real_diagonal(&[0.5, -0.5]));
        let expected = ComplexMatrix::from_rows(&[vec![c(0.), c(1.)], vec![c(0.), c(0.)]]).unwrap();
        assert!(s.iplus.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn spin_three_halves_ladder() {
        let s = build_spin_system(1.5).unwrap();
        assert_eq!(
            s.iz,
            ComplexMatrix::from_real_diagonal(&[1.5, 0.5, -0.5, -1.5])
        );
        let band = [3.0_f64.sqrt(), 2.0, 3.0_f64.sqrt()];
        for (r, &b) in band.iter().enumerate() {
            assert!((s.iplus[(r, r + 1)] - c(b)).norm() < 1e-15);
        }
        for r in 0..4 {
            for col in (0..4).filter(|&col| col != r + 1) {
                assert_eq!(s.iplus[(r, col)], c(0.0));
            }
        }
    }

    #[test]
    fn invalid_spins() {
        for bad in [0.0, -0.5, 0.3, 1.25, f64::NAN] {
            assert!(
                matches!(build_spin_system(bad), Err(Error::InvalidSpin(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn operator_algebra_holds() {
        for spin in SPINS {
            let s = build_spin_system(spin).unwrap();
            let n = s.dim();
            assert_eq!(n, (2.0 * spin) as usize + 1);
            assert!(s.iz.commutator(&s.iplus).max_abs_diff(&s.iplus) < 1e-12);
            assert_eq!(s.iplus.adjoint(), s.iminus);
            let casimir = &(&s.iz * &s.iz)
                + &(&(&s.iplus * &s.iminus) + &(&s.iminus * &s.iplus)).scale_real(0.5);
            let target = ComplexMatrix::identity(n).scale_real(spin * (spin + 1.0));
            assert!(casimir.max_abs_diff(&target) < 1e-12, "I = {spin}");
            // [Ix, Iy] = i Iz
            let comm = s.ix().commutator(&s.iy());
            assert!(comm.max_abs_diff(&s.iz.scale(Complex64::new(0.0, 1.0))) < 1e-12);
        }
    }

    #[test]
    fn spin_five_halves_casimir() {
        let s = build_spin_system(2.5).unwrap();
        assert_eq!(s.spin.casimir(), 35.0 / 4.0);
    }

    #[test]
    fn q0_for_three_halves() {
        let s = build_spin_system(1.5).unwrap();
        let q = build_quadrupole_tensor(&s);
        assert!(
            q.get(0)
                .max_abs_diff(&ComplexMatrix::from_real_diagonal(&[1.5, -1.5, -1.5, 1.5]))
                < 1e-15
        );
    }

    #[test]
    fn q2_for_three_halves() {
        let s = build_spin_system(1.5).unwrap();
        let q = build_quadrupole_tensor(&s);
        let q2 = q.get(2);
        let root3 = 3.0_f64.sqrt();
        for r in 0..4 {
            for col in 0..4 {
                let expected = if (r, col) == (0, 2) || (r, col) == (1, 3) {
                    root3
                } else {
                    0.0
                };
                assert!((q2[(r, col)] - c(expected)).norm() < 1e-14, "({r},{col})");
            }
        }
    }

    #[test]
    fn quadrupole_vanishes_for_spin_half() {
        let q = build_quadrupole_tensor(&build_spin_system(0.5).unwrap());
        for m in -2..=2 {
            assert!(q.get(m).max_abs() < 1e-15, "m = {m}");
        }
    }

    #[test]
    fn tensor_conjugation_and_trace() {
        for spin in SPINS {
            let q = build_quadrupole_tensor(&build_spin_system(spin).unwrap());
            for m in -2..=2_i32 {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let lhs = q.get(m).adjoint();
                let rhs = q.get(-m).scale_real(sign);
                assert!(lhs.max_abs_diff(&rhs) < 1e-12, "I = {spin}, m = {m}");
            }
            assert!(q.get(0).is_hermitian(1e-12));
            assert!(q.get(0).trace().norm() < 1e-12);
        }
    }

    #[test]
    fn pure_quadrupole_levels_for_three_halves() {
        // Q0 has two doubly degenerate levels, +-3/2: a single NQR line.
        let q = build_quadrupole_tensor(&build_spin_system(1.5).unwrap());
        let eig = crate::linalg::eig_hermitian(q.get(0)).unwrap();
        for (v, e) in eig.values.iter().zip([-1.5, -1.5, 1.5, 1.5]) {
            assert!((v - e).abs() < 1e-14);
        }
    }
}

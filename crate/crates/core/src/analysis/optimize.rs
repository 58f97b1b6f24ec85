use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::concurrence_at;
use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianParams, QuadrupoleModel};
use crate::spin::Spin;

/// Points per angle on the coarse grid.
pub const GRID_SIZE: usize = 181;
/// Bracket width at which golden-section refinement stops, radians.
pub const ANGLE_TOL: f64 = 1e-4;
/// Gain a candidate must beat to displace the incumbent maximum. At low
/// temperature the concurrence itself is only resolved to about 1e-9.
const IMPROVEMENT: f64 = 1e-8;
const MAX_REFINE_CYCLES: usize = 50;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximum of a unimodal `f` on `[lo, hi]`, located to a bracket narrower
/// than `tol`. Returns the best abscissa sampled and its value.
pub fn golden_section_max<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 >= f2 { (x1, f1) } else { (x2, f2) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleMaximum {
    pub theta: f64,
    pub phi: f64,
    pub concurrence: f64,
}

fn wrap_phi(phi: f64) -> f64 {
    let w = phi.rem_euclid(2.0 * PI);
    if w >= 2.0 * PI {
        0.0
    } else {
        w
    }
}

/// Largest concurrence over all field orientations at fixed alpha, beta, eta.
///
/// A 181 x 181 grid (theta = k pi / 180, phi = 2 pi k / 181) is scanned first;
/// among grid values equal to within 1e-8 the smallest theta, then the
/// smallest phi, wins. The winner is then refined one coordinate at a time by
/// golden-section search within one grid step, keeping only moves that
/// improve the value, until a full cycle moves less than 1e-4 rad.
pub fn maximize_concurrence_over_angles(alpha: f64, beta: f64, eta: f64) -> Result<AngleMaximum> {
    maximize_concurrence_in_theta_range(alpha, beta, eta, 0.0, PI)
}

/// As [`maximize_concurrence_over_angles`], restricted to grid rows with
/// theta in `[theta_lo, theta_hi]`; refinement stays inside the window too.
pub fn maximize_concurrence_in_theta_range(
    alpha: f64,
    beta: f64,
    eta: f64,
    theta_lo: f64,
    theta_hi: f64,
) -> Result<AngleMaximum> {
    HamiltonianParams::from_values(alpha, beta, eta, 0.0, 0.0)?;
    if !(0.0 <= theta_lo && theta_lo <= theta_hi && theta_hi <= PI) {
        return Err(Error::OutOfRange {
            name: "theta window",
            value: theta_lo,
            range: "0 <= lo <= hi <= pi",
        });
    }
    let model = QuadrupoleModel::new(Spin::THREE_HALVES);
    let c = |theta: f64, phi: f64| -> Result<f64> {
        concurrence_at(
            &model,
            &HamiltonianParams::from_values(alpha, beta, eta, theta, wrap_phi(phi))?,
        )
    };

    let theta_step = PI / (GRID_SIZE - 1) as f64;
    let phi_step = 2.0 * PI / GRID_SIZE as f64;
    let thetas: Vec<f64> = (0..GRID_SIZE)
        .map(|i| {
            if i == GRID_SIZE - 1 {
                PI
            } else {
                theta_step * i as f64
            }
        })
        .filter(|t| (theta_lo..=theta_hi).contains(t))
        .collect();
    if thetas.is_empty() {
        return Err(Error::OutOfRange {
            name: "theta window",
            value: theta_lo,
            range: "must contain a grid row",
        });
    }
    let rows = thetas
        .par_iter()
        .map(|&t| {
            (0..GRID_SIZE)
                .map(|k| c(t, phi_step * k as f64))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best = AngleMaximum {
        theta: thetas[0],
        phi: 0.0,
        concurrence: rows[0][0],
    };
    for (&t, row) in thetas.iter().zip(&rows) {
        for (k, &v) in row.iter().enumerate() {
            if v > best.concurrence + IMPROVEMENT {
                best = AngleMaximum {
                    theta: t,
                    phi: phi_step * k as f64,
                    concurrence: v,
                };
            }
        }
    }

    for _ in 0..MAX_REFINE_CYCLES {
        let start = best;
        let lo = (best.theta - theta_step).max(theta_lo);
        let hi = (best.theta + theta_step).min(theta_hi);
        if hi > lo {
            let (t, v) = golden_section_max(|t| c(t, best.phi), lo, hi, ANGLE_TOL)?;
            if v > best.concurrence + IMPROVEMENT {
                best.theta = t;
                best.concurrence = v;
            }
        }
        let (p, v) = golden_section_max(
            |p| c(best.theta, p),
            best.phi - phi_step,
            best.phi + phi_step,
            ANGLE_TOL,
        )?;
        if v > best.concurrence + IMPROVEMENT {
            best.phi = wrap_phi(p);
            best.concurrence = v;
        }
        let moved = (best.theta - start.theta).abs() + angular_distance(best.phi, start.phi);
        if moved < ANGLE_TOL {
            break;
        }
    }
    Ok(best)
}

fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_on_parabola() {
        let (x, fx) =
            golden_section_max(|x| Ok(-(x - 0.3) * (x - 0.3) + 2.0), -1.0, 2.0, 1e-8).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-12);
        let (x, _) = golden_section_max(Ok, 0.0, 1.0, 1e-6).unwrap();
        assert!(x > 1.0 - 1e-6);
    }

    #[test]
    fn golden_section_propagates_errors() {
        let r = golden_section_max(|_| Err(Error::InvalidSpin(0.0)), 0.0, 1.0, 1e-3);
        assert_eq!(r, Err(Error::InvalidSpin(0.0)));
    }

    #[test]
    fn phi_wrapping() {
        assert_eq!(wrap_phi(-0.5), 2.0 * PI - 0.5);
        assert_eq!(wrap_phi(2.0 * PI), 0.0);
        assert!((angular_distance(0.1, 2.0 * PI - 0.1) - 0.2).abs() < 1e-12);
    }

    fn assert_close(m: &AngleMaximum, theta: f64, phi: f64, c: f64) {
        assert!((m.concurrence - c).abs() < 0.01, "{m:?}");
        assert!((m.theta - theta).abs() < 0.02, "{m:?}");
        assert!(angular_distance(m.phi, phi) < 0.05, "{m:?}");
    }

    #[test]
    fn orthorhombic_maximum() {
        let m = maximize_concurrence_over_angles(5.0, 5.0, 0.92).unwrap();
        assert_close(&m, 0.40, 0.0, 0.35);
    }

    #[test]
    fn weakly_asymmetric_maximum() {
        let m = maximize_concurrence_over_angles(5.0, 5.0, 0.14).unwrap();
        assert!((m.concurrence - 0.23).abs() < 0.01, "{m:?}");
    }

    #[test]
    fn axial_maxima_are_mirror_pairs_and_phi_free() {
        let m = maximize_concurrence_over_angles(5.0, 5.0, 0.0).unwrap();
        assert_eq!(m.phi, 0.0);
        let mirror = maximize_concurrence_in_theta_range(5.0, 5.0, 0.0, PI / 2.0, PI).unwrap();
        assert!((mirror.concurrence - m.concurrence).abs() < 1e-6);
        assert!(
            (mirror.theta - (PI - m.theta)).abs() < 1e-3,
            "{m:?} {mirror:?}"
        );
        let model = QuadrupoleModel::new(Spin::THREE_HALVES);
        let at = |t: f64| {
            concurrence_at(
                &model,
                &HamiltonianParams::from_values(5.0, 5.0, 0.0, t, 0.0).unwrap(),
            )
            .unwrap()
        };
        assert!((at(m.theta) - at(PI - m.theta)).abs() < 1e-6);
    }

    #[test]
    fn fully_asymmetric_maximum() {
        let m = maximize_concurrence_over_angles(5.0, 5.0, 1.0).unwrap();
        assert!((m.concurrence - 0.36).abs() < 0.01, "{m:?}");
    }

    #[test]
    fn window_validation() {
        assert!(maximize_concurrence_in_theta_range(5.0, 5.0, 0.0, 2.0, 1.0).is_err());
        assert!(maximize_concurrence_in_theta_range(5.0, 5.0, 0.0, 0.001, 0.002).is_err());
        assert!(maximize_concurrence_over_angles(-1.0, 5.0, 0.0).is_err());
    }
}

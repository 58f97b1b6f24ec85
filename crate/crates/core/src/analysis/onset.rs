use super::concurrence_at;
use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianParams, QuadrupoleModel};
use crate::spin::Spin;

/// Concurrence above which a state counts as entangled.
pub const DEFAULT_ONSET_THRESHOLD: f64 = 1e-6;
/// Search interval for beta.
pub const BETA_BRACKET: (f64, f64) = (1e-3, 1e3);
/// Bisection stops once hi / lo - 1 drops below this.
const RELATIVE_WIDTH: f64 = 1e-4;

/// Smallest beta at which the concurrence with alpha = ratio * beta exceeds
/// `threshold`, by bisection on log(beta) over [`BETA_BRACKET`].
///
/// The search assumes a single crossing. If the state is already entangled
/// at the lower end of the bracket, that end is returned.
pub fn critical_beta(ratio: f64, eta: f64, theta: f64, phi: f64, threshold: f64) -> Result<f64> {
    if !(ratio > 0.0 && ratio.is_finite()) {
        return Err(Error::OutOfRange {
            name: "ratio",
            value: ratio,
            range: "(0, inf)",
        });
    }
    if !(threshold >= 0.0 && threshold.is_finite()) {
        return Err(Error::OutOfRange {
            name: "threshold",
            value: threshold,
            range: "[0, inf)",
        });
    }
    let model = QuadrupoleModel::new(Spin::THREE_HALVES);
    let entangled = |beta: f64| -> Result<bool> {
        let p = HamiltonianParams::from_values(ratio * beta, beta, eta, theta, phi)?;
        Ok(concurrence_at(&model, &p)? > threshold)
    };
    let (mut lo, mut hi) = BETA_BRACKET;
    if !entangled(hi)? {
        return Err(Error::NoOnsetFound { threshold, lo, hi });
    }
    if entangled(lo)? {
        return Ok(lo);
    }
    while hi / lo - 1.0 > RELATIVE_WIDTH {
        let mid = (lo * hi).sqrt();
        if entangled(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

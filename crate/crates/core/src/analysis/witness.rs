use std::collections::BTreeMap;

use serde::Serialize;

use super::sweep::{Axis, Parameter, SweepGrid, SweepRecord, SweepResult};
use crate::error::{Error, Result};

/// Fewest qualifying records a witness fit accepts.
pub const MIN_WITNESS_POINTS: usize = 10;

/// Least-squares line C = slope * m + intercept, where m = Tr(rho Iz) / I is
/// the magnetization in units of its saturation value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_abs_residual: f64,
    /// Smallest and largest alpha among the records used.
    pub valid_range: (f64, f64),
    pub points: usize,
    /// Divisor applied to Tr(rho Iz) before fitting.
    pub magnetization_scale: f64,
}

impl WitnessFit {
    /// 1 / |slope|, the constant c in C ~ -m / c.
    pub fn witness_constant(&self) -> f64 {
        1.0 / self.slope.abs()
    }

    pub fn predict(&self, reduced_magnetization: f64) -> f64 {
        self.slope * reduced_magnetization + self.intercept
    }
}

/// Alpha sweep alpha_k = alpha_max * k / points, k = 1..=points, at fixed
/// beta and orientation.
pub fn witness_grid(
    beta: f64,
    eta: f64,
    theta: f64,
    phi: f64,
    alpha_max: f64,
    points: usize,
) -> Result<SweepGrid> {
    if !(alpha_max > 0.0 && alpha_max.is_finite()) {
        return Err(Error::OutOfRange {
            name: "alpha_max",
            value: alpha_max,
            range: "(0, inf)",
        });
    }
    if points == 0 {
        return Err(Error::InsufficientPoints {
            required: MIN_WITNESS_POINTS,
            found: 0,
        });
    }
    let axis = Axis::new(
        Parameter::Alpha,
        alpha_max / points as f64,
        alpha_max,
        points,
    )?;
    let fixed = BTreeMap::from([
        (Parameter::Beta, beta),
        (Parameter::Eta, eta),
        (Parameter::Theta, theta),
        (Parameter::Phi, phi),
    ]);
    SweepGrid::new(vec![axis], fixed, None)
}

/// Fits concurrence against reduced magnetization over the records with
/// 0 < alpha <= alpha_max. The sweep must vary alpha only.
pub fn fit_witness(sweep: &SweepResult, alpha_max: f64) -> Result<WitnessFit> {
    let used: Vec<&SweepRecord> = sweep
        .records
        .iter()
        .filter(|r| r.alpha > 0.0 && r.alpha <= alpha_max)
        .collect();
    if used.len() < MIN_WITNESS_POINTS {
        return Err(Error::InsufficientPoints {
            required: MIN_WITNESS_POINTS,
            found: used.len(),
        });
    }
    let first = used[0];
    if used.iter().any(|r| {
        r.beta != first.beta || r.eta != first.eta || r.theta != first.theta || r.phi != first.phi
    }) {
        return Err(Error::InvalidGrid(
            "witness fit needs a sweep over alpha with beta, eta, theta and phi fixed".into(),
        ));
    }
    let scale = sweep.metadata.spin;
    let xs: Vec<f64> = used.iter().map(|r| r.magnetization / scale).collect();
    let ys: Vec<f64> = used.iter().map(|r| r.concurrence).collect();
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = mean_y - slope * mean_x;
    let max_abs_residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - intercept).abs())
        .fold(0.0, f64::max);
    let alphas = used.iter().map(|r| r.alpha);
    let valid_range = (
        alphas.clone().fold(f64::INFINITY, f64::min),
        alphas.fold(f64::NEG_INFINITY, f64::max),
    );
    Ok(WitnessFit {
        slope,
        intercept,
        max_abs_residual,
        valid_range,
        points: used.len(),
        magnetization_scale: scale,
    })
}

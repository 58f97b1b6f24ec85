use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::evaluate_point;
use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianParams, QuadrupoleModel, TemperatureConvention};
use crate::spin::Spin;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Alpha,
    Beta,
    Eta,
    Theta,
    Phi,
}

impl Parameter {
    pub const ALL: [Parameter; 5] = [Self::Alpha, Self::Beta, Self::Eta, Self::Theta, Self::Phi];

    pub fn name(self) -> &'static str {
        match self {
            Self::Alpha => "alpha",
            Self::Beta => "beta",
            Self::Eta => "eta",
            Self::Theta => "theta",
            Self::Phi => "phi",
        }
    }

    pub fn range_description(self) -> &'static str {
        match self {
            Self::Alpha | Self::Beta => "[0, inf)",
            Self::Eta => "[0, 1]",
            Self::Theta => "[0, pi]",
            Self::Phi => "[0, 2 pi)",
        }
    }

    pub fn check(self, value: f64) -> Result<()> {
        let ok = match self {
            Self::Alpha | Self::Beta => value >= 0.0 && value.is_finite(),
            Self::Eta => (0.0..=1.0).contains(&value),
            Self::Theta => (0.0..=PI).contains(&value),
            Self::Phi => (0.0..2.0 * PI).contains(&value),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                name: self.name(),
                value,
                range: self.range_description(),
            })
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidGrid(format!("unknown parameter `{s}`")))
    }
}

/// `count` evenly spaced values from `start` to `stop`, both included.
/// A single-point axis is just `start`.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (count - 1) as f64;
            (0..count)
                .map(|i| {
                    if i == count - 1 {
                        stop
                    } else {
                        start + step * i as f64
                    }
                })
                .collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Axis {
    pub parameter: Parameter,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(parameter: Parameter, start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidGrid(format!(
                "axis {parameter} has zero points"
            )));
        }
        parameter.check(start)?;
        parameter.check(stop)?;
        Ok(Self {
            parameter,
            start,
            stop,
            count,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.count)
    }
}

/// A rectangular grid over some parameters with the rest held fixed.
///
/// With `alpha_beta_ratio` set, alpha is not a coordinate of its own but
/// follows `ratio * beta` at every point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    axes: Vec<Axis>,
    fixed: BTreeMap<Parameter, f64>,
    alpha_beta_ratio: Option<f64>,
    convention: TemperatureConvention,
}

impl SweepGrid {
    pub fn new(
        axes: Vec<Axis>,
        fixed: BTreeMap<Parameter, f64>,
        alpha_beta_ratio: Option<f64>,
    ) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for axis in &axes {
            if seen.insert(axis.parameter, ()).is_some() {
                return Err(Error::InvalidGrid(format!(
                    "parameter {} appears on two axes",
                    axis.parameter
                )));
            }
        }
        for (&p, &v) in &fixed {
            if seen.contains_key(&p) {
                return Err(Error::InvalidGrid(format!(
                    "parameter {p} is both swept and fixed"
                )));
            }
            p.check(v)?;
        }
        if let Some(ratio) = alpha_beta_ratio {
            if !(ratio >= 0.0 && ratio.is_finite()) {
                return Err(Error::OutOfRange {
                    name: "ratio",
                    value: ratio,
                    range: "[0, inf)",
                });
            }
            if seen.contains_key(&Parameter::Alpha) || fixed.contains_key(&Parameter::Alpha) {
                return Err(Error::InvalidGrid(
                    "alpha cannot be set when it is tied to beta by a ratio".into(),
                ));
            }
        }
        for p in Parameter::ALL {
            let tied = p == Parameter::Alpha && alpha_beta_ratio.is_some();
            if !tied && !seen.contains_key(&p) && !fixed.contains_key(&p) {
                return Err(Error::InvalidGrid(format!(
                    "parameter {p} is neither swept nor fixed"
                )));
            }
        }
        Ok(Self {
            axes,
            fixed,
            alpha_beta_ratio,
            convention: TemperatureConvention::Eq7,
        })
    }

    /// Records which beta convention the grid was written in. It does not
    /// change any computed value.
    pub fn with_convention(mut self, convention: TemperatureConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn fixed(&self) -> &BTreeMap<Parameter, f64> {
        &self.fixed
    }

    pub fn alpha_beta_ratio(&self) -> Option<f64> {
        self.alpha_beta_ratio
    }

    pub fn convention(&self) -> TemperatureConvention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parameter values of every point, first axis slowest.
    pub fn points(&self) -> Vec<[f64; 5]> {
        let values: Vec<Vec<f64>> = self.axes.iter().map(Axis::values).collect();
        let mut base = [0.0; 5];
        for (&p, &v) in &self.fixed {
            base[p as usize] = v;
        }
        let total = self.len();
        let mut out = Vec::with_capacity(total);
        let mut index = vec![0usize; self.axes.len()];
        for _ in 0..total {
            let mut point = base;
            for (k, axis) in self.axes.iter().enumerate() {
                point[axis.parameter as usize] = values[k][index[k]];
            }
            if let Some(ratio) = self.alpha_beta_ratio {
                point[Parameter::Alpha as usize] = ratio * point[Parameter::Beta as usize];
            }
            out.push(point);
            for k in (0..index.len()).rev() {
                index[k] += 1;
                if index[k] < self.axes[k].count {
                    break;
                }
                index[k] = 0;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
    pub theta: f64,
    pub phi: f64,
    pub concurrence: f64,
    /// Tr(rho Iz)
    pub magnetization: f64,
    /// Eigenvalues of h, ascending.
    pub energies: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepMetadata {
    pub axes: Vec<Axis>,
    pub fixed: BTreeMap<Parameter, f64>,
    pub alpha_beta_ratio: Option<f64>,
    pub convention: TemperatureConvention,
    pub spin: f64,
    pub library_version: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub metadata: SweepMetadata,
    pub records: Vec<SweepRecord>,
}

fn describe(point: &[f64; 5]) -> String {
    Parameter::ALL
        .iter()
        .map(|p| format!("{}={}", p.name(), point[*p as usize]))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Evaluates every grid point, in parallel, keeping grid order. The first
/// failing point in that order aborts the sweep.
pub fn run_sweep(grid: &SweepGrid, spin: Spin) -> Result<SweepResult> {
    let model = QuadrupoleModel::new(spin);
    let records = grid
        .points()
        .par_iter()
        .map(|point| {
            let [alpha, beta, eta, theta, phi] = *point;
            HamiltonianParams::from_values(alpha, beta, eta, theta, phi)
                .and_then(|p| evaluate_point(&model, &p))
                .map(|e| SweepRecord {
                    alpha,
                    beta,
                    eta,
                    theta,
                    phi,
                    concurrence: e.concurrence.concurrence,
                    magnetization: e.magnetization,
                    energies: e.energies,
                })
                .map_err(|source| Error::PointFailed {
                    point: describe(point),
                    source: Box::new(source),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        metadata: SweepMetadata {
            axes: grid.axes.clone(),
            fixed: grid.fixed.clone(),
            alpha_beta_ratio: grid.alpha_beta_ratio,
            convention: grid.convention,
            spin: spin.value(),
            library_version: crate::VERSION,
        },
        records,
    })
}

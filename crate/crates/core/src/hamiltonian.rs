//! Dimensionless Zeeman + quadrupole Hamiltonian in the laboratory frame.
//!
//! The matrix returned by [`build_hamiltonian`] is `h` with `rho ∝ exp(-h)`:
//!
//! ```text
//! h = alpha * Iz + beta * sum_{m=-2..2} (-1)^m V_{-m} Q_m
//! ```
//!
//! where `alpha = gamma H0 / kT` and `beta = eQq_zz / (4I(2I-1) kT)`. Physical
//! units only enter through [`params_from_physical`] and
//! [`temperature_for_beta`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::spin::{QuadrupoleTensor, Spin, SpinSystem};

/// Planck constant, J s (exact SI).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Boltzmann constant, J/K (exact SI).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Direction of the laboratory z axis (the field) in the EFG principal axes
/// frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Orientation {
    theta: f64,
    phi: f64,
}

impl Orientation {
    /// `theta` in [0, pi], `phi` in [0, 2 pi). Out-of-range values are
    /// rejected, never wrapped.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
                range: "[0, pi]",
            });
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::OutOfRange {
                name: "phi",
                value: phi,
                range: "[0, 2 pi)",
            });
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

pub(crate) fn check_eta(eta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::OutOfRange {
            name: "eta",
            value: eta,
            range: "[0, 1]",
        });
    }
    Ok(())
}

fn check_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !(value >= 0.0 && value.is_finite()) {
        return Err(Error::OutOfRange {
            name,
            value,
            range: "[0, inf)",
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HamiltonianParams {
    alpha: f64,
    beta: f64,
    eta: f64,
    orientation: Orientation,
}

impl HamiltonianParams {
    pub fn new(alpha: f64, beta: f64, eta: f64, orientation: Orientation) -> Result<Self> {
        check_non_negative("alpha", alpha)?;
        check_non_negative("beta", beta)?;
        check_eta(eta)?;
        Ok(Self {
            alpha,
            beta,
            eta,
            orientation,
        })
    }

    /// Shorthand validating all five scalars at once.
    pub fn from_values(alpha: f64, beta: f64, eta: f64, theta: f64, phi: f64) -> Result<Self> {
        Self::new(alpha, beta, eta, Orientation::new(theta, phi)?)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }
}

/// Angular factors V_m, m = -2..=2, of the EFG tensor seen from the lab frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularFactors {
    v: [Complex64; 5],
}

impl AngularFactors {
    pub fn get(&self, m: i32) -> Complex64 {
        assert!(
            (-2..=2).contains(&m),
            "angular factor m = {m} outside -2..=2"
        );
        self.v[(m + 2) as usize]
    }
}

pub fn angular_factors(o: Orientation, eta: f64) -> Result<AngularFactors> {
    check_eta(eta)?;
    let (sin_t, cos_t) = o.theta.sin_cos();
    let (sin_2p, cos_2p) = (2.0 * o.phi).sin_cos();
    let sin_2t = (2.0 * o.theta).sin();
    let i = Complex64::new(0.0, 1.0);

    let v0 = Complex64::new(
        (3.0 * cos_t * cos_t - 1.0) + eta * cos_2p * sin_t * sin_t,
        0.0,
    );
    let v1 = |sign: f64| -> Complex64 {
        sign * (eta * sin_t * (cos_t * cos_2p + sign * i * sin_2p) + 1.5 * sin_2t)
    };
    let v2 = |sign: f64| -> Complex64 {
        1.5 * sin_t * sin_t + eta * cos_2p * (1.0 + cos_t * cos_t)
            - sign * 0.5 * i * eta * sin_2p * cos_t
    };
    Ok(AngularFactors {
        v: [v2(-1.0), v1(-1.0), v0, v1(1.0), v2(1.0)],
    })
}

/// Negated exponent `h` of the thermal state for the given parameters.
pub fn build_hamiltonian(
    p: &HamiltonianParams,
    s: &SpinSystem,
    qt: &QuadrupoleTensor,
) -> Result<ComplexMatrix> {
    if qt.get(0).dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: qt.get(0).dim(),
        });
    }
    let v = angular_factors(p.orientation, p.eta)?;
    let mut h = s.iz.scale_real(p.alpha);
    for m in -2..=2_i32 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = v.get(-m) * (sign * p.beta);
        h = &h + &qt.get(m).scale(coeff);
    }
    Ok(h)
}

/// A spin with its operators prebuilt, for repeated Hamiltonian assembly.
#[derive(Debug, Clone)]
pub struct QuadrupoleModel {
    pub spin_system: SpinSystem,
    pub tensor: QuadrupoleTensor,
}

impl QuadrupoleModel {
    pub fn new(spin: Spin) -> Self {
        let spin_system = SpinSystem::new(spin);
        let tensor = QuadrupoleTensor::new(&spin_system);
        Self {
            spin_system,
            tensor,
        }
    }

    pub fn spin(&self) -> Spin {
        self.spin_system.spin
    }

    pub fn hamiltonian(&self, p: &HamiltonianParams) -> Result<ComplexMatrix> {
        build_hamiltonian(p, &self.spin_system, &self.tensor)
    }
}

/// How the quadrupole coupling is turned into the dimensionless `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TemperatureConvention {
    /// beta = eQq / (4I(2I-1) kT), the definition used by the Hamiltonian.
    Eq7,
    /// beta = eQq / kT, which is what the quoted millikelvin estimate uses.
    PaperMk,
}

impl TemperatureConvention {
    pub const ALL: [TemperatureConvention; 2] = [Self::Eq7, Self::PaperMk];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Eq7 => "eq7",
            Self::PaperMk => "paper-mk",
        }
    }

    /// Energy denominator applied to eQq_zz before dividing by kT.
    pub fn denominator(self, spin: Spin) -> f64 {
        match self {
            Self::Eq7 => spin.quadrupole_denominator(),
            Self::PaperMk => 1.0,
        }
    }
}

impl fmt::Display for TemperatureConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TemperatureConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "eq7" => Ok(Self::Eq7),
            "paper-mk" => Ok(Self::PaperMk),
            other => Err(format!(
                "unknown temperature convention `{other}` (expected eq7 or paper-mk)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaterialPreset {
    pub name: String,
    /// eQq_zz / h, MHz
    pub quadrupole_coupling_mhz: f64,
    pub eta: f64,
    /// gamma / 2 pi, MHz/T
    pub gyromagnetic_ratio_mhz_per_t: f64,
    /// cm^2; informational only
    pub quadrupole_moment_cm2: f64,
}

impl MaterialPreset {
    pub fn new(
        name: impl Into<String>,
        quadrupole_coupling_mhz: f64,
        eta: f64,
        gyromagnetic_ratio_mhz_per_t: f64,
        quadrupole_moment_cm2: f64,
    ) -> Result<Self> {
        if !(quadrupole_coupling_mhz > 0.0 && quadrupole_coupling_mhz.is_finite()) {
            return Err(Error::OutOfRange {
                name: "quadrupole_coupling",
                value: quadrupole_coupling_mhz,
                range: "(0, inf)",
            });
        }
        check_eta(eta)?;
        Ok(Self {
            name: name.into(),
            quadrupole_coupling_mhz,
            eta,
            gyromagnetic_ratio_mhz_per_t,
            quadrupole_moment_cm2,
        })
    }
}

/// 63Cu gamma / 2 pi, MHz/T.
const CU63_GAMMA_MHZ_PER_T: f64 = 11.3188;

/// 63Cu sites of YBa2Cu3O7-d: planar four-coordinated and apical
/// five-coordinated.
pub fn builtin_presets() -> Vec<MaterialPreset> {
    vec![
        MaterialPreset {
            name: "cu63-4coord".into(),
            quadrupole_coupling_mhz: 38.2,
            eta: 0.92,
            gyromagnetic_ratio_mhz_per_t: CU63_GAMMA_MHZ_PER_T,
            quadrupole_moment_cm2: -0.211e-24,
        },
        MaterialPreset {
            name: "cu63-5coord".into(),
            quadrupole_coupling_mhz: 62.8,
            eta: 0.14,
            gyromagnetic_ratio_mhz_per_t: CU63_GAMMA_MHZ_PER_T,
            quadrupole_moment_cm2: -0.211e-24,
        },
    ]
}

pub fn find_preset<'a>(presets: &'a [MaterialPreset], name: &str) -> Result<&'a MaterialPreset> {
    presets
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Converts field (T) and temperature (K) into dimensionless parameters; eta
/// comes from the preset.
pub fn params_from_physical(
    field_tesla: f64,
    temperature_kelvin: f64,
    preset: &MaterialPreset,
    spin: Spin,
    convention: TemperatureConvention,
    orientation: Orientation,
) -> Result<HamiltonianParams> {
    if temperature_kelvin.is_nan() || temperature_kelvin <= 0.0 {
        return Err(Error::NonPositiveTemperature(temperature_kelvin));
    }
    check_non_negative("field", field_tesla)?;
    let thermal = BOLTZMANN * temperature_kelvin;
    let alpha = PLANCK * preset.gyromagnetic_ratio_mhz_per_t * 1e6 * field_tesla / thermal;
    let beta =
        PLANCK * preset.quadrupole_coupling_mhz * 1e6 / (convention.denominator(spin) * thermal);
    HamiltonianParams::new(alpha, beta, preset.eta, orientation)
}

/// Temperature (K) at which a coupling of `coupling_mhz` yields `beta`.
pub fn temperature_for_beta(
    beta: f64,
    coupling_mhz: f64,
    spin: Spin,
    convention: TemperatureConvention,
) -> Result<f64> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta,
            range: "(0, inf)",
        });
    }
    Ok(PLANCK * coupling_mhz * 1e6 / (convention.denominator(spin) * BOLTZMANN * beta))
}

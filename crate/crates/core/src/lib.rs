//! Thermal-equilibrium entanglement between the levels of a single
//! quadrupolar nucleus in an electric field gradient and a magnetic field.
//!
//! The four levels of a spin 3/2 are treated as two effective qubits and
//! their entanglement in the Gibbs state is measured by the Wootters
//! concurrence. Modules, bottom up:
//!
//! - [`linalg`]: dense complex matrices, Jacobi eigensolver, matrix functions
//! - [`spin`]: angular-momentum and quadrupole tensor operators
//! - [`hamiltonian`]: lab-frame Hamiltonian, presets, unit conversion
//! - [`thermal`]: density matrix, spin flip, concurrence, magnetization
//! - [`analysis`]: sweeps, orientation maximisation, onset search, witness fit

pub mod analysis;
pub mod error;
pub mod hamiltonian;
pub mod linalg;
pub mod spin;
pub mod thermal;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use error::{Error, Result};
pub use hamiltonian::{
    HamiltonianParams, MaterialPreset, Orientation, QuadrupoleModel, TemperatureConvention,
};
pub use linalg::ComplexMatrix;
pub use spin::{Spin, SpinSystem};
pub use thermal::{ConcurrenceResult, DensityMatrix};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

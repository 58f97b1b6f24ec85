//! Sweeps and derived quantities over the dimensionless parameter space.
//!
//! Everything here works at spin 3/2, the only case where the four levels map
//! onto two qubits. [`run_sweep`] accepts other spins but every point then
//! fails at the concurrence step.

mod onset;
mod optimize;
pub mod shape;
mod sweep;
mod witness;

pub use onset::{critical_beta, BETA_BRACKET, DEFAULT_ONSET_THRESHOLD};
pub use optimize::{
    golden_section_max, maximize_concurrence_in_theta_range, maximize_concurrence_over_angles,
    AngleMaximum, ANGLE_TOL, GRID_SIZE,
};
pub use sweep::{
    linspace, run_sweep, Axis, Parameter, SweepGrid, SweepMetadata, SweepRecord, SweepResult,
};
pub use witness::{fit_witness, witness_grid, WitnessFit, MIN_WITNESS_POINTS};

use crate::error::Result;
use crate::hamiltonian::{HamiltonianParams, QuadrupoleModel};
use crate::thermal::{concurrence, gibbs_state, magnetization, ConcurrenceResult};

/// Everything computed at a single parameter point.
#[derive(Debug, Clone)]
pub struct PointEvaluation {
    pub params: HamiltonianParams,
    pub concurrence: ConcurrenceResult,
    /// Tr(rho Iz)
    pub magnetization: f64,
    /// Eigenvalues of h, ascending.
    pub energies: Vec<f64>,
}

pub fn evaluate_point(
    model: &QuadrupoleModel,
    params: &HamiltonianParams,
) -> Result<PointEvaluation> {
    let state = gibbs_state(&model.hamiltonian(params)?)?;
    let c = concurrence(&state.density)?;
    let m = magnetization(&state.density, &model.spin_system)?;
    Ok(PointEvaluation {
        params: *params,
        concurrence: c,
        magnetization: m,
        energies: state.energies,
    })
}

/// Concurrence alone, for inner loops.
pub fn concurrence_at(model: &QuadrupoleModel, params: &HamiltonianParams) -> Result<f64> {
    let state = gibbs_state(&model.hamiltonian(params)?)?;
    Ok(concurrence(&state.density)?.concurrence)
}

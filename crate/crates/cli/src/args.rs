use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "quadspin",
    version,
    about = "Thermal entanglement of a spin-3/2 quadrupolar nucleus in a magnetic field",
    after_help = "Environment: QUADSPIN_THREADS caps worker threads for sweeps and angle scans (0 = all cores).\n\
                  Exit codes: 0 success, 2 invalid input, 3 I/O failure, 4 too few data points, 1 other errors."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the thermal state at one parameter point
    Point(PointArgs),
    /// Tabulate concurrence, magnetization and levels over a parameter grid
    Sweep(SweepArgs),
    /// Find the field orientation of maximum concurrence
    MaxAngles(MaxAnglesArgs),
    /// Locate the onset of entanglement and convert it to a temperature
    CriticalTemp(CriticalTempArgs),
    /// Fit concurrence against reduced magnetization over a field sweep
    FitWitness(FitWitnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Flat `key = value` file supplying defaults; flags given here win
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Read every angle argument in degrees instead of radians
    #[arg(long)]
    pub degrees: bool,
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write results to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Angles {
    /// Polar angle of the field in the EFG frame, [0, pi] rad
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Azimuth of the field in the EFG frame, [0, 2 pi) rad [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Zeeman strength gamma H0 / kT, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Quadrupole strength eQq / (4I(2I-1) kT), [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// EFG asymmetry parameter, [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[command(flatten)]
    pub angles: Angles,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Swept parameter as name:start:stop:count, repeatable; the first axis
    /// varies slowest. Names: alpha, beta, eta, theta, phi
    #[arg(long = "axis", value_name = "SPEC")]
    pub axes: Vec<String>,
    /// Tie alpha to beta as alpha = RATIO * beta, [0, inf)
    #[arg(long, value_name = "RATIO", allow_negative_numbers = true)]
    pub ratio_alpha_beta: Option<f64>,
    /// Fixed alpha, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Fixed beta, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Fixed eta, [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[command(flatten)]
    pub angles: Angles,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct MaxAnglesArgs {
    /// Zeeman strength, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Quadrupole strength, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// EFG asymmetry parameter, [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// Lower end of the theta search window, [0, pi] rad [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    /// Upper end of the theta search window, [0, pi] rad [default: pi]
    #[arg(long, allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CriticalTempArgs {
    /// Material preset: cu63-4coord, cu63-5coord, or one defined in --config
    #[arg(long)]
    pub preset: Option<String>,
    /// alpha / beta held fixed during the search, (0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub ratio: Option<f64>,
    /// EFG asymmetry, [0, 1] [default: from the preset]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[command(flatten)]
    pub angles: Angles,
    /// Concurrence counted as entangled, [0, inf) [default: 1e-6]
    #[arg(long, allow_negative_numbers = true)]
    pub threshold: Option<f64>,
    /// Convention reported as T_c: eq7 or paper-mk [default: eq7]
    #[arg(long)]
    pub convention: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct FitWitnessArgs {
    /// Quadrupole strength, [0, inf)
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// EFG asymmetry parameter, [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[command(flatten)]
    pub angles: Angles,
    /// Largest alpha in the sweep and the fit, (0, inf) [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_max: Option<f64>,
    /// Sweep points alpha_max * k / points, k = 1..points; at least 10 [default: 50]
    #[arg(long)]
    pub points: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

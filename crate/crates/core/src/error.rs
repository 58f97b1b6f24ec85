use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m^H| = {max_deviation:e})")]
    NotHermitian { max_deviation: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPsd { eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("concurrence is defined for 4x4 density matrices only (found {found}x{found})")]
    DimensionNotFour { found: usize },

    #[error("invalid spin quantum number {0}: 2I must be a positive integer")]
    InvalidSpin(f64),

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("temperature must be positive (got {0} K)")]
    NonPositiveTemperature(f64),

    #[error("concurrence never exceeds {threshold:e} for beta in [{lo}, {hi}]")]
    NoOnsetFound { threshold: f64, lo: f64, hi: f64 },

    #[error(
        "witness fit needs at least {required} points with 0 < alpha <= alpha_max, found {found}"
    )]
    InsufficientPoints { required: usize, found: usize },

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),

    #[error("sweep point {point} failed: {source}")]
    PointFailed {
        point: String,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown material preset `{0}`")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;

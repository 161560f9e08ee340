use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("fields live on different grids ({0} vs {1} points)")]
    GridMismatch(usize, usize),

    #[error("malformed field: {0}")]
    MalformedField(String),

    #[error("derivative order {0} exceeds supported maximum {1}")]
    DerivativeOrder(usize, usize),

    #[error("weight overflow guard: sigma * xi_max = {0} exceeds {1}")]
    OverflowGuard(f64, f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series truncation not certified: {0}")]
    SeriesNotCertified(String),

    #[error("radius fit: {0}")]
    RadiusFit(String),

    #[error("CFL bound violated: dt = {dt} exceeds limit {limit}")]
    Cfl { dt: f64, limit: f64 },

    #[error("numerical blow-up detected at t = {0} (non-finite state)")]
    BlowUp(f64),

    #[error("trajectory unsuitable: {0}")]
    Trajectory(String),

    #[error("probe hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

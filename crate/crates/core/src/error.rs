use thiserror::Error;

/// Errors returned by the simulation routines.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("sample count mismatch: expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("states are sampled on different grids")]
    GridMismatch,

    #[error(
        "grid [{have_min}, {have_max}] does not cover the required window \
         [{need_min}, {need_max}]"
    )]
    InsufficientCoverage {
        need_min: f64,
        need_max: f64,
        have_min: f64,
        have_max: f64,
    },

    #[error("wavefunction is not negligible at the grid boundary (|psi| = {0:e})")]
    TruncatedState(f64),

    #[error("axis value {0} does not fall on a node or half-node of the state grid")]
    MisalignedAxis(f64),

    #[error("series_exp requires a zero constant term, got {0}")]
    SeriesConstantTerm(f64),

    #[error("argument z = {0} lies outside the classically allowed region |z| <= 1")]
    Domain(f64),

    #[error(
        "expansion center is tangent to the resource circle: (center - y_m)^2 = 2n+1 \
         (shear coefficient diverges)"
    )]
    SingularShear,

    #[error("measurement outcome has vanishing probability density P = {0:e}")]
    ZeroProbability(f64),

    #[error("state vanishes identically and cannot be normalized")]
    ZeroState,

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by estimator construction, value lookup, and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid time series: {0}")]
    InvalidSeries(String),

    #[error("frequency {omega} is not a Fourier frequency of a length-{n} grid (or is not stored)")]
    NonFourierFrequency { omega: f64, n: usize },

    #[error("level {0} is not present in the stored level grid")]
    UnknownLevel(f64),

    #[error("invalid levels: {0}")]
    InvalidLevels(String),

    #[error("level {0} outside [0, 1] for a rank-based computation")]
    LevelOutOfRange(f64),

    #[error("degenerate design: {n} observations for {coeffs} regression coefficients")]
    DegenerateDesign { n: usize, coeffs: usize },

    #[error("quantile-regression solver did not converge (residual duality gap {gap:.3e})")]
    SolverNotConverged { gap: f64 },

    #[error("quantile-regression fit failed at tau={tau}, omega={omega}, replicate={replicate}: {source}")]
    QRegFit {
        tau: f64,
        omega: f64,
        replicate: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid bandwidth {0}: must lie in (0, pi]")]
    InvalidBandwidth(f64),

    #[error("kernel does not integrate to 1 on [-pi, pi] (got {0})")]
    KernelNotNormalized(f64),

    #[error("grid mismatch: weight built for n={expected}, periodogram has n={got}")]
    GridMismatch { expected: usize, got: usize },

    #[error("invalid block length {l} for series length {n}")]
    InvalidBlockLength { l: usize, n: usize },

    #[error("operation requires a kernel-weight smoother, not a spectral-distribution weight")]
    WeightKindMismatch,

    #[error("insufficient bootstrap replicates: have {have}, need at least {need}")]
    InsufficientReplicates { have: usize, need: usize },

    #[error("corrupt or incompatible state file: {0}")]
    CorruptState(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

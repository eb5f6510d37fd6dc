//! Crate-wide error type.

/// Errors raised by search-space construction, evaluation, and batch running.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A search space, direction, or problem was given zero dimensions.
    #[error("dimension must be at least 1")]
    EmptyDimension,

    /// A vector's length does not match the search-space dimension.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A physical value lies outside its variable's bounds.
    #[error("variable {index}: value {value} outside bounds [{lower}, {upper}]")]
    OutOfBounds {
        index: usize,
        value: f64,
        lower: f64,
        upper: f64,
    },

    /// A variable specification violates its invariants.
    #[error("invalid variable specification: {0}")]
    InvalidVariable(String),

    /// A candidate unit vector does not have norm 1.
    #[error("vector norm {norm} is not 1 within tolerance")]
    NotUnitNorm { norm: f64 },

    /// A double-sided constraint was given an empty range.
    #[error("invalid constraint range: lower {lower} must be below upper {upper}")]
    InvalidRange { lower: f64, upper: f64 },

    /// A run or batch configuration violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A step size or antenna distance that must be positive was not.
    #[error("step size must be positive, got {0}")]
    NonPositiveStep(f64),

    /// The objective returned NaN or infinity at a physical point.
    #[error("objective returned a non-finite value at {point:?}")]
    NonFiniteObjective { point: Vec<f64> },

    /// A constraint returned NaN or infinity at a physical point.
    #[error("constraint {index} returned a non-finite value at {point:?}")]
    NonFiniteConstraint { index: usize, point: Vec<f64> },

    /// A fitness callback returned NaN or infinity at a probe point.
    #[error("fitness is non-finite at probe point {point:?}")]
    NonFiniteFitness { point: Vec<f64> },

    /// A problem name is not in the registry.
    #[error("unknown problem '{name}'; known problems: {known}")]
    UnknownProblem { name: String, known: String },

    /// A run inside a batch failed; carries the offending seed.
    #[error("run with seed {seed} failed: {source}")]
    RunFailed {
        seed: u64,
        #[source]
        source: Box<Error>,
    },

    /// A config file could not be parsed.
    #[error("config file {path}: {message}")]
    ConfigFile { path: String, message: String },

    /// An I/O failure while writing reports or traces.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

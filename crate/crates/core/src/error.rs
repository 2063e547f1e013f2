//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by configuration, samplers, estimators, and the exact
/// verification engine.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration (bad bandwidth, empty grid, malformed config file, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The rejection sampler saw no acceptance for too many consecutive proposals.
    #[error("kernel too narrow: {attempts} consecutive proposals rejected")]
    KernelTooNarrow {
        /// Consecutive rejected proposals before aborting.
        attempts: u64,
    },

    /// The MCMC initial weight stayed zero after repeated redraws.
    #[error("initialization failed: weight stayed zero after {attempts} attempts")]
    InitializationStuck {
        /// Weight redraws attempted before aborting.
        attempts: u64,
    },

    /// An estimator was asked to work on fewer values than it needs.
    #[error("insufficient data: need at least {needed} values, got {got}")]
    InsufficientData {
        /// Minimum number of values required.
        needed: usize,
        /// Number of values supplied.
        got: usize,
    },

    /// A finite chain (or its proposal) is not irreducible.
    #[error("reducible chain: {0}")]
    Reducible(String),

    /// An operation requiring reversibility got a non-reversible chain.
    #[error("chain is not reversible: {0}")]
    NotReversible(String),

    /// A numerical self-check failed (singular solve, stationary cross-check, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The requested acceptance budget cannot be met by any tolerance.
    #[error("acceptance budget {budget} is not attainable (must be below 1)")]
    UnattainableBudget {
        /// The per-iteration acceptance budget that was requested.
        budget: f64,
    },

    /// Tolerance calibration could not bracket the target within the search range.
    #[error("calibration bracket not found for epsilon in [{lo}, {hi}]")]
    CalibrationRange {
        /// Lower end of the search range.
        lo: f64,
        /// Upper end of the search range.
        hi: f64,
    },

    /// I/O failure while writing reports.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

//! Likelihood-free inference toolkit: ABC rejection sampling, pseudo-marginal
//! ABC-MCMC, and an alternative single-pseudo-sample ABC-MCMC, together with
//! an exact finite-chain verification engine for the asymptotic-variance
//! orderings that justify running these samplers with a single pseudo-sample,
//! and a Gaussian benchmark harness.
//!
//! The library is organized around a few small pieces:
//!
//! * [`model`] — model/kernel abstractions and the kernel-smoothed weight
//!   estimator shared by all samplers.
//! * [`samplers`] — the three samplers ([`samplers::abc_rejection`],
//!   [`samplers::pm_mcmc`], [`samplers::alt_mcmc`]).
//! * [`diagnostics`] — batch-means asymptotic variance and acceptance rates
//!   estimated from traces.
//! * [`cost`] — serial/parallel running-time functionals with pseudo-sample
//!   cost discounting.
//! * [`exact`] — explicit transition matrices on parameter grids, exact
//!   asymptotic variances via the fundamental matrix, convex-order checking,
//!   and the theorem verification suites.
//! * [`bench`] — the Gaussian benchmark: acceptance-rate-per-cost tables and
//!   tolerance calibration sweeps.
//! * [`report`] — CSV/manifest/SVG emission used by the `abcmc` binary.

pub mod bench;
pub mod cost;
pub mod diagnostics;
pub mod error;
pub mod exact;
pub mod model;
pub mod proposal;
pub mod report;
pub mod rng;
pub mod samplers;

pub use error::{Error, Result};
pub use model::{abc_weight, KernelKind, KernelSpec, Model, WeightEstimate};
pub use rng::RngStream;
pub use samplers::{abc_rejection, alt_mcmc, pm_mcmc, Trace};

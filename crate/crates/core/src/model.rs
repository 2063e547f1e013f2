//! Model and kernel abstractions shared by all samplers.
//!
//! A [`Model`] bundles the prior, the pseudo-data generator composed with its
//! summary statistic, the observed summary, and the distance between
//! summaries. A [`KernelSpec`] is the smoothing kernel with its bandwidth and
//! a stored sup-bound. [`abc_weight`] is the kernel-smoothed unnormalized
//! posterior estimator built from `M` independent pseudo-samples.

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Smoothing kernel family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    /// Indicator of the summary distance being strictly below the bandwidth.
    Uniform,
    /// `exp(-r^2 / (2 eps^2))` of the summary distance `r`.
    Gaussian,
}

impl std::fmt::Display for KernelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KernelKind::Uniform => write!(f, "uniform"),
            KernelKind::Gaussian => write!(f, "gaussian"),
        }
    }
}

/// A smoothing kernel with bandwidth and stored sup-bound.
///
/// The sup-bound `c` is stored rather than inferred so that callers can pick
/// any constant satisfying `c >= sup K`; the rejection sampler's acceptance
/// test divides by it. Both built-in kernels attain their supremum `1` at the
/// origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    kind: KernelKind,
    bandwidth: f64,
    sup_bound: f64,
}

impl KernelSpec {
    /// Uniform kernel with bandwidth `epsilon` and sup-bound 1.
    pub fn uniform(epsilon: f64) -> Result<Self> {
        Self::with_sup_bound(KernelKind::Uniform, epsilon, 1.0)
    }

    /// Gaussian kernel with bandwidth `epsilon` and sup-bound 1.
    pub fn gaussian(epsilon: f64) -> Result<Self> {
        Self::with_sup_bound(KernelKind::Gaussian, epsilon, 1.0)
    }

    /// Kernel with an explicit sup-bound `c >= sup K = 1`.
    pub fn with_sup_bound(kind: KernelKind, epsilon: f64, sup_bound: f64) -> Result<Self> {
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(Error::Config(format!(
                "kernel bandwidth must be a positive finite number, got {epsilon}"
            )));
        }
        if !(sup_bound >= 1.0) {
            return Err(Error::Config(format!(
                "kernel sup-bound must be >= sup K = 1, got {sup_bound}"
            )));
        }
        Ok(Self {
            kind,
            bandwidth: epsilon,
            sup_bound,
        })
    }

    /// Kernel family.
    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    /// Bandwidth `epsilon`.
    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    /// Stored constant `c >= sup K`.
    pub fn sup_bound(&self) -> f64 {
        self.sup_bound
    }

    /// Same kernel with a different bandwidth.
    pub fn with_bandwidth(&self, epsilon: f64) -> Result<Self> {
        Self::with_sup_bound(self.kind, epsilon, self.sup_bound)
    }

    /// Evaluate the kernel on a summary-difference vector (Euclidean norm).
    pub fn eval(&self, diff: &[f64]) -> f64 {
        self.eval_at_distance(euclidean_norm(diff))
    }

    /// Evaluate the kernel at a nonnegative summary distance.
    ///
    /// The uniform kernel uses a strict inequality: distance equal to the
    /// bandwidth evaluates to 0.
    pub fn eval_at_distance(&self, r: f64) -> f64 {
        match self.kind {
            KernelKind::Uniform => {
                if r < self.bandwidth {
                    1.0
                } else {
                    0.0
                }
            }
            KernelKind::Gaussian => (-r * r / (2.0 * self.bandwidth * self.bandwidth)).exp(),
        }
    }
}

/// Value of the kernel-smoothed weight estimator together with its cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightEstimate {
    /// Estimator value `T >= 0`.
    pub value: f64,
    /// Number of pseudo-samples drawn to produce it.
    pub pseudo_samples_used: u32,
}

/// A simulatable model: prior, pseudo-data summary generator, observed
/// summary, and summary distance.
///
/// Implementations must be immutable after construction; they are shared
/// across concurrent workers. All randomness flows through the supplied
/// [`RngStream`].
pub trait Model: Send + Sync {
    /// Parameter dimension.
    fn dim(&self) -> usize;

    /// Summary-statistic dimension.
    fn summary_dim(&self) -> usize;

    /// Draw a parameter from the prior.
    fn prior_sample(&self, rng: &mut RngStream) -> Vec<f64>;

    /// Prior density at `theta` (nonnegative; need not be normalized).
    fn prior_density(&self, theta: &[f64]) -> f64;

    /// Simulate one pseudo-dataset at `theta` and write its summary into `out`.
    fn simulate_summary_into(&self, theta: &[f64], rng: &mut RngStream, out: &mut [f64]);

    /// Summary of the observed data.
    fn observed_summary(&self) -> &[f64];

    /// Distance between two summaries. Defaults to the Euclidean norm of the
    /// difference; implementations must keep it symmetric with
    /// `distance(a, a) = 0`.
    fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }
}

/// Euclidean norm of a vector.
pub fn euclidean_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Kernel-smoothed weight estimator from `m` independent pseudo-samples:
/// `prior(theta) * (1/m) * sum_i K(distance(observed, summary_i))`.
///
/// Unbiased for the unnormalized kernel-smoothed posterior at `theta`. For
/// the uniform kernel the value is `prior(theta) * hits / m` with `hits` in
/// `{0, ..., m}`.
pub fn abc_weight<M: Model + ?Sized>(
    model: &M,
    kernel: &KernelSpec,
    theta: &[f64],
    m: u32,
    rng: &mut RngStream,
) -> WeightEstimate {
    assert!(m >= 1, "abc_weight requires m >= 1");
    let observed = model.observed_summary();
    let mut summary = vec![0.0; model.summary_dim()];
    let mut total = 0.0;
    for _ in 0..m {
        model.simulate_summary_into(theta, rng, &mut summary);
        total += kernel.eval_at_distance(model.distance(observed, &summary));
    }
    WeightEstimate {
        value: model.prior_density(theta) * total / f64::from(m),
        pseudo_samples_used: m,
    }
}

/// Always-hit model: every pseudo-sample reproduces the observed summary.
///
/// Uses a standard normal prior on a one-dimensional parameter. Handy for
/// exercising samplers on a target where every kernel evaluation equals 1.
#[derive(Debug, Clone)]
pub struct DegenerateModel {
    observed: Vec<f64>,
}

impl DegenerateModel {
    /// Model whose simulator always returns `observed`.
    pub fn new(observed: Vec<f64>) -> Self {
        Self { observed }
    }
}

impl Model for DegenerateModel {
    fn dim(&self) -> usize {
        1
    }

    fn summary_dim(&self) -> usize {
        self.observed.len()
    }

    fn prior_sample(&self, rng: &mut RngStream) -> Vec<f64> {
        vec![rng.standard_normal()]
    }

    fn prior_density(&self, theta: &[f64]) -> f64 {
        standard_normal_pdf(theta[0])
    }

    fn simulate_summary_into(&self, _theta: &[f64], _rng: &mut RngStream, out: &mut [f64]) {
        out.copy_from_slice(&self.observed);
    }

    fn observed_summary(&self) -> &[f64] {
        &self.observed
    }
}

/// Standard normal density.
pub(crate) fn standard_normal_pdf(x: f64) -> f64 {
    (-(x * x) / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Normal density with mean and standard deviation.
pub(crate) fn normal_pdf(x: f64, mean: f64, sd: f64) -> f64 {
    standard_normal_pdf((x - mean) / sd) / sd
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_kernel_at_origin_is_one() {
        let k = KernelSpec::uniform(0.25).unwrap();
        assert_eq!(k.eval(&[0.0]), 1.0);
    }

    #[test]
    fn uniform_kernel_boundary_is_strict() {
        let k = KernelSpec::uniform(0.25).unwrap();
        assert_eq!(k.eval(&[0.25]), 0.0);
        assert_eq!(k.eval(&[0.2499999]), 1.0);
    }

    #[test]
    fn gaussian_kernel_matches_formula() {
        let k = KernelSpec::gaussian(1.0).unwrap();
        let got = k.eval(&[1.0]);
        assert!((got - (-0.5f64).exp()).abs() < 1e-15);
        assert!((got - 0.6065).abs() < 1e-4);
    }

    #[test]
    fn nonpositive_bandwidth_is_a_config_error() {
        assert!(matches!(KernelSpec::uniform(0.0), Err(Error::Config(_))));
        assert!(matches!(KernelSpec::gaussian(-1.0), Err(Error::Config(_))));
        assert!(matches!(
            KernelSpec::uniform(f64::NAN),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn sup_bound_below_one_rejected() {
        assert!(KernelSpec::with_sup_bound(KernelKind::Uniform, 0.5, 0.9).is_err());
        let k = KernelSpec::with_sup_bound(KernelKind::Uniform, 0.5, 2.0).unwrap();
        assert_eq!(k.sup_bound(), 2.0);
    }

    #[test]
    fn degenerate_model_weight_equals_prior_density() {
        let model = DegenerateModel::new(vec![2.0]);
        let kernel = KernelSpec::uniform(0.25).unwrap();
        for m in [1u32, 3, 16] {
            let mut rng = RngStream::new(1, 0);
            let w = abc_weight(&model, &kernel, &[0.7], m, &mut rng);
            assert_eq!(w.value, model.prior_density(&[0.7]));
            assert_eq!(w.pseudo_samples_used, m);
        }
    }

    #[test]
    fn single_pseudo_sample_uniform_weight_is_zero_or_prior() {
        // A model whose summaries straddle the kernel boundary.
        let model = crate::bench::GaussianModel::new(2.0, 1.0).unwrap();
        let kernel = KernelSpec::uniform(0.5).unwrap();
        let mut rng = RngStream::new(9, 1);
        let prior = model.prior_density(&[2.0]);
        let mut seen_zero = false;
        let mut seen_prior = false;
        for _ in 0..200 {
            let w = abc_weight(&model, &kernel, &[2.0], 1, &mut rng);
            if w.value == 0.0 {
                seen_zero = true;
            } else {
                assert!((w.value - prior).abs() < 1e-15);
                seen_prior = true;
            }
        }
        assert!(seen_zero && seen_prior);
    }

    #[test]
    fn uniform_weight_times_m_over_prior_is_integer() {
        let model = crate::bench::GaussianModel::new(2.0, 1.0).unwrap();
        let kernel = KernelSpec::uniform(0.5).unwrap();
        let mut rng = RngStream::new(11, 4);
        for m in [1u32, 4, 16] {
            for _ in 0..50 {
                let w = abc_weight(&model, &kernel, &[1.5], m, &mut rng);
                let hits = w.value * f64::from(m) / model.prior_density(&[1.5]);
                assert!((hits - hits.round()).abs() < 1e-9);
                assert!((0.0..=f64::from(m)).contains(&hits.round()));
            }
        }
    }

    #[test]
    fn weight_is_reproducible_bitwise() {
        let model = crate::bench::GaussianModel::new(2.0, 1.0).unwrap();
        let kernel = KernelSpec::uniform(0.5).unwrap();
        let a = abc_weight(&model, &kernel, &[0.3], 8, &mut RngStream::new(5, 2));
        let b = abc_weight(&model, &kernel, &[0.3], 8, &mut RngStream::new(5, 2));
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn distance_is_symmetric_and_zero_on_diagonal() {
        let model = DegenerateModel::new(vec![1.0, -2.0]);
        let a = [0.5, 1.5];
        let b = [-1.0, 2.0];
        assert_eq!(model.distance(&a, &a), 0.0);
        assert_eq!(model.distance(&a, &b), model.distance(&b, &a));
    }
}

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::algorithm_bound;
use super::stats::Summary;
use crate::algorithms::{Algorithm, Model, View};
use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::oracles::opt_matching;
use crate::rng::StreamRng;
use crate::scalar::Weight;
use crate::views::AuditReport;

/// Rounding allowance on the pass comparison, relative to OPT.
const PASS_ROUNDING: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialConfig {
    pub algorithm: Algorithm,
    pub alpha: Alpha,
    pub trials: usize,
    pub seed: u64,
    /// Judge against the β-restricted guarantee instead of the metric one.
    pub beta: Option<f64>,
}

impl TrialConfig {
    pub fn new(algorithm: Algorithm, alpha: Alpha, trials: usize, seed: u64) -> Self {
        TrialConfig { algorithm, alpha, trials, seed, beta: None }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }
}

/// Monte-Carlo estimate of one algorithm on one instance, against OPT and
/// the algorithm's guarantee.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub algorithm: Algorithm,
    pub model: Model,
    pub alpha: Alpha,
    pub instance: String,
    pub trials: usize,
    pub mean_weight: f64,
    pub std_err: f64,
    pub opt_weight: f64,
    pub empirical_ratio: f64,
    /// Guaranteed fraction of OPT.
    pub theoretical_ratio: f64,
    /// The same guarantee as a factor `c` with `E[w] >= OPT / c`.
    pub approximation_factor: f64,
    pub pass: bool,
    pub audit: AuditReport,
}

impl TrialReport {
    /// `mean >= opt · bound − 3·std_err`.
    pub fn passes(mean: f64, std_err: f64, opt: f64, bound: f64) -> bool {
        mean >= opt * bound - 3.0 * std_err - PASS_ROUNDING * opt
    }
}

/// Runs `cfg.trials` independent trials of `cfg.algorithm` on `inst`.
///
/// Trial `t` draws from stream `seed ^ t`, so the report is a pure function
/// of the arguments no matter how trials are spread over threads.
pub fn run_trials<T: Weight>(inst: &Instance<T>, cfg: &TrialConfig) -> Result<TrialReport> {
    let opt = opt_matching(inst).1.to_f64_lossy();
    run_trials_against(inst, cfg, opt)
}

/// [`run_trials`] with a precomputed optimum.
pub fn run_trials_against<T: Weight>(inst: &Instance<T>, cfg: &TrialConfig, opt: f64) -> Result<TrialReport> {
    if cfg.trials < 2 {
        return Err(Error::Invalid(format!("trials must be at least 2, got {}", cfg.trials)));
    }
    let view = View::for_algorithm(cfg.algorithm, inst, cfg.alpha);
    let weights: Vec<f64> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = StreamRng::new(cfg.seed, cfg.seed ^ t);
            let m = cfg.algorithm.run(&view, &mut rng)?;
            if !m.is_perfect() {
                return Err(Error::Invalid(format!("{} returned an imperfect matching", cfg.algorithm)));
            }
            Ok(m.weight(inst)?.to_f64_lossy())
        })
        .collect::<Result<_>>()?;

    let summary = Summary::of(&weights);
    let bound = algorithm_bound(cfg.algorithm, cfg.alpha, cfg.beta);
    let empirical_ratio = if opt > 0.0 { summary.mean / opt } else { 1.0 };
    Ok(TrialReport {
        algorithm: cfg.algorithm,
        model: cfg.algorithm.model(),
        alpha: cfg.alpha,
        instance: inst.name().unwrap_or("unnamed").to_string(),
        trials: cfg.trials,
        mean_weight: summary.mean,
        std_err: summary.std_err,
        opt_weight: opt,
        empirical_ratio,
        theoretical_ratio: bound,
        approximation_factor: 1.0 / bound,
        pass: TrialReport::passes(summary.mean, summary.std_err, opt, bound),
        audit: view.audit(),
    })
}

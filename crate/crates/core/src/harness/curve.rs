use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::theoretical_bound;
use super::trials::{run_trials_against, TrialConfig, TrialReport};
use crate::algorithms::Model;
use crate::alpha::Alpha;
use crate::error::Result;
use crate::generators::GenSpec;
use crate::instance::Instance;
use crate::oracles::opt_matching;

pub const CURVE_CSV_HEADER: &str = "model,alpha,empirical_ratio,theoretical_bound,std_err,trials,instances";

/// Family-averaged performance of one model at one budget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub model: Model,
    pub alpha: Alpha,
    /// Mean over instances of `mean_weight / opt`.
    pub empirical_ratio: f64,
    pub theoretical_bound: f64,
    /// Standard error of `empirical_ratio`, combining per-instance errors.
    pub std_err: f64,
    pub trials: usize,
    pub instances: usize,
    /// Smallest per-instance ratio.
    pub min_ratio: f64,
    /// Whether every per-instance report passed.
    pub all_pass: bool,
    pub reports: Vec<TrialReport>,
}

impl CurvePoint {
    /// `empirical_ratio >= bound − 3·std_err`.
    pub fn pass(&self) -> bool {
        self.empirical_ratio >= self.theoretical_bound - 3.0 * self.std_err
    }
}

/// Runs the model's algorithm over every instance of `family` at every
/// budget in `alpha_grid`.
pub fn tradeoff_curve(
    family: &[GenSpec],
    model: Model,
    alpha_grid: &[Alpha],
    trials: usize,
    seed: u64,
) -> Result<Vec<CurvePoint>> {
    let instances: Vec<Instance<f64>> = family.iter().map(GenSpec::generate).collect::<Result<_>>()?;
    curve_over(&instances, model, alpha_grid, trials, seed)
}

/// [`tradeoff_curve`] on already generated instances.
pub fn curve_over(
    instances: &[Instance<f64>],
    model: Model,
    alpha_grid: &[Alpha],
    trials: usize,
    seed: u64,
) -> Result<Vec<CurvePoint>> {
    let opts: Vec<f64> = instances.par_iter().map(|inst| opt_matching(inst).1).collect();
    let alg = model.algorithm();
    alpha_grid
        .iter()
        .map(|&alpha| {
            let reports: Vec<TrialReport> = instances
                .iter()
                .zip(&opts)
                .enumerate()
                .map(|(i, (inst, &opt))| {
                    let cfg = TrialConfig::new(alg, alpha, trials, seed.wrapping_add(i as u64));
                    run_trials_against(inst, &cfg, opt)
                })
                .collect::<Result<_>>()?;
            Ok(summarize(model, alpha, trials, reports))
        })
        .collect()
}

fn summarize(model: Model, alpha: Alpha, trials: usize, reports: Vec<TrialReport>) -> CurvePoint {
    let m = reports.len().max(1) as f64;
    let ratios: Vec<f64> = reports.iter().map(|r| r.empirical_ratio).collect();
    let rel_err_sq: Vec<f64> =
        reports.iter().map(|r| if r.opt_weight > 0.0 { (r.std_err / r.opt_weight).powi(2) } else { 0.0 }).collect();
    CurvePoint {
        model,
        alpha,
        empirical_ratio: super::stats::compensated_sum(&ratios) / m,
        theoretical_bound: theoretical_bound(model, alpha, None),
        std_err: super::stats::compensated_sum(&rel_err_sq).sqrt() / m,
        trials,
        instances: reports.len(),
        min_ratio: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        all_pass: reports.iter().all(|r| r.pass),
        reports,
    }
}

pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut out = String::from(CURVE_CSV_HEADER);
    out.push('\n');
    for p in points {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            p.model, p.alpha, p.empirical_ratio, p.theoretical_bound, p.std_err, p.trials, p.instances
        )
        .expect("writing to a String cannot fail");
    }
    out
}

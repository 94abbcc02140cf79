//! Monte-Carlo evaluation against the proven guarantees.

pub mod bounds;
pub mod curve;
pub mod lemmas;
pub mod lower_bounds;
pub mod stats;
pub mod trials;

pub use bounds::{algorithm_bound, theoretical_bound};
pub use curve::{curve_csv, curve_over, tradeoff_curve, CurvePoint, CURVE_CSV_HEADER};
pub use lemmas::{lemma_property_suite, LemmaCheck, LemmaLedger};
pub use lower_bounds::{lb_one_sided_ratio, lb_two_sided_mix_ratios, lb_two_sided_optimal_mix, TwoSidedMix};
pub use stats::{compensated_sum, Summary};
pub use trials::{run_trials, run_trials_against, TrialConfig, TrialReport};

use crate::error::{Error, Result};

/// Runs `f` on a dedicated pool of `threads` workers.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

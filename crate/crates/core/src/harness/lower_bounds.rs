use serde::Serialize;

use crate::error::Result;
use crate::generators::{gen_lb_two_sided, LbVariant};
use crate::oracles::opt_matching;

const GRID_STEP: f64 = 1e-4;

/// Best randomisation between the two perfect matchings of the 2×2
/// two-sided lower-bound pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoSidedMix {
    /// Probability of playing W1's optimum.
    pub p_star: f64,
    /// `min(E[w]/OPT)` over both weightings at `p_star`.
    pub worst_ratio: f64,
    /// `1 / worst_ratio`.
    pub approximation_factor: f64,
}

/// `(E[w]/OPT on W1, E[w]/OPT on W2)` when W1's optimal matching is played
/// with probability `p` and W2's otherwise.
pub fn lb_two_sided_mix_ratios(epsilon: f64, p: f64) -> Result<(f64, f64)> {
    let w1 = gen_lb_two_sided(epsilon, LbVariant::W1)?;
    let w2 = gen_lb_two_sided(epsilon, LbVariant::W2)?;
    let (m1, opt1) = opt_matching(&w1);
    let (m2, opt2) = opt_matching(&w2);
    let on = |inst, opt: f64| (p * m1.weight(inst).unwrap() + (1.0 - p) * m2.weight(inst).unwrap()) / opt;
    Ok((on(&w1, opt1), on(&w2, opt2)))
}

/// Searches `p ∈ [0, 1]` on a `1e-4` grid for the mix maximising the worse
/// of the two ratios. No algorithm seeing only these preferences can beat
/// the resulting factor on both instances.
pub fn lb_two_sided_optimal_mix(epsilon: f64) -> Result<TwoSidedMix> {
    let steps = (1.0 / GRID_STEP).round() as usize;
    let mut best = TwoSidedMix { p_star: 0.0, worst_ratio: f64::NEG_INFINITY, approximation_factor: f64::NAN };
    for i in 0..=steps {
        let p = i as f64 * GRID_STEP;
        let (r1, r2) = lb_two_sided_mix_ratios(epsilon, p)?;
        let worst = r1.min(r2);
        if worst > best.worst_ratio {
            best = TwoSidedMix { p_star: p, worst_ratio: worst, approximation_factor: 1.0 / worst };
        }
    }
    Ok(best)
}

/// Approximation factor of uniformly random matching on the one-sided
/// lower-bound family, from its closed forms:
/// `OPT = (2ν + 1)·n` and `E[random] = (ν(1/n + ν) + 1)·n`.
pub fn lb_one_sided_ratio(n: usize, nu: f64) -> f64 {
    let n = n as f64;
    ((2.0 * nu + 1.0) * n) / ((nu * (1.0 / n + nu) + 1.0) * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_lb_one_sided;
    use crate::oracles::exact_random_expectation;

    #[test]
    fn pure_strategies() {
        let eps = 1e-6;
        let (_, on_w2) = lb_two_sided_mix_ratios(eps, 1.0).unwrap();
        assert!((on_w2 - (1.0 + eps) / (2.0 - 2.0 * eps)).abs() < 1e-12);
        let (on_w1, _) = lb_two_sided_mix_ratios(eps, 0.0).unwrap();
        assert!((on_w1 - (2.0 + 2.0 * eps) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn optimal_mix_near_half() {
        let mix = lb_two_sided_optimal_mix(1e-6).unwrap();
        assert!((mix.p_star - 0.5).abs() < 1e-3, "{mix:?}");
        assert!((mix.approximation_factor - 4.0 / 3.0).abs() < 1e-3, "{mix:?}");
    }

    #[test]
    fn converges_as_epsilon_shrinks() {
        let coarse = lb_two_sided_optimal_mix(1e-3).unwrap();
        let fine = lb_two_sided_optimal_mix(1e-6).unwrap();
        assert!(
            (fine.approximation_factor - 4.0 / 3.0).abs() <= (coarse.approximation_factor - 4.0 / 3.0).abs() + 1e-9
        );
    }

    #[test]
    fn one_sided_examples() {
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((lb_one_sided_ratio(1000, golden) - 1.618).abs() < 0.01);
        assert_eq!(lb_one_sided_ratio(1000, 0.0), 1.0);
        assert!((lb_one_sided_ratio(1000, 0.5) - 2.0 / 1.2505).abs() < 1e-12);
    }

    #[test]
    fn closed_forms_match_oracles() {
        for (n, nu) in [(10usize, 0.5), (20, 0.25), (8, 0.625)] {
            let inst = gen_lb_one_sided::<f64>(n, nu).unwrap();
            let ratio = opt_matching(&inst).1 / exact_random_expectation(&inst);
            assert!((ratio - lb_one_sided_ratio(n, nu)).abs() < 1e-12, "n = {n}, nu = {nu}");
        }
    }
}

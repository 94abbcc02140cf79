use super::random::{complete_randomly, cross_match_with_surplus};
use super::undominated::greedy_rounds;
use super::MixParams;
use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::matching::{Matching, Residual};
use crate::rng::StreamRng;
use crate::views::TwoSidedView;

/// Two-sided model, `α ≤ 1/2`: `⌊α·n⌋` rounds of "random free x, take the
/// undominated edge its chain walk reaches", then random completion.
pub fn two_sided_low_alpha(view: &TwoSidedView, rng: &mut StreamRng) -> Result<Matching> {
    if view.alpha() > Alpha::HALF {
        return Err(Error::AlphaOutOfRange {
            algorithm: "two-sided (low alpha)",
            alpha: view.alpha().as_f64(),
            lo: 0.0,
            hi: 0.5,
        });
    }
    let n = view.n();
    let mut m = Matching::empty(n);
    let mut residual = Residual::full(n);
    greedy_rounds(view, view.depth().min(n), &mut residual, &mut m, rng)?;
    complete_randomly(&mut m, &residual, rng);
    Ok(m)
}

/// Two-sided model, `α ≥ 1/2` (budgets above 3/4 run as 3/4).
///
/// Builds a greedy undominated `⌊α·n⌋`-matching `M0` and returns either
/// `M1 = M0 + random matching on the unmatched agents`, or `M2`: a random
/// `⌊(2α−1)·n⌋` edges of `M0` kept, the released `M0` agents crossed at
/// random with the never-matched agents.
pub fn two_sided_mixed(view: &TwoSidedView, rng: &mut StreamRng) -> Result<Matching> {
    if view.alpha() < Alpha::HALF {
        return Err(Error::AlphaOutOfRange {
            algorithm: "two-sided (mixed)",
            alpha: view.alpha().as_f64(),
            lo: 0.5,
            hi: 1.0,
        });
    }
    let alpha = view.alpha().min(Alpha::THREE_QUARTERS);
    let n = view.n();
    let k = alpha.floor_mul(n);
    let mix = MixParams::two_sided(alpha);

    let mut m0 = Matching::empty(n);
    let mut residual = Residual::full(n);
    greedy_rounds(view, k, &mut residual, &mut m0, rng)?;

    if rng.bernoulli(mix.p_m1) {
        complete_randomly(&mut m0, &residual, rng);
        return Ok(m0);
    }

    let keep = kept_edge_count(alpha, n).min(m0.len());
    let (kept, released) = rng.split_random(m0.pairs(), keep);
    let x_a: Vec<usize> = released.iter().map(|&(x, _)| x).collect();
    let y_a: Vec<usize> = released.iter().map(|&(_, y)| y).collect();
    let x_b = residual.free_xs();
    let y_b = residual.free_ys();

    let mut m2 = Matching::empty(n);
    m2.extend(kept);
    m2.extend(cross_match_with_surplus(&[(&x_a, &y_b), (&x_b, &y_a)], rng));
    Ok(m2)
}

/// `⌊(2α − 1)·n⌋`, clamped at zero.
fn kept_edge_count(alpha: Alpha, n: usize) -> usize {
    let r = alpha.ratio() * 2 - 1;
    if r <= num_rational::Rational64::from_integer(0) {
        return 0;
    }
    ((*r.numer() as u128 * n as u128) / *r.denom() as u128) as usize
}

/// Dispatches on the budget: the low-α walk below 1/2, the mixed
/// algorithm from 1/2 upward.
pub fn two_sided(view: &TwoSidedView, rng: &mut StreamRng) -> Result<Matching> {
    if view.alpha() < Alpha::HALF {
        two_sided_low_alpha(view, rng)
    } else {
        two_sided_mixed(view, rng)
    }
}

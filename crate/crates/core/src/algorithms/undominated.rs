//! Undominated edges from two-sided preferences.
//!
//! An edge `(x, y)` of the residual graph is undominated when it is at
//! least as heavy as every other residual edge at `x` or at `y`. With
//! strict preferences that means `x` and `y` are each other's favourites,
//! or the edge sits on a cycle of favourites (all of equal weight).

use crate::error::{BudgetViolation, Error, Result};
use crate::matching::{Matching, Residual};
use crate::rng::StreamRng;
use crate::views::TwoSidedView;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Moved {
    X,
    Y,
}

/// Follows favourite pointers from `start_x`, alternating sides, until it
/// reaches a mutual-favourite pair. Edge weights are non-decreasing along
/// the walk, so the pair found is at least as heavy as anything at
/// `start_x`.
pub fn chain_walk(view: &TwoSidedView, start_x: usize, residual: &Residual) -> Result<(usize, usize), BudgetViolation> {
    debug_assert!(residual.x_free(start_x));
    let n = view.n();
    let top_of_x = |x: usize| view.x_prefs().top_available(x, |y| residual.y_free(y));
    let top_of_y = |y: usize| view.y_prefs().top_available(y, |x| residual.x_free(x));

    let mut seen_x = vec![false; n];
    let mut seen_y = vec![false; n];
    let mut x = start_x;
    let mut y = top_of_x(x)?;
    seen_x[x] = true;
    seen_y[y] = true;
    let mut moved = Moved::Y;
    loop {
        match moved {
            // y is x's favourite; undominated iff x is also y's favourite
            Moved::Y => {
                let next = top_of_y(y)?;
                if next == x || seen_x[next] {
                    return Ok((x, y));
                }
                seen_x[next] = true;
                x = next;
                moved = Moved::X;
            }
            Moved::X => {
                let next = top_of_x(x)?;
                if next == y || seen_y[next] {
                    return Ok((x, y));
                }
                seen_y[next] = true;
                y = next;
                moved = Moved::Y;
            }
        }
    }
}

/// Runs `k` greedy rounds on `residual`: pick a uniformly random free x,
/// add the undominated edge its chain walk reaches.
pub(crate) fn greedy_rounds(
    view: &TwoSidedView,
    k: usize,
    residual: &mut Residual,
    m: &mut Matching,
    rng: &mut StreamRng,
) -> Result<()> {
    let mut free_x = residual.free_xs();
    for _ in 0..k {
        let start = free_x[rng.index(free_x.len())];
        let (x, y) = chain_walk(view, start, residual)?;
        residual.remove(x, y);
        m.push(x, y);
        free_x.retain(|&fx| fx != x);
    }
    Ok(())
}

/// Greedy `k`-matching of undominated edges.
///
/// Requires `k <= ⌊α·n⌋`: with fewer than `⌊α·n⌋` pairs removed, every
/// agent's favourite free partner lies inside its revealed list.
pub fn greedy_undominated_k(view: &TwoSidedView, k: usize, rng: &mut StreamRng) -> Result<Matching> {
    let max = view.depth().min(view.n());
    if k > max {
        return Err(Error::KTooLarge { k, max });
    }
    let mut m = Matching::empty(view.n());
    let mut residual = Residual::full(view.n());
    greedy_rounds(view, k, &mut residual, &mut m, rng)?;
    Ok(m)
}

use super::random::complete_randomly;
use crate::error::{Error, Result};
use crate::matching::{Matching, Residual};
use crate::rng::StreamRng;
use crate::views::OneSidedView;

/// Random serial dictatorship: a uniformly random unmatched x takes its
/// favourite unmatched y, until everyone is matched. Needs full lists.
pub fn rsd(view: &OneSidedView, rng: &mut StreamRng) -> Result<Matching> {
    if view.depth() < view.n() {
        return Err(Error::AlphaOutOfRange { algorithm: "rsd", alpha: view.alpha().as_f64(), lo: 1.0, hi: 1.0 });
    }
    rsd_partial(view, rng)
}

/// RSD for `⌊α·n⌋` rounds, then a uniformly random matching on whoever is
/// left.
///
/// In round `i` (0-based) only `i` partners have been taken, so each
/// dictator's favourite free partner sits within its top `i + 1` ranks and
/// the view's depth is never exceeded.
pub fn rsd_partial(view: &OneSidedView, rng: &mut StreamRng) -> Result<Matching> {
    let n = view.n();
    let rounds = view.depth().min(n);
    let mut m = Matching::empty(n);
    let mut residual = Residual::full(n);
    let mut free_x: Vec<usize> = (0..n).collect();
    for _ in 0..rounds {
        let x = free_x.swap_remove(rng.index(free_x.len()));
        let y = view.x_prefs().top_available(x, |y| residual.y_free(y))?;
        residual.remove(x, y);
        m.push(x, y);
    }
    complete_randomly(&mut m, &residual, rng);
    Ok(m)
}

use super::random::{complete_randomly, cross_match_with_surplus, random_bipartite};
use super::MixParams;
use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::matching::{Matching, Residual};
use crate::rng::StreamRng;
use crate::views::TotalOrderView;

/// Largest `k` with `k ≤ (1 − √(1 − α))·n`, computed in integers.
///
/// After `k − 1` greedy picks at most `n² − (n − k + 1)²` edges are gone,
/// which stays below `⌊α·n²⌋` for every such `k`, so the prefix always
/// still holds the next heaviest free edge.
pub fn total_order_k(alpha: Alpha, n: usize) -> usize {
    let p = *alpha.ratio().numer() as u128;
    let q = *alpha.ratio().denom() as u128;
    let n2 = (n as u128) * (n as u128);
    // (n - k)^2 * q >= (q - p) * n^2
    (0..=n).rev().find(|&k| ((n - k) as u128).pow(2) * q >= (q - p) * n2).unwrap_or(0)
}

/// `⌊(1 − 2α₁)·n⌋` with `α₁ = 1 − √(1 − α)`, i.e. the largest `c` with
/// `(c + n)² ≤ 4(1 − α)·n²`. Requires `α ≤ 3/4`.
fn sampled_bottom_count(alpha: Alpha, n: usize) -> usize {
    let p = *alpha.ratio().numer() as u128;
    let q = *alpha.ratio().denom() as u128;
    let n2 = (n as u128) * (n as u128);
    (0..=n).rev().find(|&c| ((c + n) as u128).pow(2) * q <= 4 * (q - p) * n2).unwrap_or(0)
}

/// Scans the ranked prefix once, taking each edge whose endpoints are both
/// still free, until `k` edges are taken. Reads order only.
pub fn greedy_total_order_k(view: &TotalOrderView, k: usize) -> Result<Matching> {
    let n = view.n();
    if k > n {
        return Err(Error::KTooLarge { k, max: n });
    }
    let mut m = Matching::empty(n);
    let mut residual = Residual::full(n);
    let mut position = 0;
    while m.len() < k {
        let (x, y) = view.edge_at(position)?;
        if residual.x_free(x) && residual.y_free(y) {
            residual.remove(x, y);
            m.push(x, y);
        }
        position += 1;
    }
    Ok(m)
}

/// Total-order model (budgets above 3/4 run as 3/4).
///
/// With `α₁ = 1 − √(1 − α)`, builds the greedy `⌊α₁·n⌋`-matching `M0` and
/// returns either `M1 = M0 + random matching on the rest`, or `M2`: a
/// random matching among `⌊(1 − 2α₁)·n⌋` random unmatched agents per side,
/// with the remaining unmatched agents crossed at random against the
/// agents of `M0`.
pub fn total_order_mixed(view: &TotalOrderView, rng: &mut StreamRng) -> Result<Matching> {
    let alpha = view.alpha().min(Alpha::THREE_QUARTERS);
    let n = view.n();
    let k = total_order_k(alpha, n);
    let mix = MixParams::total_order(alpha);
    let mut m0 = greedy_total_order_k(view, k)?;
    let residual = Residual::after(&m0);

    if rng.bernoulli(mix.p_m1) {
        complete_randomly(&mut m0, &residual, rng);
        return Ok(m0);
    }

    let x_b = residual.free_xs();
    let y_b = residual.free_ys();
    let c = sampled_bottom_count(alpha, n).min(x_b.len());
    let (x_c, x_a) = rng.split_random(&x_b, c);
    let (y_c, y_a) = rng.split_random(&y_b, c);
    let x_t: Vec<usize> = m0.pairs().iter().map(|&(x, _)| x).collect();
    let y_t: Vec<usize> = m0.pairs().iter().map(|&(_, y)| y).collect();

    let mut m2 = Matching::empty(n);
    m2.extend(random_bipartite(&x_c, &y_c, rng));
    m2.extend(cross_match_with_surplus(&[(&x_a, &y_t), (&x_t, &y_a)], rng));
    Ok(m2)
}

pub fn total_order(view: &TotalOrderView, rng: &mut StreamRng) -> Result<Matching> {
    total_order_mixed(view, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Instance;
    use crate::views::derive_total_order;

    fn diag() -> Instance<f64> {
        Instance::new(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap()
    }

    #[test]
    fn k_from_budget() {
        assert_eq!(total_order_k(Alpha::ZERO, 10), 0);
        assert_eq!(total_order_k(Alpha::THREE_QUARTERS, 2), 1);
        assert_eq!(total_order_k(Alpha::THREE_QUARTERS, 20), 10);
        assert_eq!(total_order_k(Alpha::ONE, 5), 5);
        // 1 - sqrt(0.75) = 0.1339..., times 20 = 2.68
        assert_eq!(total_order_k(Alpha::new(1, 4).unwrap(), 20), 2);
        for n in 1..40 {
            for (p, q) in [(1, 4), (1, 2), (3, 4), (1, 3), (2, 3)] {
                let a = Alpha::new(p, q).unwrap();
                let exact = ((1.0 - (1.0 - a.as_f64()).sqrt()) * n as f64 + 1e-9).floor() as usize;
                assert_eq!(total_order_k(a, n), exact, "n = {n}, alpha = {a}");
            }
        }
    }

    #[test]
    fn bottom_counts() {
        assert_eq!(sampled_bottom_count(Alpha::ZERO, 10), 10);
        assert_eq!(sampled_bottom_count(Alpha::THREE_QUARTERS, 10), 0);
        // 2 sqrt(0.75) - 1 = 0.732..., times 20 = 14.6
        assert_eq!(sampled_bottom_count(Alpha::new(1, 4).unwrap(), 20), 14);
    }

    #[test]
    fn greedy_examples() {
        let full = derive_total_order(&diag(), Alpha::ONE);
        let m = greedy_total_order_k(&full, 2).unwrap();
        assert_eq!(m.pairs(), &[(0, 0), (1, 1)]);
        assert!(greedy_total_order_k(&full, 0).unwrap().is_empty());

        let three_quarters = derive_total_order(&diag(), Alpha::THREE_QUARTERS);
        assert_eq!(three_quarters.len(), 3);
        let k = total_order_k(Alpha::THREE_QUARTERS, 2);
        let m = greedy_total_order_k(&three_quarters, k).unwrap();
        assert_eq!(m.pairs(), &[(0, 0)]);
        assert_eq!(three_quarters.audit().deepest_read, Some(0));
    }

    #[test]
    fn exhausted_prefix_is_an_error() {
        let view = derive_total_order(&diag(), Alpha::new(1, 4).unwrap());
        assert!(matches!(greedy_total_order_k(&view, 2), Err(Error::Budget(_))));
    }

    #[test]
    fn always_perfect() {
        for n in [1usize, 2, 3, 4, 7, 10] {
            let inst = Instance::from_fn(n, |x, y| ((x * 5 + y * 3) % 7) as f64 + 0.5).unwrap();
            for alpha in [Alpha::ZERO, Alpha::new(1, 4).unwrap(), Alpha::HALF, Alpha::THREE_QUARTERS, Alpha::ONE] {
                let view = derive_total_order(&inst, alpha);
                for s in 0..40 {
                    let m = total_order(&view, &mut StreamRng::new(s, 5)).unwrap();
                    assert!(m.is_perfect(), "n = {n}, alpha = {alpha}");
                }
                assert!(view.audit().within_budget());
            }
        }
    }
}

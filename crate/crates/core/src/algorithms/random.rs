use crate::matching::{Matching, Residual};
use crate::rng::StreamRng;

/// Uniformly random perfect matching on `n` agents per side.
///
/// Implemented as a uniform permutation of Y assigned to X in index order,
/// which induces the same distribution as repeatedly drawing a uniform
/// edge from the shrinking residual graph.
pub fn random_matching(n: usize, rng: &mut StreamRng) -> Matching {
    let mut m = Matching::empty(n);
    complete_randomly(&mut m, &Residual::full(n), rng);
    m
}

/// Matches every agent still free in `residual` uniformly at random and
/// appends the pairs to `m`.
pub fn complete_randomly(m: &mut Matching, residual: &Residual, rng: &mut StreamRng) {
    let xs = residual.free_xs();
    let ys = residual.free_ys();
    m.extend(random_bipartite(&xs, &ys, rng));
}

/// Uniform perfect matching between two equal-size agent sets.
pub(crate) fn random_bipartite(xs: &[usize], ys: &[usize], rng: &mut StreamRng) -> Vec<(usize, usize)> {
    assert_eq!(xs.len(), ys.len(), "random bipartite matching needs equal sides");
    let mut ys = ys.to_vec();
    rng.shuffle(&mut ys);
    xs.iter().copied().zip(ys).collect()
}

/// Random matchings inside each `(xs, ys)` group. When a group's sides
/// differ in size, the surplus agents (chosen uniformly) are pooled across
/// groups and matched to each other uniformly, so the union stays perfect
/// as long as the groups jointly balance.
pub(crate) fn cross_match_with_surplus(groups: &[(&[usize], &[usize])], rng: &mut StreamRng) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let mut spare_x = Vec::new();
    let mut spare_y = Vec::new();
    for &(xs, ys) in groups {
        let mut xs = xs.to_vec();
        let mut ys = ys.to_vec();
        rng.shuffle(&mut xs);
        rng.shuffle(&mut ys);
        let common = xs.len().min(ys.len());
        spare_x.extend_from_slice(&xs[common..]);
        spare_y.extend_from_slice(&ys[common..]);
        pairs.extend(xs[..common].iter().copied().zip(ys[..common].iter().copied()));
    }
    pairs.extend(random_bipartite(&spare_x, &spare_y, rng));
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_agent_is_forced() {
        let m = random_matching(1, &mut StreamRng::new(0, 0));
        assert_eq!(m.pairs(), &[(0, 0)]);
    }

    #[test]
    fn always_perfect() {
        for s in 0..50 {
            assert!(random_matching(7, &mut StreamRng::new(s, 1)).is_perfect());
        }
    }

    #[test]
    fn both_matchings_of_two_appear_evenly() {
        let trials = 10_000u64;
        let identity = (0..trials)
            .filter(|&s| random_matching(2, &mut StreamRng::new(s, 0)).sorted_pairs() == vec![(0, 0), (1, 1)])
            .count() as f64;
        // chi-square with one degree of freedom, 99.9% critical value 10.83
        let expected = trials as f64 / 2.0;
        let chi2 = 2.0 * (identity - expected).powi(2) / expected;
        assert!(chi2 < 10.83, "chi2 = {chi2}");
    }

    #[test]
    fn surplus_agents_are_paired_across_groups() {
        let mut rng = StreamRng::new(3, 3);
        let pairs = cross_match_with_surplus(&[(&[0, 1], &[5, 6, 7]), (&[2, 3, 4], &[8, 9])], &mut rng);
        let m = Matching::from_pairs(10, pairs).unwrap();
        assert_eq!(m.len(), 5);
    }
}

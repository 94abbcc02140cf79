use crate::instance::Instance;
use crate::matching::Matching;
use crate::scalar::Weight;

/// Minimum-cost perfect assignment by the O(n³) shortest augmenting path
/// method with row/column potentials. Returns `y_of[x]`.
///
/// Works for any [`Weight`]; for exact scalars the result is exactly
/// optimal, for floats up to accumulated rounding.
fn min_cost_assignment<T: Weight>(n: usize, cost: impl Fn(usize, usize) -> T) -> Vec<usize> {
    // 1-based internally; column 0 is a sentinel
    let mut u = vec![T::zero(); n + 1];
    let mut v = vec![T::zero(); n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for row in 1..=n {
        row_of_col[0] = row;
        let mut col0 = 0usize;
        let mut min_slack: Vec<Option<T>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[col0] = true;
            let r0 = row_of_col[col0];
            let mut delta: Option<T> = None;
            let mut col1 = 0usize;
            for col in 1..=n {
                if used[col] {
                    continue;
                }
                let reduced = cost(r0 - 1, col - 1) - u[r0] - v[col];
                if min_slack[col].is_none_or(|m| reduced < m) {
                    min_slack[col] = Some(reduced);
                    way[col] = col0;
                }
                let slack = min_slack[col].expect("just set");
                if delta.is_none_or(|d| slack < d) {
                    delta = Some(slack);
                    col1 = col;
                }
            }
            let delta = delta.expect("an unused column always exists");
            for col in 0..=n {
                if used[col] {
                    let r = row_of_col[col];
                    u[r] = u[r] + delta;
                    v[col] = v[col] - delta;
                } else if let Some(m) = min_slack[col] {
                    min_slack[col] = Some(m - delta);
                }
            }
            col0 = col1;
            if row_of_col[col0] == 0 {
                break;
            }
        }
        loop {
            let col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut y_of = vec![0usize; n];
    for col in 1..=n {
        y_of[row_of_col[col] - 1] = col - 1;
    }
    y_of
}

/// Maximum-weight perfect matching and its weight.
pub fn opt_matching<T: Weight>(inst: &Instance<T>) -> (Matching, T) {
    let top = inst.max_weight();
    let assignment = min_cost_assignment(inst.n(), |x, y| top - inst.weight(x, y));
    let m = Matching::from_assignment(&assignment);
    let w = m.weight(inst).expect("assignment is a perfect matching");
    (m, w)
}

/// Minimum-weight perfect matching and its weight.
pub fn min_matching<T: Weight>(inst: &Instance<T>) -> (Matching, T) {
    let assignment = min_cost_assignment(inst.n(), |x, y| inst.weight(x, y));
    let m = Matching::from_assignment(&assignment);
    let w = m.weight(inst).expect("assignment is a perfect matching");
    (m, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn diag_examples() {
        let inst = Instance::new(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert_eq!(opt_matching(&inst).1, 4.0);
        assert_eq!(min_matching(&inst).1, 2.0);
    }

    #[test]
    fn single_edge() {
        let inst = Instance::new(vec![vec![7.0]]).unwrap();
        assert_eq!(opt_matching(&inst).1, 7.0);
        assert_eq!(min_matching(&inst).0.pairs(), &[(0, 0)]);
    }

    #[test]
    fn all_equal() {
        let inst = Instance::new(vec![vec![2.5; 5]; 5]).unwrap();
        assert_eq!(min_matching(&inst).1, 12.5);
        assert_eq!(opt_matching(&inst).1, 12.5);
    }

    #[test]
    fn exact_rationals() {
        let r = |a, b| Rational64::new(a, b);
        let inst = Instance::new(vec![
            vec![r(1, 3), r(1, 2), r(1, 7)],
            vec![r(2, 3), r(1, 5), r(1, 9)],
            vec![r(1, 11), r(3, 4), r(1, 2)],
        ])
        .unwrap();
        // best of the 6 permutations: (0,1)+(1,0)+(2,2) = 1/2 + 2/3 + 1/2
        let (m, w) = opt_matching(&inst);
        assert_eq!(w, r(5, 3));
        assert!(m.is_perfect());
    }
}

use proptest::prelude::*;

use ordmatch::algorithms::{greedy_total_order_k, total_order_k, Algorithm, View};
use ordmatch::generators::metric_repair;
use ordmatch::oracles::{min_matching, opt_matching};
use ordmatch::views::{derive_one_sided, derive_total_order, derive_two_sided};
use ordmatch::{Alpha, Instance, StreamRng};

/// Small instances with integer weights, so ties are common.
fn instance() -> impl Strategy<Value = Instance<f64>> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(0u8..6, n * n)
            .prop_map(move |w| Instance::from_fn(n, |x, y| w[x * n + y] as f64).unwrap())
    })
}

fn any_alpha() -> impl Strategy<Value = Alpha> {
    (0i64..=8).prop_map(|p| Alpha::new(p, 8).unwrap())
}

proptest! {
    #[test]
    fn preference_lists_follow_weights(inst in instance(), alpha in any_alpha()) {
        let n = inst.n();
        let view = derive_two_sided(&inst, alpha);
        prop_assert_eq!(view.depth(), alpha.floor_mul(n));
        for agent in 0..n {
            for rank in 1..view.depth() {
                let (a, b) = (view.x_prefs().at(agent, rank - 1).unwrap(), view.x_prefs().at(agent, rank).unwrap());
                let (wa, wb) = (inst.weight(agent, a), inst.weight(agent, b));
                prop_assert!(wa > wb || (wa == wb && a < b));
                let (a, b) = (view.y_prefs().at(agent, rank - 1).unwrap(), view.y_prefs().at(agent, rank).unwrap());
                let (wa, wb) = (inst.weight(a, agent), inst.weight(b, agent));
                prop_assert!(wa > wb || (wa == wb && a < b));
            }
            // the favourite is a heaviest edge
            if view.depth() > 0 {
                let top = view.x_prefs().at(agent, 0).unwrap();
                prop_assert!((0..n).all(|y| inst.weight(agent, y) <= inst.weight(agent, top)));
            }
        }
        prop_assert!(view.x_prefs().at(0, view.depth()).is_err());
        prop_assert!(!view.audit().within_budget());
    }

    #[test]
    fn total_order_prefix_is_sorted(inst in instance(), alpha in any_alpha()) {
        let n = inst.n();
        let view = derive_total_order(&inst, alpha);
        prop_assert_eq!(view.len(), alpha.floor_mul(n * n));
        let edges: Vec<_> = (0..view.len()).map(|p| view.edge_at(p).unwrap()).collect();
        for pair in edges.windows(2) {
            let (wa, wb) = (inst.weight(pair[0].0, pair[0].1), inst.weight(pair[1].0, pair[1].1));
            prop_assert!(wa > wb || (wa == wb && pair[0] < pair[1]));
        }
        // nothing outside the prefix is heavier than its last edge
        if let Some(&(x, y)) = edges.last() {
            let last = inst.weight(x, y);
            let outside = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|e| !edges.contains(e));
            for (a, b) in outside {
                prop_assert!(inst.weight(a, b) <= last);
            }
        }
        prop_assert!(view.audit().within_budget());
    }

    #[test]
    fn metric_repair_is_metric_and_lowers(inst in instance()) {
        let repaired = metric_repair(&inst).unwrap();
        prop_assert!(repaired.is_metric());
        for x in 0..inst.n() {
            for y in 0..inst.n() {
                prop_assert!(repaired.weight(x, y) <= inst.weight(x, y));
            }
        }
        prop_assert_eq!(metric_repair(&repaired).unwrap().rows(), repaired.rows());
    }

    #[test]
    fn algorithms_return_perfect_matchings_within_budget(
        inst in instance(),
        alpha in any_alpha(),
        seed in any::<u64>(),
    ) {
        let (opt, min) = (opt_matching(&inst).1, min_matching(&inst).1);
        for alg in Algorithm::ALL {
            let a = if alg == Algorithm::Rsd { Alpha::ONE } else { alpha };
            let view = View::for_algorithm(alg, &inst, a);
            let m = alg.run(&view, &mut StreamRng::new(seed, 0)).unwrap();
            prop_assert!(m.is_perfect(), "{} at {}", alg, a);
            m.validate().unwrap();
            let w = m.weight(&inst).unwrap();
            prop_assert!(w <= opt + 1e-9 && w >= min - 1e-9);
            prop_assert!(view.audit().within_budget(), "{} at {}: {:?}", alg, a, view.audit());
        }
    }

    #[test]
    fn total_order_greedy_is_non_increasing(inst in instance(), alpha in any_alpha()) {
        let n = inst.n();
        let view = derive_total_order(&inst, alpha);
        let k = total_order_k(alpha, n);
        let m = greedy_total_order_k(&view, k).unwrap();
        prop_assert_eq!(m.len(), k);
        let weights: Vec<f64> = m.pairs().iter().map(|&(x, y)| inst.weight(x, y)).collect();
        prop_assert!(weights.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(view.audit().within_budget());
    }

    #[test]
    fn exact_and_float_oracles_agree(inst in instance()) {
        let exact = inst.map(|w| num_rational::Rational64::from_integer(w as i64)).unwrap();
        let opt = opt_matching(&exact).1;
        prop_assert_eq!(*opt.numer() as f64 / *opt.denom() as f64, opt_matching(&inst).1);
        let single = inst.map(|w| w as f32).unwrap();
        prop_assert_eq!(opt_matching(&single).1 as f64, opt_matching(&inst).1);
    }

    #[test]
    fn rsd_never_reads_past_one_sided_depth(inst in instance(), alpha in any_alpha(), seed in any::<u64>()) {
        let view = derive_one_sided(&inst, alpha);
        let m = ordmatch::algorithms::rsd_partial(&view, &mut StreamRng::new(seed, 1)).unwrap();
        prop_assert!(m.is_perfect());
        let audit = view.audit();
        prop_assert!(audit.within_budget());
        prop_assert_eq!(audit.budget, alpha.floor_mul(inst.n()));
    }
}

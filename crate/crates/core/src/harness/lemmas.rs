//! Randomised checks of the structural lemmas behind the guarantees.
//!
//! Every check reads the hidden weights, which the algorithms never do, and
//! reports failing instances in full so they can be replayed.

use serde::Serialize;

use crate::algorithms::{chain_walk, greedy_total_order_k, greedy_undominated_k};
use crate::alpha::Alpha;
use crate::generators::{gen_euclidean, gen_metric_closure};
use crate::instance::{Instance, InstanceDocument};
use crate::matching::Residual;
use crate::oracles::{opt_matching, rsd_round_profile};
use crate::rng::StreamRng;
use crate::scalar::Weight;
use crate::views::{derive_total_order, derive_two_sided};

/// Instances per sub-check.
pub const SUITE_INSTANCES: usize = 100;

/// Outcome of one check on one instance: `Err` carries a description of
/// the violated inequality.
pub type CheckOutcome = std::result::Result<(), String>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance: InstanceDocument,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub lemma: &'static str,
    pub property: &'static str,
    pub instances: usize,
    pub failures: Vec<Counterexample>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaLedger {
    pub seed: u64,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaLedger {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }

    pub fn check(&self, lemma: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.lemma == lemma)
    }
}

/// Undominated means at least as heavy as every residual edge at `x` or `y`.
fn is_undominated<T: Weight>(inst: &Instance<T>, residual: &Residual, x: usize, y: usize) -> bool {
    let w = inst.weight(x, y);
    residual.free_ys().into_iter().all(|b| inst.weight(x, b) <= w)
        && residual.free_xs().into_iter().all(|a| inst.weight(a, y) <= w)
}

/// A residual with a uniformly random number of uniformly random agents
/// already matched on each side (at least one agent left).
fn random_residual(n: usize, rng: &mut StreamRng) -> Residual {
    let mut residual = Residual::full(n);
    let removed = rng.index(n);
    let mut xs: Vec<usize> = (0..n).collect();
    let mut ys: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut xs);
    rng.shuffle(&mut ys);
    for (&x, &y) in xs.iter().zip(&ys).take(removed) {
        residual.remove(x, y);
    }
    residual
}

/// Every chain walk ends on an undominated edge, and every undominated edge
/// of the residual weighs at least a third of the heaviest residual edge.
pub fn check_undominated<T: Weight>(inst: &Instance<T>, rng: &mut StreamRng) -> CheckOutcome {
    let view = derive_two_sided(inst, Alpha::ONE);
    let residual = random_residual(inst.n(), rng);
    let (xs, ys) = (residual.free_xs(), residual.free_ys());
    let heaviest = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .map(|(x, y)| inst.weight(x, y))
        .fold(T::zero(), T::max_of);
    let three = T::from_count(3);
    for &x in &xs {
        let (cx, cy) = chain_walk(&view, x, &residual).map_err(|e| format!("chain walk from {x}: {e}"))?;
        if !is_undominated(inst, &residual, cx, cy) {
            return Err(format!("chain walk from {x} ended on dominated edge ({cx}, {cy})"));
        }
    }
    for &x in &xs {
        for &y in &ys {
            if is_undominated(inst, &residual, x, y) && !T::le_slack(heaviest, three * inst.weight(x, y)) {
                return Err(format!("undominated ({x}, {y}) weighs {} < {heaviest}/3", inst.weight(x, y)));
            }
        }
    }
    Ok(())
}

/// The greedy undominated `k`-matching with `k = γn` weighs at least
/// `γ/(3 − 2γ)` of OPT for `γ ≤ 3/4`, and at least half of OPT beyond,
/// for every `k` from 1 to n.
pub fn check_greedy_undominated<T: Weight>(inst: &Instance<T>, rng: &mut StreamRng) -> CheckOutcome {
    let n = inst.n();
    let view = derive_two_sided(inst, Alpha::ONE);
    let opt = opt_matching(inst).1;
    let nt = T::from_count(n);
    for k in 1..=n {
        let m = greedy_undominated_k(&view, k, rng).map_err(|e| e.to_string())?;
        let w = m.weight(inst).map_err(|e| e.to_string())?;
        let kt = T::from_count(k);
        // w ≥ (k/n)/(3 − 2k/n)·opt  ⇔  w·(3n − 2k) ≥ k·opt
        let (lhs, rhs) = if 4 * k <= 3 * n {
            (kt * opt, w * (T::from_count(3) * nt - T::from_count(2) * kt))
        } else {
            (opt, T::from_count(2) * w)
        };
        if !T::le_slack(lhs, rhs) {
            return Err(format!("k = {k}, n = {n}: greedy weight {w} too far below opt {opt}"));
        }
    }
    Ok(())
}

/// For a random pair of equal-size node subsets `T`, and `M = OPT`:
/// `|T|·w(M) ≤ (2 + n/|T|)·w(T×T) + w(T_X × (Y∖T_Y)) + w((X∖T_X) × T_Y)`.
pub fn check_upper_bound<T: Weight>(inst: &Instance<T>, rng: &mut StreamRng) -> CheckOutcome {
    let n = inst.n();
    let opt = opt_matching(inst).1;
    let size = 1 + rng.index(n);
    let all: Vec<usize> = (0..n).collect();
    let (tx, _) = rng.split_random(&all, size);
    let (ty, _) = rng.split_random(&all, size);
    let mut in_tx = vec![false; n];
    let mut in_ty = vec![false; n];
    tx.iter().for_each(|&x| in_tx[x] = true);
    ty.iter().for_each(|&y| in_ty[y] = true);

    let (mut inner, mut cross) = (T::zero(), T::zero());
    for (x, &row_in) in in_tx.iter().enumerate() {
        for (y, &col_in) in in_ty.iter().enumerate() {
            let w = inst.weight(x, y);
            match (row_in, col_in) {
                (true, true) => inner = inner + w,
                (true, false) | (false, true) => cross = cross + w,
                (false, false) => {}
            }
        }
    }
    // multiply through by |T| to stay exact
    let st = T::from_count(size);
    let lhs = st * st * opt;
    let rhs = (T::from_count(2) * st + T::from_count(n)) * inner + st * cross;
    if T::le_slack(lhs, rhs) {
        Ok(())
    } else {
        Err(format!("|T| = {size}, T_X = {tx:?}, T_Y = {ty:?}: {lhs} > {rhs}"))
    }
}

/// Greedy over the full edge order with `k = γn ≤ n/2` weighs at least
/// `γ·OPT`, for every such `k`.
pub fn check_greedy_total_order<T: Weight>(inst: &Instance<T>) -> CheckOutcome {
    let n = inst.n();
    let view = derive_total_order(inst, Alpha::ONE);
    let opt = opt_matching(inst).1;
    for k in 1..=n / 2 {
        let w = greedy_total_order_k(&view, k).and_then(|m| m.weight(inst)).map_err(|e| e.to_string())?;
        if !T::le_slack(T::from_count(k) * opt, T::from_count(n) * w) {
            return Err(format!("k = {k}: greedy weight {w} below {k}/{n} of opt {opt}"));
        }
    }
    Ok(())
}

/// The expected weight chosen in each RSD round up to `l` is at least the
/// expected average edge weight left after `l` rounds.
pub fn check_round_average<T: Weight>(inst: &Instance<T>) -> CheckOutcome {
    let profile = rsd_round_profile(inst).map_err(|e| e.to_string())?;
    for (l, &avg) in profile.residual_average.iter().enumerate() {
        for (i, &chosen) in profile.chosen.iter().enumerate().take(l) {
            if !T::le_slack(avg, chosen) {
                return Err(format!("round {} picks {chosen} on average, below {avg} after {l} rounds", i + 1));
            }
        }
    }
    Ok(())
}

/// Alternates Euclidean and metric-closure instances of size `lo..=hi`.
fn suite_instance(i: usize, lo: usize, hi: usize, rng: &mut StreamRng) -> Instance<f64> {
    let n = lo + rng.index(hi - lo + 1);
    let seed = rng.next_u64();
    let inst = if i.is_multiple_of(2) { gen_euclidean(n, 2, seed) } else { gen_metric_closure(n, seed) };
    inst.expect("suite sizes are always valid")
}

fn run_check(
    lemma: &'static str,
    property: &'static str,
    seed: u64,
    stream: u64,
    (lo, hi): (usize, usize),
    check: impl Fn(&Instance<f64>, &mut StreamRng) -> CheckOutcome,
) -> LemmaCheck {
    let mut rng = StreamRng::new(seed, stream);
    let failures = (0..SUITE_INSTANCES)
        .filter_map(|i| {
            let inst = suite_instance(i, lo, hi, &mut rng);
            check(&inst, &mut rng).err().map(|detail| Counterexample { instance: inst.to_document(), detail })
        })
        .collect();
    LemmaCheck { lemma, property, instances: SUITE_INSTANCES, failures }
}

/// Runs all five checks on [`SUITE_INSTANCES`] random metric instances
/// each. Deterministic in `seed`.
pub fn lemma_property_suite(seed: u64) -> LemmaLedger {
    let checks = vec![
        run_check(
            "undominated-third",
            "chain walks end on undominated edges; undominated edges weigh at least max/3",
            seed,
            0,
            (2, 10),
            check_undominated,
        ),
        run_check(
            "greedy-undominated",
            "greedy undominated k-matching weighs at least min(gamma/(3 - 2 gamma), 1/2) of opt",
            seed,
            1,
            (2, 10),
            check_greedy_undominated,
        ),
        run_check(
            "upper-bound",
            "|T| w(OPT) <= (2 + n/|T|) w(T x T) + cross weight",
            seed,
            2,
            (2, 10),
            check_upper_bound,
        ),
        run_check(
            "greedy-total-order",
            "greedy k-matching over the edge order weighs at least gamma of opt for gamma <= 1/2",
            seed,
            3,
            (2, 10),
            |inst, _| check_greedy_total_order(inst),
        ),
        run_check(
            "round-average",
            "expected RSD round weight is at least the expected residual average",
            seed,
            4,
            (2, 6),
            |inst, _| check_round_average(inst),
        ),
    ];
    LemmaLedger { seed, checks }
}

//! Exact expectations by enumeration over residual states.
//!
//! A residual state after some RSD rounds is the pair (remaining X,
//! remaining Y) of bitmasks. Both are needed: which Y agents are gone
//! depends on who dictated, not only on how many rounds ran.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::scalar::Weight;

pub const RSD_ENUMERATION_LIMIT: usize = 12;
pub const BRUTE_FORCE_LIMIT: usize = 10;

type State = (u32, u32);

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

/// `x`'s favourite among the Y agents in `ys`: heaviest, lowest index on ties.
fn favourite<T: Weight>(inst: &Instance<T>, x: usize, ys: u32) -> usize {
    let mut best: Option<(usize, T)> = None;
    for y in members(ys) {
        let w = inst.weight(x, y);
        if best.is_none_or(|(_, bw)| w > bw) {
            best = Some((y, w));
        }
    }
    best.expect("non-empty residual").0
}

fn residual_sum<T: Weight>(inst: &Instance<T>, (xs, ys): State) -> T {
    let mut s = T::zero();
    for x in members(xs) {
        for y in members(ys) {
            s = s + inst.weight(x, y);
        }
    }
    s
}

/// Expected weight of a uniformly random perfect matching: `Σw / n`.
pub fn exact_random_expectation<T: Weight>(inst: &Instance<T>) -> T {
    inst.total_weight() / T::from_count(inst.n())
}

/// Exact expected weight of RSD run for `rounds` rounds (all of them when
/// `None`) followed by a uniformly random completion.
///
/// Uses the one-round recursion: the expectation on a residual is the
/// average over its X agents of (their favourite edge + the expectation on
/// what remains), memoised on the residual state.
pub fn exact_rsd_expectation<T: Weight>(inst: &Instance<T>, rounds: Option<usize>) -> Result<T> {
    let n = inst.n();
    if n > RSD_ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: RSD_ENUMERATION_LIMIT });
    }
    let rounds = rounds.unwrap_or(n).min(n);
    let mut memo = HashMap::new();
    Ok(rsd_value(inst, (full_mask(n), full_mask(n)), n - rounds, &mut memo))
}

fn rsd_value<T: Weight>(inst: &Instance<T>, state: State, stop_at: usize, memo: &mut HashMap<State, T>) -> T {
    let size = state.0.count_ones() as usize;
    if size == 0 {
        return T::zero();
    }
    if size <= stop_at {
        return residual_sum(inst, state) / T::from_count(size);
    }
    if let Some(&v) = memo.get(&state) {
        return v;
    }
    let (xs, ys) = state;
    let mut total = T::zero();
    for x in members(xs) {
        let y = favourite(inst, x, ys);
        let rest = rsd_value(inst, (xs & !(1 << x), ys & !(1 << y)), stop_at, memo);
        total = total + inst.weight(x, y) + rest;
    }
    let v = total / T::from_count(size);
    memo.insert(state, v);
    v
}

/// Per-round statistics of full RSD.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundProfile<T> {
    /// Expected weight of the edge chosen in round `i` (1-based), for
    /// `i = 1..=n`.
    pub chosen: Vec<T>,
    /// Expected average edge weight of the residual left after `l` rounds,
    /// for `l = 0..n`.
    pub residual_average: Vec<T>,
}

/// Forward enumeration of the RSD state distribution, round by round.
pub fn rsd_round_profile<T: Weight>(inst: &Instance<T>) -> Result<RoundProfile<T>> {
    let n = inst.n();
    if n > RSD_ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: RSD_ENUMERATION_LIMIT });
    }
    let mut layer: HashMap<State, T> = HashMap::new();
    layer.insert((full_mask(n), full_mask(n)), T::one());
    let mut chosen = Vec::with_capacity(n);
    let mut residual_average = Vec::with_capacity(n);
    for round in 0..n {
        let size = n - round;
        let size_t = T::from_count(size);
        let mut avg = T::zero();
        let mut edge = T::zero();
        let mut next: HashMap<State, T> = HashMap::new();
        let mut states: Vec<_> = layer.into_iter().collect();
        states.sort_unstable_by_key(|&(s, _)| s);
        for ((xs, ys), p) in states {
            avg = avg + p * residual_sum(inst, (xs, ys)) / (size_t * size_t);
            let share = p / size_t;
            for x in members(xs) {
                let y = favourite(inst, x, ys);
                edge = edge + share * inst.weight(x, y);
                let key = (xs & !(1 << x), ys & !(1 << y));
                let slot = next.entry(key).or_insert_with(T::zero);
                *slot = *slot + share;
            }
        }
        residual_average.push(avg);
        chosen.push(edge);
        layer = next;
    }
    Ok(RoundProfile { chosen, residual_average })
}

fn brute_force_extreme<T: Weight>(inst: &Instance<T>, want_max: bool) -> Result<T> {
    let n = inst.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    // Heap's algorithm over assignments y_of[x]
    let mut perm: Vec<usize> = (0..n).collect();
    let weigh = |p: &[usize]| p.iter().enumerate().fold(T::zero(), |acc, (x, &y)| acc + inst.weight(x, y));
    let mut best = weigh(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let w = weigh(&perm);
            if (want_max && w > best) || (!want_max && w < best) {
                best = w;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Maximum perfect-matching weight over all `n!` assignments.
pub fn brute_force_opt<T: Weight>(inst: &Instance<T>) -> Result<T> {
    brute_force_extreme(inst, true)
}

/// Minimum perfect-matching weight over all `n!` assignments.
pub fn brute_force_min<T: Weight>(inst: &Instance<T>) -> Result<T> {
    brute_force_extreme(inst, false)
}

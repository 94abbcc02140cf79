//! Ordinal, budget-limited views of an instance.
//!
//! Algorithms receive one of these views and nothing else. A view stores
//! only the part of the ordinal information the budget grants (the top
//! `⌊α·n⌋` entries of each preference list, or the `⌊α·n²⌋` heaviest edges
//! in order) and never exposes weights. Every query is recorded in an
//! audit so the harness can prove afterwards what was read.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};

use serde::Serialize;

use crate::alpha::Alpha;
use crate::error::BudgetViolation;
use crate::instance::Instance;
use crate::scalar::Weight;

/// Descending weight, ties broken toward the lower index.
fn rank_order<T: Weight>(wa: T, a: usize, wb: T, b: usize) -> Ordering {
    wb.partial_cmp(&wa).expect("weights are never NaN").then(a.cmp(&b))
}

/// Monotone per-agent record of the deepest rank read, plus a count of
/// refused queries. Safe to update from concurrent trials.
#[derive(Debug)]
struct RankAudit {
    // rank + 1; zero means never queried
    deepest: Vec<AtomicUsize>,
    violations: AtomicU64,
}

impl RankAudit {
    fn new(agents: usize) -> Self {
        RankAudit { deepest: (0..agents).map(|_| AtomicUsize::new(0)).collect(), violations: AtomicU64::new(0) }
    }

    fn record(&self, agent: usize, rank: usize) {
        self.deepest[agent].fetch_max(rank + 1, AtomicOrdering::Relaxed);
    }

    fn violation(&self) {
        self.violations.fetch_add(1, AtomicOrdering::Relaxed);
    }

    fn deepest(&self) -> Option<usize> {
        self.deepest.iter().map(|d| d.load(AtomicOrdering::Relaxed)).max().and_then(|d| d.checked_sub(1))
    }

    fn deepest_for(&self, agent: usize) -> Option<usize> {
        self.deepest[agent].load(AtomicOrdering::Relaxed).checked_sub(1)
    }

    fn violations(&self) -> u64 {
        self.violations.load(AtomicOrdering::Relaxed)
    }

    fn reset(&self) {
        for d in &self.deepest {
            d.store(0, AtomicOrdering::Relaxed);
        }
        self.violations.store(0, AtomicOrdering::Relaxed);
    }
}

/// Truncated strict preference lists for one side of the market.
#[derive(Debug)]
pub struct PreferenceLists {
    depth: usize,
    lists: Vec<Vec<usize>>,
    audit: RankAudit,
}

impl PreferenceLists {
    fn derive<T: Weight>(n: usize, depth: usize, weight: impl Fn(usize, usize) -> T) -> Self {
        let lists = (0..n)
            .map(|agent| {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&a, &b| rank_order(weight(agent, a), a, weight(agent, b), b));
                order.truncate(depth);
                order
            })
            .collect();
        PreferenceLists { depth, lists, audit: RankAudit::new(n) }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The agent at `rank` in `agent`'s list (0 = favourite).
    pub fn at(&self, agent: usize, rank: usize) -> Result<usize, BudgetViolation> {
        if rank >= self.depth {
            self.audit.violation();
            return Err(BudgetViolation::Rank { rank, depth: self.depth });
        }
        self.audit.record(agent, rank);
        Ok(self.lists[agent][rank])
    }

    /// `agent`'s favourite among the partners for which `available` holds.
    /// Reads ranks in order and stops at the first available partner.
    pub fn top_available(&self, agent: usize, available: impl Fn(usize) -> bool) -> Result<usize, BudgetViolation> {
        for rank in 0..self.depth {
            let partner = self.lists[agent][rank];
            if available(partner) {
                self.audit.record(agent, rank);
                return Ok(partner);
            }
        }
        if self.depth > 0 {
            self.audit.record(agent, self.depth - 1);
        }
        self.audit.violation();
        Err(BudgetViolation::Rank { rank: self.depth, depth: self.depth })
    }

    pub fn deepest_rank_read(&self, agent: usize) -> Option<usize> {
        self.audit.deepest_for(agent)
    }

    fn report(&self) -> (Option<usize>, u64) {
        (self.audit.deepest(), self.audit.violations())
    }
}

/// What a view was asked for, relative to what it may reveal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// Preference depth, or ranked-prefix length for total-order views.
    pub budget: usize,
    /// Deepest rank (or prefix position) read, 0-based.
    pub deepest_read: Option<usize>,
    /// Queries refused for exceeding the budget.
    pub violations: u64,
}

impl AuditReport {
    pub fn within_budget(&self) -> bool {
        self.violations == 0 && self.deepest_read.is_none_or(|d| d < self.budget)
    }

    pub fn merge(self, other: AuditReport) -> AuditReport {
        AuditReport {
            budget: self.budget.max(other.budget),
            deepest_read: self.deepest_read.max(other.deepest_read),
            violations: self.violations + other.violations,
        }
    }
}

/// Preference lists of X over Y only.
#[derive(Debug)]
pub struct OneSidedView {
    n: usize,
    alpha: Alpha,
    x_prefs: PreferenceLists,
}

impl OneSidedView {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn depth(&self) -> usize {
        self.x_prefs.depth
    }

    pub fn x_prefs(&self) -> &PreferenceLists {
        &self.x_prefs
    }

    pub fn audit(&self) -> AuditReport {
        let (deepest_read, violations) = self.x_prefs.report();
        AuditReport { budget: self.depth(), deepest_read, violations }
    }

    pub fn reset_audit(&self) {
        self.x_prefs.audit.reset();
    }
}

/// Preference lists for both sides.
#[derive(Debug)]
pub struct TwoSidedView {
    n: usize,
    alpha: Alpha,
    x_prefs: PreferenceLists,
    y_prefs: PreferenceLists,
}

impl TwoSidedView {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn depth(&self) -> usize {
        self.x_prefs.depth
    }

    pub fn x_prefs(&self) -> &PreferenceLists {
        &self.x_prefs
    }

    pub fn y_prefs(&self) -> &PreferenceLists {
        &self.y_prefs
    }

    pub fn audit(&self) -> AuditReport {
        let (dx, vx) = self.x_prefs.report();
        let (dy, vy) = self.y_prefs.report();
        AuditReport { budget: self.depth(), deepest_read: dx.max(dy), violations: vx + vy }
    }

    pub fn reset_audit(&self) {
        self.x_prefs.audit.reset();
        self.y_prefs.audit.reset();
    }
}

/// The heaviest `⌊α·n²⌋` edges in descending order, ties broken by
/// `(x, y)` lexicographically.
#[derive(Debug)]
pub struct TotalOrderView {
    n: usize,
    alpha: Alpha,
    prefix: Vec<(usize, usize)>,
    // positions consumed; the deepest read is consumed - 1
    consumed: AtomicUsize,
    violations: AtomicU64,
}

impl TotalOrderView {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    /// The edge at `position` in the ranked prefix.
    pub fn edge_at(&self, position: usize) -> Result<(usize, usize), BudgetViolation> {
        match self.prefix.get(position) {
            Some(&e) => {
                self.consumed.fetch_max(position + 1, AtomicOrdering::Relaxed);
                Ok(e)
            }
            None => {
                self.violations.fetch_add(1, AtomicOrdering::Relaxed);
                Err(BudgetViolation::Prefix { position, len: self.prefix.len() })
            }
        }
    }

    pub fn audit(&self) -> AuditReport {
        AuditReport {
            budget: self.prefix.len(),
            deepest_read: self.consumed.load(AtomicOrdering::Relaxed).checked_sub(1),
            violations: self.violations.load(AtomicOrdering::Relaxed),
        }
    }

    pub fn reset_audit(&self) {
        self.consumed.store(0, AtomicOrdering::Relaxed);
        self.violations.store(0, AtomicOrdering::Relaxed);
    }
}

pub fn derive_one_sided<T: Weight>(inst: &Instance<T>, alpha: Alpha) -> OneSidedView {
    let n = inst.n();
    let depth = alpha.floor_mul(n);
    OneSidedView { n, alpha, x_prefs: PreferenceLists::derive(n, depth, |x, y| inst.weight(x, y)) }
}

pub fn derive_two_sided<T: Weight>(inst: &Instance<T>, alpha: Alpha) -> TwoSidedView {
    let n = inst.n();
    let depth = alpha.floor_mul(n);
    TwoSidedView {
        n,
        alpha,
        x_prefs: PreferenceLists::derive(n, depth, |x, y| inst.weight(x, y)),
        y_prefs: PreferenceLists::derive(n, depth, |y, x| inst.weight(x, y)),
    }
}

pub fn derive_total_order<T: Weight>(inst: &Instance<T>, alpha: Alpha) -> TotalOrderView {
    let n = inst.n();
    let mut edges: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    edges.sort_by(|&a, &b| {
        inst.weight(b.0, b.1).partial_cmp(&inst.weight(a.0, a.1)).expect("weights are never NaN").then(a.cmp(&b))
    });
    edges.truncate(alpha.floor_mul(n * n));
    TotalOrderView { n, alpha, prefix: edges, consumed: AtomicUsize::new(0), violations: AtomicU64::new(0) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag() -> Instance<f64> {
        Instance::new(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap()
    }

    fn list(p: &PreferenceLists, agent: usize) -> Vec<usize> {
        (0..p.depth()).map(|r| p.at(agent, r).unwrap()).collect()
    }

    #[test]
    fn full_one_sided_prefs() {
        let v = derive_one_sided(&diag(), Alpha::ONE);
        assert_eq!(v.depth(), 2);
        assert_eq!(list(v.x_prefs(), 0), vec![0, 1]);
        assert_eq!(list(v.x_prefs(), 1), vec![1, 0]);
    }

    #[test]
    fn truncated_prefs() {
        let v = derive_one_sided(&diag(), Alpha::HALF);
        assert_eq!(v.depth(), 1);
        assert_eq!(list(v.x_prefs(), 0), vec![0]);
        assert_eq!(list(v.x_prefs(), 1), vec![1]);
        assert!(v.audit().within_budget());
        assert_eq!(v.x_prefs().at(0, 1), Err(BudgetViolation::Rank { rank: 1, depth: 1 }));
        assert_eq!(v.audit().violations, 1);
        assert!(!v.audit().within_budget());
        v.reset_audit();
        assert_eq!(v.audit(), AuditReport { budget: 1, deepest_read: None, violations: 0 });
    }

    #[test]
    fn ties_follow_index_order() {
        let inst = Instance::new(vec![vec![1.0; 3]; 3]).unwrap();
        let v = derive_two_sided(&inst, Alpha::ONE);
        for a in 0..3 {
            assert_eq!(list(v.x_prefs(), a), vec![0, 1, 2]);
            assert_eq!(list(v.y_prefs(), a), vec![0, 1, 2]);
        }
    }

    #[test]
    fn y_side_ranks_columns() {
        let inst = Instance::new(vec![vec![1.0, 5.0], vec![3.0, 4.0]]).unwrap();
        let v = derive_two_sided(&inst, Alpha::ONE);
        assert_eq!(list(v.y_prefs(), 0), vec![1, 0]);
        assert_eq!(list(v.y_prefs(), 1), vec![0, 1]);
    }

    #[test]
    fn top_available_skips_taken_and_audits() {
        let v = derive_one_sided(&diag(), Alpha::ONE);
        assert_eq!(v.x_prefs().top_available(0, |y| y != 0), Ok(1));
        assert_eq!(v.x_prefs().deepest_rank_read(0), Some(1));
        assert_eq!(v.x_prefs().deepest_rank_read(1), None);

        let half = derive_one_sided(&diag(), Alpha::HALF);
        assert!(half.x_prefs().top_available(0, |y| y != 0).is_err());
        assert_eq!(half.audit().violations, 1);
    }

    #[test]
    fn total_order_examples() {
        let full = derive_total_order(&diag(), Alpha::ONE);
        let edges: Vec<_> = (0..full.len()).map(|p| full.edge_at(p).unwrap()).collect();
        assert_eq!(edges, vec![(0, 0), (1, 1), (0, 1), (1, 0)]);
        assert!(derive_total_order(&diag(), Alpha::ZERO).is_empty());
        let half = derive_total_order(&diag(), Alpha::HALF);
        assert_eq!(half.len(), 2);
        assert_eq!(half.edge_at(1), Ok((1, 1)));
        assert_eq!(half.audit().deepest_read, Some(1));
        assert!(half.edge_at(2).is_err());
        assert_eq!(half.audit().violations, 1);
    }
}

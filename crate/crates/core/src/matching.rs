use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::scalar::Weight;

/// A set of vertex-disjoint `(x, y)` pairs on an instance of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { n, pairs: Vec::with_capacity(n) }
    }

    /// Builds a matching, rejecting out-of-range or repeated endpoints.
    pub fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let m = Matching { n, pairs };
        m.validate()?;
        Ok(m)
    }

    /// `y_of[x]` for every x; the permutation form of a perfect matching.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        Matching { n: assignment.len(), pairs: assignment.iter().copied().enumerate().collect() }
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen_x = vec![false; self.n];
        let mut seen_y = vec![false; self.n];
        for &(x, y) in &self.pairs {
            for idx in [x, y] {
                if idx >= self.n {
                    return Err(Error::IndexOutOfRange { index: idx, n: self.n });
                }
            }
            if std::mem::replace(&mut seen_x[x], true) {
                return Err(Error::DuplicateEndpoint { side: 'x', index: x });
            }
            if std::mem::replace(&mut seen_y[y], true) {
                return Err(Error::DuplicateEndpoint { side: 'y', index: y });
            }
        }
        Ok(())
    }

    pub(crate) fn push(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.n && y < self.n);
        self.pairs.push((x, y));
    }

    pub(crate) fn extend(&mut self, other: impl IntoIterator<Item = (usize, usize)>) {
        self.pairs.extend(other);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.pairs.len() == self.n && self.validate().is_ok()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Pairs sorted by x, for stable output.
    pub fn sorted_pairs(&self) -> Vec<(usize, usize)> {
        let mut p = self.pairs.clone();
        p.sort_unstable();
        p
    }

    pub fn weight<T: Weight>(&self, inst: &Instance<T>) -> Result<T> {
        matching_weight(inst, self)
    }

    pub fn to_document<T: Weight>(&self, inst: &Instance<T>) -> Result<MatchingDocument> {
        let weight = self.weight(inst)?.to_f64_lossy();
        Ok(MatchingDocument { pairs: self.sorted_pairs().into_iter().map(|(x, y)| [x, y]).collect(), weight })
    }
}

/// `{"pairs": [[x, y], ...], "weight": number}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatchingDocument {
    pub pairs: Vec<[usize; 2]>,
    pub weight: f64,
}

/// Total weight of `m` on `inst`.
pub fn matching_weight<T: Weight>(inst: &Instance<T>, m: &Matching) -> Result<T> {
    if m.n != inst.n() {
        return Err(Error::Invalid(format!("matching is for n = {}, instance has n = {}", m.n, inst.n())));
    }
    m.validate()?;
    Ok(crate::scalar::sum_weights(m.pairs.iter().map(|&(x, y)| inst.weight(x, y))))
}

/// Which agents are still unmatched while an algorithm builds a matching.
#[derive(Debug, Clone)]
pub struct Residual {
    x_free: Vec<bool>,
    y_free: Vec<bool>,
    remaining: usize,
}

impl Residual {
    pub fn full(n: usize) -> Self {
        Residual { x_free: vec![true; n], y_free: vec![true; n], remaining: n }
    }

    /// Residual left after removing every endpoint of `m`.
    pub fn after(m: &Matching) -> Self {
        let mut r = Residual::full(m.n());
        for &(x, y) in m.pairs() {
            r.remove(x, y);
        }
        r
    }

    pub fn n(&self) -> usize {
        self.x_free.len()
    }

    /// Unmatched agents per side.
    pub fn remaining(&self) -> usize {
        self.remaining
    }

    #[inline]
    pub fn x_free(&self, x: usize) -> bool {
        self.x_free[x]
    }

    #[inline]
    pub fn y_free(&self, y: usize) -> bool {
        self.y_free[y]
    }

    pub fn free_xs(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.x_free[x]).collect()
    }

    pub fn free_ys(&self) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.y_free[y]).collect()
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        assert!(self.x_free[x] && self.y_free[y], "edge ({x}, {y}) is not in the residual");
        self.x_free[x] = false;
        self.y_free[y] = false;
        self.remaining -= 1;
    }
}

//! Complete bipartite instances and their JSON document form.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Weight;

/// A complete bipartite graph `X × Y` with `|X| = |Y| = n`, stored as a
/// row-major weight matrix: entry `(x, y)` is the utility of matching `x`
/// with `y`.
#[derive(Debug, Clone)]
pub struct Instance<T> {
    n: usize,
    weights: Vec<T>,
    name: Option<String>,
    metric: OnceLock<bool>,
}

impl<T: Weight> Instance<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyInstance);
        }
        let mut weights = Vec::with_capacity(n * n);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquare { row: x, len: row.len(), expected: n });
            }
            for (y, w) in row.into_iter().enumerate() {
                if !w.is_finite_weight() {
                    return Err(Error::NonFiniteWeight { x, y });
                }
                if w < T::zero() {
                    return Err(Error::NegativeWeight { x, y, value: w.to_f64_lossy() });
                }
                weights.push(w);
            }
        }
        Ok(Instance { n, weights, name: None, metric: OnceLock::new() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        Self::new((0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, x: usize, y: usize) -> T {
        self.weights[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[T] {
        &self.weights[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn total_weight(&self) -> T {
        crate::scalar::sum_weights(self.weights.iter().copied())
    }

    pub fn max_weight(&self) -> T {
        self.weights.iter().copied().fold(self.weights[0], T::max_of)
    }

    pub fn min_weight(&self) -> T {
        self.weights.iter().copied().fold(self.weights[0], T::min_of)
    }

    /// Whether every quadruple satisfies the bipartite three-hop inequality
    /// `w(x1,y1) <= w(x1,y2) + w(x2,y1) + w(x2,y2)`. Computed once, cached.
    pub fn is_metric(&self) -> bool {
        *self.metric.get_or_init(|| check_metric(self))
    }

    /// `max / min` over all weights; `None` when some weight is zero.
    pub fn beta_ratio(&self) -> Option<f64> {
        let min = self.min_weight();
        if min <= T::zero() {
            return None;
        }
        Some(self.max_weight().to_f64_lossy() / min.to_f64_lossy())
    }

    /// Whether `max / min <= beta` holds (no slack for exact scalars).
    pub fn satisfies_beta(&self, beta: f64) -> bool {
        let min = self.min_weight();
        if min <= T::zero() {
            return false;
        }
        T::le_slack(self.max_weight(), T::from_f64_lossy(beta) * min)
    }

    pub fn map<U: Weight>(&self, f: impl Fn(T) -> U) -> Result<Instance<U>> {
        let mut out = Instance::new((0..self.n).map(|x| self.row(x).iter().map(|&w| f(w)).collect()).collect())?;
        out.name = self.name.clone();
        Ok(out)
    }

    pub fn to_f64(&self) -> Instance<f64> {
        self.map(|w| w.to_f64_lossy()).expect("finite non-negative weights stay valid")
    }

    pub fn to_document(&self) -> InstanceDocument {
        InstanceDocument {
            n: self.n,
            weights: (0..self.n).map(|x| self.row(x).iter().map(|w| w.to_f64_lossy()).collect()).collect(),
            name: self.name.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("instance documents always serialize")
    }
}

/// O(n⁴) exhaustive check of the bipartite three-hop inequality, with the
/// scalar type's rounding slack.
pub fn check_metric<T: Weight>(inst: &Instance<T>) -> bool {
    let n = inst.n();
    for x1 in 0..n {
        for y1 in 0..n {
            let w = inst.weight(x1, y1);
            for x2 in 0..n {
                let w21 = inst.weight(x2, y1);
                for y2 in 0..n {
                    let bound = inst.weight(x1, y2) + w21 + inst.weight(x2, y2);
                    if !T::le_slack(w, bound) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Canonical on-disk form: `{"n": int, "weights": [[number; n]; n], "name"?: string}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InstanceDocument {
    pub n: usize,
    pub weights: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl InstanceDocument {
    pub fn into_instance(self) -> Result<Instance<f64>> {
        if self.weights.len() != self.n {
            return Err(Error::RowCount { declared: self.n, rows: self.weights.len() });
        }
        let inst = Instance::new(self.weights)?;
        Ok(match self.name {
            Some(name) => inst.with_name(name),
            None => inst,
        })
    }
}

pub fn load_instance(bytes: &[u8]) -> Result<Instance<f64>> {
    let doc: InstanceDocument = serde_json::from_slice(bytes)?;
    doc.into_instance()
}

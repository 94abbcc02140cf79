//! Instance families: random metric instances for bound checks, and the
//! fixed adversarial constructions (the weight-3 corner instance and the
//! two lower-bound families).

use std::fmt;
use std::str::FromStr;

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::instance::{check_metric, Instance};
use crate::rng::StreamRng;
use crate::scalar::Weight;
use crate::views::{derive_two_sided, TwoSidedView};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    Euclidean,
    MetricClosure,
    Figure2,
    LbTwoSided,
    LbOneSided,
    BetaBounded,
}

impl GenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Euclidean => "euclidean",
            GenKind::MetricClosure => "metric-closure",
            GenKind::Figure2 => "figure2",
            GenKind::LbTwoSided => "lb-two-sided",
            GenKind::LbOneSided => "lb-one-sided",
            GenKind::BetaBounded => "beta-bounded",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            GenKind::Euclidean,
            GenKind::MetricClosure,
            GenKind::Figure2,
            GenKind::LbTwoSided,
            GenKind::LbOneSided,
            GenKind::BetaBounded,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| Error::Invalid(format!("unknown instance kind '{s}'")))
    }
}

/// The two weightings of the 2×2 two-sided lower-bound pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbVariant {
    W1,
    W2,
}

/// A fully specified instance recipe. Generation is deterministic in it.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    pub dim: usize,
    pub epsilon: f64,
    pub nu: f64,
    pub beta: f64,
    pub variant: LbVariant,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec { kind, n, seed, dim: 2, epsilon: 1e-3, nu: 0.5, beta: 2.0, variant: LbVariant::W1 }
    }

    pub fn euclidean(n: usize, dim: usize, seed: u64) -> Self {
        GenSpec { dim, ..Self::new(GenKind::Euclidean, n, seed) }
    }

    pub fn metric_closure(n: usize, seed: u64) -> Self {
        Self::new(GenKind::MetricClosure, n, seed)
    }

    pub fn beta_bounded(n: usize, beta: f64, seed: u64) -> Self {
        GenSpec { beta, ..Self::new(GenKind::BetaBounded, n, seed) }
    }

    pub fn generate(&self) -> Result<Instance<f64>> {
        let inst = match self.kind {
            GenKind::Euclidean => gen_euclidean(self.n, self.dim, self.seed)?,
            GenKind::MetricClosure => gen_metric_closure(self.n, self.seed)?,
            GenKind::Figure2 => gen_figure2(self.n)?,
            GenKind::LbTwoSided => gen_lb_two_sided(self.epsilon, self.variant)?,
            GenKind::LbOneSided => gen_lb_one_sided(self.n, self.nu)?,
            GenKind::BetaBounded => gen_beta_bounded(self.n, self.beta, self.seed)?,
        };
        Ok(inst.with_name(self.label()))
    }

    pub fn label(&self) -> String {
        match self.kind {
            GenKind::Euclidean => format!("euclidean-n{}-d{}-s{}", self.n, self.dim, self.seed),
            GenKind::MetricClosure => format!("metric-closure-n{}-s{}", self.n, self.seed),
            GenKind::Figure2 => format!("figure2-n{}", self.n),
            GenKind::LbTwoSided => format!("lb-two-sided-{:?}-eps{}", self.variant, self.epsilon),
            GenKind::LbOneSided => format!("lb-one-sided-n{}-nu{}", self.n, self.nu),
            GenKind::BetaBounded => format!("beta-bounded-n{}-b{}-s{}", self.n, self.beta, self.seed),
        }
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Generator(msg.into()))
    }
}

/// Euclidean distances between the two point sets.
pub fn euclidean_from_points(xs: &[Vec<f64>], ys: &[Vec<f64>]) -> Result<Instance<f64>> {
    require(xs.len() == ys.len(), "point sets must have equal size")?;
    Instance::from_fn(xs.len(), |i, j| xs[i].iter().zip(&ys[j]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
}

/// `2n` i.i.d. uniform points in `[0,1]^dim`; weights are X–Y distances.
pub fn gen_euclidean(n: usize, dim: usize, seed: u64) -> Result<Instance<f64>> {
    require(n >= 1, "n must be at least 1")?;
    require(dim >= 1, "dim must be at least 1")?;
    let mut rng = StreamRng::new(seed, 0);
    let mut point = |_| (0..dim).map(|_| rng.unit()).collect::<Vec<f64>>();
    let xs: Vec<_> = (0..n).map(&mut point).collect();
    let ys: Vec<_> = (0..n).map(&mut point).collect();
    euclidean_from_points(&xs, &ys)
}

/// One weight-3 edge `(x0, y0)`, every other edge weight 1.
pub fn gen_figure2<T: Weight>(n: usize) -> Result<Instance<T>> {
    require(n >= 2, "figure2 needs n >= 2")?;
    let three = T::from_u8(3).expect("small integers are representable");
    Instance::from_fn(n, |x, y| if x == 0 && y == 0 { three } else { T::one() })
}

/// The 2×2 pair with identical two-sided preferences and different optima.
///
/// Agents `a, b` are `x0, x1`; `c, d` are `y0, y1`.
pub fn gen_lb_two_sided(epsilon: f64, variant: LbVariant) -> Result<Instance<f64>> {
    require(epsilon > 0.0 && epsilon < 0.1, "epsilon must lie in (0, 0.1)")?;
    let rows = |v| match v {
        LbVariant::W1 => vec![vec![1.0 + epsilon, 1.0], vec![3.0, 1.0 + epsilon]],
        LbVariant::W2 => vec![vec![1.0 - epsilon, epsilon], vec![1.0, 1.0 - epsilon]],
    };
    let w1 = Instance::new(rows(LbVariant::W1))?;
    let w2 = Instance::new(rows(LbVariant::W2))?;
    assert!(
        same_preferences(&derive_two_sided(&w1, Alpha::ONE), &derive_two_sided(&w2, Alpha::ONE)),
        "W1 and W2 must induce the same two-sided preferences"
    );
    Ok(match variant {
        LbVariant::W1 => w1,
        LbVariant::W2 => w2,
    })
}

/// Whether two full two-sided views hold identical preference lists.
pub fn same_preferences(a: &TwoSidedView, b: &TwoSidedView) -> bool {
    if a.n() != b.n() || a.depth() != b.depth() {
        return false;
    }
    (0..a.n()).all(|agent| {
        (0..a.depth()).all(|r| {
            a.x_prefs().at(agent, r) == b.x_prefs().at(agent, r) && a.y_prefs().at(agent, r) == b.y_prefs().at(agent, r)
        })
    })
}

/// For `i < ⌊ν·n⌋`: `w(x_i, y_j) = 3` when `j ≤ i`; every other edge 1.
/// All X agents share the preference order `y0 > y1 > ...`.
pub fn gen_lb_one_sided<T: Weight>(n: usize, nu: f64) -> Result<Instance<T>> {
    require(n >= 1, "n must be at least 1")?;
    require((0.0..=1.0).contains(&nu), "nu must lie in [0, 1]")?;
    let heavy_rows = (nu * n as f64 + 1e-9).floor() as usize;
    let three = T::from_u8(3).expect("small integers are representable");
    Instance::from_fn(n, |x, y| if x < heavy_rows && y <= x { three } else { T::one() })
}

/// I.i.d. uniform weights in `[1, β]`; no metric guarantee.
pub fn gen_beta_bounded(n: usize, beta: f64, seed: u64) -> Result<Instance<f64>> {
    require(n >= 1, "n must be at least 1")?;
    require(beta >= 1.0 && beta.is_finite(), "beta must be >= 1")?;
    let mut rng = StreamRng::new(seed, 1);
    let inst = Instance::from_fn(n, |_, _| rng.uniform(1.0, beta))?;
    assert!(inst.satisfies_beta(beta));
    Ok(inst)
}

/// Lowers weights until every edge obeys the three-hop bound
/// `w(x1,y1) <= w(x1,y2) + w(x2,y1) + w(x2,y2)`.
///
/// Each pass replaces an entry by the smallest three-hop sum through any
/// other pair when that is smaller; passes repeat until nothing changes.
pub fn metric_repair<T: Weight>(inst: &Instance<T>) -> Result<Instance<T>> {
    let n = inst.n();
    let mut w = inst.rows();
    let max_passes = n * n + 1;
    for _ in 0..max_passes {
        let mut changed = false;
        for x1 in 0..n {
            for y1 in 0..n {
                for x2 in 0..n {
                    for y2 in 0..n {
                        let bound = w[x1][y2] + w[x2][y1] + w[x2][y2];
                        if bound < w[x1][y1] {
                            w[x1][y1] = bound;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            let out = Instance::new(w)?;
            debug_assert!(check_metric(&out));
            return Ok(out);
        }
    }
    Err(Error::Generator(format!("metric repair did not converge within {max_passes} passes")))
}

/// Uniform weights in `[0.1, 10)` pushed through [`metric_repair`].
pub fn gen_metric_closure(n: usize, seed: u64) -> Result<Instance<f64>> {
    require(n >= 1, "n must be at least 1")?;
    let mut rng = StreamRng::new(seed, 2);
    let raw = Instance::from_fn(n, |_, _| rng.uniform(0.1, 10.0))?;
    metric_repair(&raw)
}

//! Matching algorithms. Each consumes exactly one view type and a
//! [`StreamRng`](crate::rng::StreamRng); none can see weights.

mod random;
mod rsd;
mod total_order;
mod two_sided;
mod undominated;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use random::{complete_randomly, random_matching};
pub use rsd::{rsd, rsd_partial};
pub use total_order::{greedy_total_order_k, total_order, total_order_k, total_order_mixed};
pub use two_sided::{two_sided, two_sided_low_alpha, two_sided_mixed};
pub use undominated::{chain_walk, greedy_undominated_k};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::rng::StreamRng;
use crate::scalar::Weight;
use crate::views::{
    derive_one_sided, derive_total_order, derive_two_sided, AuditReport, OneSidedView, TotalOrderView, TwoSidedView,
};

/// Probability of returning the first of two constituent matchings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixParams {
    pub alpha: Alpha,
    pub p_m1: f64,
}

impl MixParams {
    /// `(3 − 2α) / (3 − α)`.
    pub fn two_sided(alpha: Alpha) -> Self {
        let a = alpha.as_f64();
        MixParams { alpha, p_m1: (3.0 - 2.0 * a) / (3.0 - a) }
    }

    /// `2 / (2 + √(1 − α))`.
    pub fn total_order(alpha: Alpha) -> Self {
        let a = alpha.as_f64();
        MixParams { alpha, p_m1: 2.0 / (2.0 + (1.0 - a).sqrt()) }
    }
}

/// Which ordinal information an algorithm is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    OneSided,
    TwoSided,
    TotalOrder,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::OneSided => "one-sided",
            Model::TwoSided => "two-sided",
            Model::TotalOrder => "total-order",
        }
    }

    /// The algorithm used for this model at any budget.
    pub fn algorithm(self) -> Algorithm {
        match self {
            Model::OneSided => Algorithm::RsdPartial,
            Model::TwoSided => Algorithm::TwoSided,
            Model::TotalOrder => Algorithm::TotalOrder,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-sided" => Ok(Model::OneSided),
            "two-sided" => Ok(Model::TwoSided),
            "total-order" => Ok(Model::TotalOrder),
            other => Err(Error::Invalid(format!("unknown model '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Random,
    Rsd,
    RsdPartial,
    TwoSided,
    TotalOrder,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] =
        [Algorithm::Random, Algorithm::Rsd, Algorithm::RsdPartial, Algorithm::TwoSided, Algorithm::TotalOrder];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Random => "random",
            Algorithm::Rsd => "rsd",
            Algorithm::RsdPartial => "rsd-partial",
            Algorithm::TwoSided => "two-sided",
            Algorithm::TotalOrder => "total-order",
        }
    }

    pub fn model(self) -> Model {
        match self {
            Algorithm::Random | Algorithm::Rsd | Algorithm::RsdPartial => Model::OneSided,
            Algorithm::TwoSided => Model::TwoSided,
            Algorithm::TotalOrder => Model::TotalOrder,
        }
    }

    /// The budget the algorithm's view is built with. Random matching is
    /// given nothing; RSD needs the full lists.
    pub fn view_alpha(self, alpha: Alpha) -> Alpha {
        match self {
            Algorithm::Random => Alpha::ZERO,
            _ => alpha,
        }
    }

    pub fn run(self, view: &View, rng: &mut StreamRng) -> Result<Matching> {
        match (self, view) {
            (Algorithm::Random, _) => Ok(random_matching(view.n(), rng)),
            (Algorithm::Rsd, View::OneSided(v)) => rsd(v, rng),
            (Algorithm::RsdPartial, View::OneSided(v)) => rsd_partial(v, rng),
            (Algorithm::TwoSided, View::TwoSided(v)) => two_sided(v, rng),
            (Algorithm::TotalOrder, View::TotalOrder(v)) => total_order(v, rng),
            (alg, view) => {
                Err(Error::Invalid(format!("algorithm {} cannot run on a {} view", alg.as_str(), view.model())))
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algorithm '{s}'")))
    }
}

/// Any of the three view types.
#[derive(Debug)]
pub enum View {
    OneSided(OneSidedView),
    TwoSided(TwoSidedView),
    TotalOrder(TotalOrderView),
}

impl View {
    pub fn derive<T: Weight>(model: Model, inst: &Instance<T>, alpha: Alpha) -> View {
        match model {
            Model::OneSided => View::OneSided(derive_one_sided(inst, alpha)),
            Model::TwoSided => View::TwoSided(derive_two_sided(inst, alpha)),
            Model::TotalOrder => View::TotalOrder(derive_total_order(inst, alpha)),
        }
    }

    /// The view `alg` runs on at budget `alpha`.
    pub fn for_algorithm<T: Weight>(alg: Algorithm, inst: &Instance<T>, alpha: Alpha) -> View {
        View::derive(alg.model(), inst, alg.view_alpha(alpha))
    }

    pub fn n(&self) -> usize {
        match self {
            View::OneSided(v) => v.n(),
            View::TwoSided(v) => v.n(),
            View::TotalOrder(v) => v.n(),
        }
    }

    pub fn model(&self) -> Model {
        match self {
            View::OneSided(_) => Model::OneSided,
            View::TwoSided(_) => Model::TwoSided,
            View::TotalOrder(_) => Model::TotalOrder,
        }
    }

    pub fn audit(&self) -> AuditReport {
        match self {
            View::OneSided(v) => v.audit(),
            View::TwoSided(v) => v.audit(),
            View::TotalOrder(v) => v.audit(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_probabilities() {
        assert!((MixParams::two_sided(Alpha::THREE_QUARTERS).p_m1 - 2.0 / 3.0).abs() < 1e-15);
        assert!((MixParams::total_order(Alpha::THREE_QUARTERS).p_m1 - 0.8).abs() < 1e-15);
        assert_eq!(MixParams::total_order(Alpha::ZERO).p_m1, 2.0 / 3.0);
    }

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
        }
        assert!("greedy".parse::<Algorithm>().is_err());
        assert_eq!("total-order".parse::<Model>().unwrap(), Model::TotalOrder);
    }

    #[test]
    fn wrong_view_is_rejected() {
        let inst = Instance::new(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let view = View::derive(Model::TotalOrder, &inst, Alpha::ONE);
        assert!(Algorithm::Rsd.run(&view, &mut StreamRng::new(0, 0)).is_err());
        assert!(Algorithm::Random.run(&view, &mut StreamRng::new(0, 0)).unwrap().is_perfect());
    }
}

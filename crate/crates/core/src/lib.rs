//! Approximate maximum-weight bipartite perfect matching when only ordinal
//! information about the weights is available.
//!
//! Weights are hidden behind views that reveal preference lists (one- or
//! two-sided, truncated to a budget `α`) or a prefix of the global edge
//! order. Algorithms see only a view; oracles and the harness see weights
//! and measure how close the algorithms come to the optimum.

pub mod algorithms;
pub mod alpha;
pub mod cli;
pub mod error;
pub mod generators;
pub mod harness;
pub mod instance;
pub mod matching;
pub mod oracles;
pub mod rng;
pub mod scalar;
pub mod views;

pub use algorithms::{Algorithm, Model, View};
pub use alpha::Alpha;
pub use error::{BudgetViolation, Error, Result};
pub use generators::{GenKind, GenSpec};
pub use instance::{load_instance, Instance, InstanceDocument};
pub use matching::{Matching, Residual};
pub use rng::StreamRng;
pub use scalar::Weight;
pub use views::{AuditReport, OneSidedView, TotalOrderView, TwoSidedView};

/// Exact rational weights.
pub type Rational = num_rational::Rational64;

pub type Instance64 = Instance<f64>;
pub type Instance32 = Instance<f32>;
pub type ExactInstance = Instance<Rational>;

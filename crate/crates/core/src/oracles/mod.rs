//! Exact reference values: optimal and minimal matchings, and exact
//! expectations of the random and RSD algorithms.

mod assignment;
mod enumeration;

pub use assignment::{min_matching, opt_matching};
pub use enumeration::{
    brute_force_min, brute_force_opt, exact_random_expectation, exact_rsd_expectation, rsd_round_profile, RoundProfile,
    BRUTE_FORCE_LIMIT, RSD_ENUMERATION_LIMIT,
};

use serde::Serialize;

use crate::instance::Instance;
use crate::matching::{Matching, MatchingDocument};
use crate::scalar::Weight;

#[derive(Debug, Clone)]
pub struct OracleReport<T> {
    pub opt_weight: T,
    pub min_weight: T,
    pub opt_matching: Matching,
    pub min_matching: Matching,
}

impl<T: Weight> OracleReport<T> {
    pub fn compute(inst: &Instance<T>) -> Self {
        let (opt_matching, opt_weight) = opt_matching(inst);
        let (min_matching, min_weight) = min_matching(inst);
        OracleReport { opt_weight, min_weight, opt_matching, min_matching }
    }

    pub fn to_document(&self, inst: &Instance<T>) -> OracleDocument {
        OracleDocument {
            opt_weight: self.opt_weight.to_f64_lossy(),
            min_weight: self.min_weight.to_f64_lossy(),
            random_expectation: exact_random_expectation(inst).to_f64_lossy(),
            opt_matching: self.opt_matching.to_document(inst).expect("oracle matchings are valid"),
            min_matching: self.min_matching.to_document(inst).expect("oracle matchings are valid"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleDocument {
    pub opt_weight: f64,
    pub min_weight: f64,
    pub random_expectation: f64,
    pub opt_matching: MatchingDocument,
    pub min_matching: MatchingDocument,
}

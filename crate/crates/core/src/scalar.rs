//! Scalar abstraction for edge weights.
//!
//! Every numeric routine in the crate (instances, oracles, generators) is
//! generic over [`Weight`], so the same code runs on `f64`, `f32`, or exact
//! rationals. Ordinal views and algorithms never see the scalar at all.

use std::fmt::{Debug, Display};

use num_rational::Rational64;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A non-negative edge weight.
pub trait Weight:
    Num + Copy + PartialOrd + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Relative slack used by comparisons that must tolerate rounding.
    /// Zero for exact types.
    fn rel_slack() -> Self;

    /// `true` when the value is a usable weight: finite and not NaN.
    fn is_finite_weight(&self) -> bool;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("weight not representable in scalar type")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count not representable in scalar type")
    }

    /// `lhs <= rhs`, up to the type's rounding slack.
    fn le_slack(lhs: Self, rhs: Self) -> bool {
        let scale = if lhs > rhs { lhs } else { rhs };
        let scale = if scale > Self::one() { scale } else { Self::one() };
        lhs <= rhs + Self::rel_slack() * scale
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if b < a {
            b
        } else {
            a
        }
    }
}

impl Weight for f64 {
    fn rel_slack() -> Self {
        1e-12
    }

    fn is_finite_weight(&self) -> bool {
        self.is_finite()
    }
}

impl Weight for f32 {
    fn rel_slack() -> Self {
        1e-5
    }

    fn is_finite_weight(&self) -> bool {
        self.is_finite()
    }
}

impl Weight for Rational64 {
    fn rel_slack() -> Self {
        Rational64::from_integer(0)
    }

    fn is_finite_weight(&self) -> bool {
        true
    }
}

/// Sums weights in iteration order.
pub fn sum_weights<T: Weight, I: IntoIterator<Item = T>>(values: I) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc + v)
}

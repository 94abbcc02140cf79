//! The information budget α, kept as an exact rational.
//!
//! Budgets translate into integer counts (`⌊α·n⌋` preference ranks,
//! `⌊α·n²⌋` ranked edges), and those floors must never round up, so α is
//! stored exactly rather than as a float.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(Rational64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(Rational64::new_raw(0, 1));
    pub const HALF: Alpha = Alpha(Rational64::new_raw(1, 2));
    pub const THREE_QUARTERS: Alpha = Alpha(Rational64::new_raw(3, 4));
    pub const ONE: Alpha = Alpha(Rational64::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidAlpha(format!("{numer}/{denom}")));
        }
        Self::from_ratio(Rational64::new(numer, denom))
    }

    pub fn from_ratio(r: Rational64) -> Result<Self, Error> {
        if r < Rational64::zero() || r > Rational64::from_integer(1) {
            return Err(Error::InvalidAlpha(r.to_string()));
        }
        Ok(Alpha(r))
    }

    /// Nearest small-denominator rational to `v`.
    pub fn from_f64(v: f64) -> Result<Self, Error> {
        if !v.is_finite() {
            return Err(Error::InvalidAlpha(v.to_string()));
        }
        let r = Rational64::approximate_float(v).ok_or_else(|| Error::InvalidAlpha(v.to_string()))?;
        Self::from_ratio(r)
    }

    pub fn ratio(self) -> Rational64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `⌊α·count⌋`.
    pub fn floor_mul(self, count: usize) -> usize {
        let num = *self.0.numer() as u128;
        let den = *self.0.denom() as u128;
        ((num * count as u128) / den) as usize
    }

    pub fn min(self, other: Alpha) -> Alpha {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_f64())
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

/// Accepts `p/q` fractions and plain decimals; decimals are read exactly
/// (`0.625` is `5/8`, not its binary approximation).
impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::InvalidAlpha(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            return Alpha::new(p, q).map_err(|_| bad());
        }
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || frac_part.len() > 15
        {
            return Err(bad());
        }
        let int: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
        let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac_part.len() as u32);
        let numer = int.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
        Alpha::new(numer, scale).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!("0.625".parse::<Alpha>().unwrap(), Alpha::new(5, 8).unwrap());
        assert_eq!("0.29".parse::<Alpha>().unwrap().floor_mul(100), 29);
        assert_eq!("1".parse::<Alpha>().unwrap(), Alpha::ONE);
        assert_eq!(".5".parse::<Alpha>().unwrap(), Alpha::HALF);
        assert_eq!("3/4".parse::<Alpha>().unwrap(), Alpha::THREE_QUARTERS);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("1.5".parse::<Alpha>().is_err());
        assert!("-0.1".parse::<Alpha>().is_err());
        assert!("abc".parse::<Alpha>().is_err());
        assert!(Alpha::from_f64(f64::NAN).is_err());
    }

    #[test]
    fn floor_never_rounds_up() {
        let a = Alpha::new(1, 2).unwrap();
        assert_eq!(a.floor_mul(5), 2);
        assert_eq!(a.floor_mul(4), 2);
        assert_eq!(Alpha::from_f64(0.75).unwrap().floor_mul(4), 3);
        assert_eq!(Alpha::ZERO.floor_mul(10), 0);
    }
}

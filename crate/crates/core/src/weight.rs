//! Exact non-negative rational vertex weights.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A non-negative rational number kept in lowest terms.
///
/// Subtraction is only offered as [`Weight::checked_sub`] and
/// [`Weight::saturating_sub`] since the type cannot go negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Ratio<i128>);

impl Weight {
    pub const ZERO: Weight = Weight(Ratio::new_raw(0, 1));
    pub const ONE: Weight = Weight(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom <= 0 {
            return Err(Error::InvalidWeight(format!("denominator {denom} must be positive")));
        }
        if numer < 0 {
            return Err(Error::InvalidWeight(format!("numerator {numer} must be non-negative")));
        }
        Ok(Weight(Ratio::new(numer, denom)))
    }

    /// Panics on a non-positive denominator; intended for constants.
    pub fn frac(numer: u64, denom: u64) -> Self {
        Self::new(numer as i128, denom as i128).expect("valid constant weight")
    }

    pub fn int(value: u64) -> Self {
        Weight(Ratio::from_integer(value as i128))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero()
    }

    pub fn checked_sub(self, rhs: Weight) -> Option<Weight> {
        if rhs > self {
            None
        } else {
            Some(Weight(self.0 - rhs.0))
        }
    }

    pub fn saturating_sub(self, rhs: Weight) -> Weight {
        self.checked_sub(rhs).unwrap_or(Weight::ZERO)
    }

    pub fn half(self) -> Weight {
        Weight(self.0 / 2)
    }

    pub fn div_int(self, k: u64) -> Weight {
        assert!(k > 0, "division by zero");
        Weight(self.0 / k as i128)
    }

    pub fn mul_int(self, k: u64) -> Weight {
        Weight(self.0 * k as i128)
    }

    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::ZERO
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl Mul for Weight {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight(self.0 * rhs.0)
    }
}

impl Div for Weight {
    type Output = Weight;
    fn div(self, rhs: Weight) -> Weight {
        assert!(!rhs.is_zero(), "division by zero weight");
        Weight(self.0 / rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + *b)
    }
}

/// Always `p/q`, including integers (`3/1`), so report lines parse uniformly.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWeight(format!("cannot parse {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| bad())?;
                let q: i128 = q.trim().parse().map_err(|_| bad())?;
                Weight::new(p, q)
            }
            None => {
                let p: i128 = s.trim().parse().map_err(|_| bad())?;
                Weight::new(p, 1)
            }
        }
    }
}

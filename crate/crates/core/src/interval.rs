//! Closed intervals with exact rational endpoints.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::scalar::{ceil_dyadic, floor_dyadic};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!("lo {lo} exceeds hi {hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub(crate) fn new_unchecked(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        let lo = crate::scalar::to_f64(&self.lo);
        let hi = crate::scalar::to_f64(&self.hi);
        lo - slack <= x && x <= hi + slack
    }

    pub fn encloses(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Self { lo, hi })
    }

    /// Smallest interval with `2^-bits`-grid endpoints containing `self`.
    pub fn round_out(&self, bits: u32) -> Self {
        Self { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if c.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    /// `{|x| : x ∈ self}`.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Self { lo: Rational::zero(), hi: self.hi.clone().max(-self.lo.clone()) }
        }
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: Self) -> RatInterval {
        RatInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: Self) -> RatInterval {
        RatInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: Self) -> RatInterval {
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for RatInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo.to_string(), self.hi.to_string()].serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn arithmetic() {
        let a = RatInterval::new(int(-1), int(2)).unwrap();
        let b = RatInterval::new(rat(1, 2), int(3)).unwrap();
        assert_eq!(&a * &b, RatInterval::new(int(-3), int(6)).unwrap());
        assert_eq!(&a - &b, RatInterval::new(int(-4), rat(3, 2)).unwrap());
        assert_eq!(a.abs(), RatInterval::new(int(0), int(2)).unwrap());
        assert_eq!(a.scale(&int(-2)), RatInterval::new(int(-4), int(2)).unwrap());
        assert!(RatInterval::new(int(1), int(0)).is_err());
        assert_eq!(a.intersect(&b), Some(RatInterval::new(rat(1, 2), int(2)).unwrap()));
        assert_eq!(a.midpoint(), rat(1, 2));
    }
}

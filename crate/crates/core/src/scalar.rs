//! Scalar abstraction shared by the polynomial containers, plus helpers for
//! the exact [`Rational`] instantiation: construction, text parsing and
//! decimal rendering.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// Coefficient type for [`crate::poly`]: any commutative ring element with
/// small-integer embedding. Implemented for `f32`, `f64` and [`Rational`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("small integers embed in every scalar")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// `2^-k`.
pub fn pow2_inv(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k)
}

/// `10^-k`.
pub fn pow10_inv(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// Parses `"p/q"` or `"p"` with integer `p`, `q`. Decimal and exponent forms
/// are rejected so no binary-float value can leak into exact input.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
    if s.is_empty() {
        return Err(err("empty value"));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(err("decimal notation is not accepted; write an exact fraction p/q"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("numerator is not an integer"))?;
    let den: BigInt = den.parse().map_err(|_| err("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Comma-separated coefficient list, e.g. `"5/4,1,1,1/4"`.
pub fn parse_coeffs(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    text.split(',').map(parse_rational).collect()
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn floor_rat(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil_rat(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Largest multiple of `2^-bits` that is `<= r`.
pub fn floor_dyadic(r: &Rational, bits: u32) -> Rational {
    if r.denom().is_one() {
        return r.clone();
    }
    let scale = BigInt::one() << bits;
    Rational::new(floor_rat(&(r * Rational::from_integer(scale.clone()))), scale)
}

/// Smallest multiple of `2^-bits` that is `>= r`.
pub fn ceil_dyadic(r: &Rational, bits: u32) -> Rational {
    if r.denom().is_one() {
        return r.clone();
    }
    let scale = BigInt::one() << bits;
    Rational::new(ceil_rat(&(r * Rational::from_integer(scale.clone()))), scale)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal string with `digits` fractional digits, rounded toward `-∞`
/// (`round_up = false`) or `+∞` (`round_up = true`).
pub fn to_decimal(r: &Rational, digits: usize, round_up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let n = if round_up { ceil_rat(&scaled) } else { floor_rat(&scaled) };
    let neg = n.is_negative();
    let mag = n.abs().to_string();
    let body = if digits == 0 {
        mag
    } else {
        let padded = format!("{:0>width$}", mag, width = digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        format!("{int_part}.{frac_part}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Number of decimal digits needed to resolve `tol`: `ceil(-log10 tol)`, at least 1.
pub fn digits_for(tol: &Rational) -> usize {
    let mut d = 0usize;
    let mut step = Rational::one();
    while &step > tol && d < 60 {
        step /= int(10);
        d += 1;
    }
    d.max(1)
}

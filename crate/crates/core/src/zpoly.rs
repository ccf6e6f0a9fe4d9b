//! Integer polynomials used inside the Sturm machinery. Every rational input
//! is scaled by a positive constant to a primitive integer polynomial, which
//! leaves signs and roots untouched.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{AlgPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly(c)
    }

    /// Positive multiple of `p` with coprime integer coefficients.
    pub fn from_rational(p: &AlgPoly) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        ZPoly::new(ints).primitive()
    }

    pub fn to_rational(&self) -> AlgPoly {
        AlgPoly::new(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    #[cfg(test)]
    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    /// Divides by the positive gcd of the coefficients.
    pub fn primitive(self) -> Self {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return self;
        }
        ZPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Pseudo-division `lc(b)^(deg a − deg b + 1)·a = q·b + r`.
    fn pseudo_divmod(&self, b: &ZPoly) -> (ZPoly, ZPoly, bool) {
        assert!(!b.is_zero());
        if self.0.len() < b.0.len() {
            return (ZPoly(Vec::new()), self.clone(), false);
        }
        let lb = b.lc().clone();
        let db = b.degree();
        let delta = self.degree() - db;
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); delta + 1];
        for i in (0..=delta).rev() {
            let coef = r[i + db].clone();
            for x in q.iter_mut() {
                *x *= &lb;
            }
            q[i] += &coef;
            for x in r.iter_mut() {
                *x *= &lb;
            }
            if !coef.is_zero() {
                for (j, bc) in b.0.iter().enumerate() {
                    r[i + j] -= &coef * bc;
                }
            }
        }
        r.truncate(db);
        // lc(b)^(delta+1) is negative iff lc(b) < 0 and delta+1 is odd
        let multiplier_negative = lb.is_negative() && delta.is_multiple_of(2);
        (ZPoly::new(q), ZPoly::new(r), multiplier_negative)
    }

    /// Remainder of `a / b` up to a positive factor.
    pub fn signed_rem(&self, b: &ZPoly) -> ZPoly {
        let (_, r, neg) = self.pseudo_divmod(b);
        if neg { r.neg() } else { r }
    }

    /// Exact quotient `a / b` up to a positive factor; `b` must divide `a`.
    pub fn exact_quotient(&self, b: &ZPoly) -> ZPoly {
        let (q, r, neg) = self.pseudo_divmod(b);
        debug_assert!(r.is_zero(), "inexact division");
        let q = if neg { q.neg() } else { q };
        q.primitive()
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Greatest common divisor by the primitive remainder sequence; sign arbitrary.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = if self.0.len() >= other.0.len() {
            (self.clone().primitive(), other.clone().primitive())
        } else {
            (other.clone().primitive(), self.clone().primitive())
        };
        while !b.is_zero() {
            let r = a.signed_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Sign of `p(x)` for rational `x`, computed from the homogenized integer
    /// value `Σ cₖ nᵏ d^(deg−k)` with `x = n/d`, `d > 0`.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        self.eval_scaled(x).sign()
    }

    fn eval_scaled(&self, x: &Rational) -> BigInt {
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }

    #[cfg(test)]
    pub fn eval(&self, x: &Rational) -> Rational {
        let d = self.degree() as u32;
        let den = num_traits::pow(x.denom().clone(), d as usize);
        Rational::new(self.eval_scaled(x), den)
    }
}

//! Trigonometric and algebraic polynomial containers, Chebyshev reduction,
//! reflection and evaluation.
//!
//! Indexing follows the bracket notation: a sine polynomial `[a₁,…,aₙ]_s`
//! stores `a₁` first, a cosine polynomial `[a₀,…,aₙ]_c` stores `a₀` first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};

use crate::scalar::Scalar;
use crate::{Error, Result};

/// `Σ_{k=1}^{n} aₖ sin(kx)`; `coeffs[k-1]` is `aₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SineSum<T> {
    coeffs: Vec<T>,
}

/// `Σ_{k=0}^{n} aₖ cos(kx)`; `coeffs[k]` is `aₖ`. An empty list is the zero sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosineSum<T> {
    coeffs: Vec<T>,
}

/// Dense polynomial in the monomial basis, constant term first. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

fn effective_len<T: Zero>(coeffs: &[T]) -> usize {
    coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
}

impl<T: Scalar> SineSum<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Stored degree `n`, trailing zeros included.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest `k` with `aₖ ≠ 0`, or 0 for the zero sum.
    pub fn effective_degree(&self) -> usize {
        effective_len(&self.coeffs)
    }

    /// `aₖ` for `k ≥ 1`; zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> T {
        assert!(k >= 1, "sine coefficients are indexed from 1");
        self.coeffs.get(k - 1).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.effective_degree() == 0
    }

    /// `q(x) = p(π - x)`, i.e. `qₖ = (-1)^{k+1} aₖ`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a.clone() })
            .collect();
        Self { coeffs }
    }

    /// `P` with `Σ aₖ sin(kx) = sin(x)·P(cos x)`, built as `Σ aₖ U_{k-1}`.
    pub fn to_algebraic(&self) -> Polynomial<T> {
        let n = self.effective_degree();
        let mut acc = vec![T::zero(); n.max(1)];
        for (k, u) in chebyshev_u::<T>(n).into_iter().enumerate() {
            let a = &self.coeffs[k];
            if a.is_zero() {
                continue;
            }
            for (slot, c) in acc.iter_mut().zip(u.iter()) {
                *slot = slot.clone() + a.clone() * c.clone();
            }
        }
        Polynomial::new(acc)
    }
}

impl<T: Scalar> CosineSum<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Stored degree `n` (number of coefficients minus one); 0 when empty.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn effective_degree(&self) -> usize {
        effective_len(&self.coeffs).saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        effective_len(&self.coeffs) == 0
    }

    /// `Q` with `Σ aₖ cos(kx) = Q(cos x)`, built as `Σ aₖ T_k`.
    pub fn to_algebraic(&self) -> Polynomial<T> {
        let len = effective_len(&self.coeffs);
        if len == 0 {
            return Polynomial::zero();
        }
        let mut acc = vec![T::zero(); len];
        for (k, t) in chebyshev_t::<T>(len - 1).into_iter().enumerate() {
            let a = &self.coeffs[k];
            if a.is_zero() {
                continue;
            }
            for (slot, c) in acc.iter_mut().zip(t.iter()) {
                *slot = slot.clone() + a.clone() * c.clone();
            }
        }
        Polynomial::new(acc)
    }
}

/// `sine_to_algebraic`: see [`SineSum::to_algebraic`].
pub fn sine_to_algebraic<T: Scalar>(p: &SineSum<T>) -> Polynomial<T> {
    p.to_algebraic()
}

/// `cosine_to_algebraic`: see [`CosineSum::to_algebraic`].
pub fn cosine_to_algebraic<T: Scalar>(p: &CosineSum<T>) -> Polynomial<T> {
    p.to_algebraic()
}

pub fn reflect<T: Scalar>(p: &SineSum<T>) -> SineSum<T> {
    p.reflect()
}

/// `U_0 … U_{count-1}` as coefficient vectors, via `U_{j+1} = 2X·U_j − U_{j−1}`.
pub fn chebyshev_u<T: Scalar>(count: usize) -> Vec<Vec<T>> {
    let two = T::from_int(2);
    let mut out: Vec<Vec<T>> = Vec::with_capacity(count);
    if count >= 1 {
        out.push(vec![T::one()]);
    }
    if count >= 2 {
        out.push(vec![T::zero(), two.clone()]);
    }
    while out.len() < count {
        let j = out.len();
        out.push(three_term_step(&out[j - 1], &out[j - 2], &two));
    }
    out
}

/// `T_0 … T_{max_degree}` via `T_{j+1} = 2X·T_j − T_{j−1}`.
pub fn chebyshev_t<T: Scalar>(max_degree: usize) -> Vec<Vec<T>> {
    let two = T::from_int(2);
    let mut out: Vec<Vec<T>> = vec![vec![T::one()]];
    if max_degree >= 1 {
        out.push(vec![T::zero(), T::one()]);
    }
    while out.len() <= max_degree {
        let j = out.len();
        out.push(three_term_step(&out[j - 1], &out[j - 2], &two));
    }
    out
}

fn three_term_step<T: Scalar>(cur: &[T], prev: &[T], two: &T) -> Vec<T> {
    let mut next = vec![T::zero(); cur.len() + 1];
    for (i, c) in cur.iter().enumerate() {
        next[i + 1] = two.clone() * c.clone();
    }
    for (i, c) in prev.iter().enumerate() {
        next[i] = next[i].clone() - c.clone();
    }
    next
}

/// Floating evaluation, for plotting and test oracles only.
pub trait EvalFloat {
    fn eval_float(&self, x: f64) -> f64;
}

impl<T: ToPrimitive> EvalFloat for SineSum<T> {
    fn eval_float(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.to_f64().unwrap_or(f64::NAN) * ((i + 1) as f64 * x).sin())
            .sum()
    }
}

impl<T: ToPrimitive> EvalFloat for CosineSum<T> {
    fn eval_float(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.to_f64().unwrap_or(f64::NAN) * (i as f64 * x).cos())
            .sum()
    }
}

pub fn eval_float<P: EvalFloat + ?Sized>(p: &P, x: f64) -> f64 {
    p.eval_float(x)
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        coeffs.truncate(effective_len(&coeffs));
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `X ↦ -X`.
    pub fn compose_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
            .collect();
        Self::new(coeffs)
    }

    /// Coefficients of `q(y) = p(center + y)`.
    pub fn taylor_shift(&self, center: &T) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let carry = c[j + 1].clone() * center.clone();
                c[j] = c[j].clone() + carry;
            }
        }
        Self::new(c)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

/// `eval_rational` on the exact instantiation.
pub fn eval_rational(p: &crate::AlgPoly, x: &crate::Rational) -> crate::Rational {
    p.eval(x)
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                a + b
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})X"),
                _ => format!("({c})X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

//! Coefficient-level tests: the alternating partial-sum condition and the
//! convexity condition (both sufficient for nonnegativity), and the
//! first/third-order necessary conditions at the endpoints `x = 0` and `x = π`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::families::phi;
use crate::scalar::{int, rat};
use crate::verdict::ser_rat;
use crate::{Error, Rational, Result, SinePoly};

fn ser_rats<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_opt_rat<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

fn non_increasing(a: &[Rational]) -> bool {
    a.windows(2).all(|w| w[0] >= w[1])
}

fn all_positive(a: &[Rational]) -> bool {
    a.iter().all(Signed::is_positive)
}

/// Returns whether `a` is non-increasing, positive, and every prefix sum
/// `Σ_{k=1}^{m} (−1)^{k−1} k aₖ` (m = 1..n) is nonnegative, together with those prefix sums.
pub fn belov_condition(a: &[Rational]) -> Result<(bool, Vec<Rational>)> {
    if a.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let mut acc = Rational::zero();
    let sums: Vec<Rational> = a
        .iter()
        .enumerate()
        .map(|(i, ak)| {
            let term = ak * int(i as i64 + 1);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            acc.clone()
        })
        .collect();
    let ok = non_increasing(a) && all_positive(a) && sums.iter().all(|s| !s.is_negative());
    Ok((ok, sums))
}

/// `a` is the displayed coefficient vector whose last entry is already
/// halved. With `b = (a₁, …, a_{n−1}, 2aₙ)`, true iff `b` is
/// non-increasing (weakly), strictly positive and convex.
pub fn fejer_condition(a: &[Rational]) -> Result<bool> {
    if a.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "the convexity condition needs at least 2 coefficients, got {}",
            a.len()
        )));
    }
    let mut b = a.to_vec();
    let last = b.len() - 1;
    b[last] = &b[last] * int(2);
    let convex = b.windows(3).all(|w| &w[0] + &w[2] >= &w[1] * int(2));
    Ok(non_increasing(&b) && all_positive(&b) && convex)
}

/// Necessary conditions at one endpoint of `[0, π]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EndpointCheck {
    /// `Σ kaₖ` at 0, `Σ (−1)^{k+1} kaₖ` at π.
    #[serde(serialize_with = "ser_rat")]
    pub first_sum: Rational,
    pub pass: bool,
    /// `Σ k³aₖ` resp. `Σ (−1)^{k+1} k³aₖ`, present only when `first_sum = 0`.
    #[serde(serialize_with = "ser_opt_rat")]
    pub third_sum: Option<Rational>,
    /// `third_sum ≤ 0`, the direction forced by `f‴ = −Σ k³aₖ cos(kx)`.
    pub third_pass: Option<bool>,
    /// `third_sum ≥ 0`, the inequality as commonly printed; informational only.
    pub third_pass_as_printed: Option<bool>,
}

impl EndpointCheck {
    fn new(first_sum: Rational, third: impl FnOnce() -> Rational) -> Self {
        if first_sum.is_zero() {
            let t = third();
            let third_pass = !t.is_positive();
            EndpointCheck {
                first_sum,
                pass: third_pass,
                third_pass: Some(third_pass),
                third_pass_as_printed: Some(!t.is_negative()),
                third_sum: Some(t),
            }
        } else {
            EndpointCheck {
                pass: first_sum.is_positive(),
                first_sum,
                third_sum: None,
                third_pass: None,
                third_pass_as_printed: None,
            }
        }
    }

    /// `pass` already folds in the third-order check when it applies.
    pub fn passes(&self) -> bool {
        self.pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NecessaryReport {
    pub nec_at_0: EndpointCheck,
    pub nec_at_pi: EndpointCheck,
}

impl NecessaryReport {
    /// False certifies that the polynomial is *not* nonnegative near an endpoint.
    pub fn passes(&self) -> bool {
        self.nec_at_0.pass && self.nec_at_pi.pass
    }
}

fn weighted_sum(p: &SinePoly, power: u32, alternating: bool) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let k = i as i64 + 1;
            let w = int(k.pow(power));
            let w = if alternating && i % 2 == 1 { -w } else { w };
            a * w
        })
        .sum()
}

/// At 0: `Σ kaₖ ≥ 0`, and on equality `Σ k³aₖ ≤ 0`. At π: the alternating
/// analogues. A failure certifies the polynomial is not nonnegative.
pub fn necessary_conditions(p: &SinePoly) -> NecessaryReport {
    NecessaryReport {
        nec_at_0: EndpointCheck::new(weighted_sum(p, 1, false), || weighted_sum(p, 3, false)),
        nec_at_pi: EndpointCheck::new(weighted_sum(p, 1, true), || weighted_sum(p, 3, true)),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriteriaReport {
    pub belov_ok: bool,
    #[serde(serialize_with = "ser_rats")]
    pub belov_partial_sums: Vec<Rational>,
    pub fejer_ok: bool,
    pub nec_at_0: EndpointCheck,
    pub nec_at_pi: EndpointCheck,
}

/// Every coefficient test on one sine polynomial. For a single coefficient
/// the convexity test is vacuous and reduces to `a₁ > 0`.
pub fn criteria_report(p: &SinePoly) -> CriteriaReport {
    let a = p.coeffs();
    let (belov_ok, belov_partial_sums) = belov_condition(a).expect("sine polynomials are nonempty");
    let fejer_ok = match fejer_condition(a) {
        Ok(ok) => ok,
        Err(_) => a[0].is_positive(),
    };
    let NecessaryReport { nec_at_0, nec_at_pi } = necessary_conditions(p);
    CriteriaReport { belov_ok, belov_partial_sums, fejer_ok, nec_at_0, nec_at_pi }
}

/// `a₁ = 1`, `a_{2k} = a_{2k+1} = (1·3⋯(2k−1)) / (2·4⋯(2k))`, truncated to `n` terms.
pub fn vietoris_coefficients(n: usize) -> Result<Vec<Rational>> {
    if n < 1 {
        return Err(Error::InvalidParameter("vietoris coefficients need n >= 1".into()));
    }
    let mut out = Vec::with_capacity(n);
    let mut current = Rational::one();
    out.push(current.clone());
    let mut k = 1i64;
    while out.len() < n {
        current *= rat(2 * k - 1, 2 * k);
        out.push(current.clone());
        if out.len() < n {
            out.push(current.clone());
        }
        k += 1;
    }
    Ok(out)
}

/// Whether `Σ (−1)^{k+1} k³ φₖ = 0` exactly for the coefficients of `phi(n)`.
pub fn identity_k3_check(n: usize) -> Result<bool> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::InvalidParameter(format!("identity check needs odd n >= 3, got {n}")));
    }
    Ok(weighted_sum(&phi(n)?, 3, true).is_zero())
}

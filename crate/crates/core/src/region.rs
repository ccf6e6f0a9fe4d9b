//! The region `{(κ, λ) : [κ, 1, …, 1, λ]_s ≥ 0 on [0, π]}` for fixed `n`: membership,
//! the boundary `κ₀(λ)`, boundary sweeps, and the complete degree-3 sine /
//! degree-2 cosine characterizations.
//!
//! `κ` multiplies `sin x`, which is `sin x · U₀(cos x)` with `U₀ = 1`, so raising
//! `κ` adds a nonnegative multiple of `sin x`: membership is upward closed in
//! `κ` and the boundary can be found by bisection on `κ`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::families::{kappa_lambda, phi_last};
use crate::scalar::{digits_for, int, rat, to_decimal, to_f64};
use crate::sturm::certify_sine;
use crate::verdict::ser_rat;
use crate::{CosinePoly, Error, RatInterval, Rational, Result, SinePoly, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionQuery {
    pub n: usize,
    pub kappa: Rational,
    pub lambda: Rational,
}

impl RegionQuery {
    pub fn new(n: usize, kappa: Rational, lambda: Rational) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("region queries need n >= 3, got {n}")));
        }
        Ok(Self { n, kappa, lambda })
    }

    pub fn poly(&self) -> SinePoly {
        kappa_lambda(self.n, self.kappa.clone(), self.lambda.clone()).expect("n >= 3 checked on construction")
    }
}

/// Certified decision of `[κ, 1, …, 1, λ]_s ≥ 0`.
pub fn membership(q: &RegionQuery) -> Verdict {
    certify_sine(&q.poly())
}

fn is_member(n: usize, kappa: &Rational, lambda: &Rational) -> bool {
    membership(&RegionQuery { n, kappa: kappa.clone(), lambda: lambda.clone() }).is_nonnegative()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryMethod {
    ClosedFormLine,
    ClosedFormCurve,
    Bisection,
}

impl BoundaryMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryMethod::ClosedFormLine => "closed_form_line",
            BoundaryMethod::ClosedFormCurve => "closed_form_curve",
            BoundaryMethod::Bisection => "bisection",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryPoint {
    #[serde(serialize_with = "ser_rat")]
    pub lambda: Rational,
    /// Contains `κ₀(λ)`; a point when the closed form is rational.
    pub kappa0: RatInterval,
    pub method: BoundaryMethod,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Kappa0Strategy {
    /// Closed forms where known, bisection elsewhere.
    #[default]
    Auto,
    /// Always bisect on membership.
    ForceBisection,
}

/// `(n+1)/2 − nλ`: the boundary line for odd `n`, also the necessary bound from the
/// first-order condition at `π`.
pub fn odd_line(n: usize, lambda: &Rational) -> Rational {
    let n = n as i64;
    rat(n + 1, 2) - int(n) * lambda
}

/// `nλ − (n−2)/2`: the boundary line for even `n`, also the necessary bound at `π`.
pub fn even_line(n: usize, lambda: &Rational) -> Rational {
    let n = n as i64;
    int(n) * lambda - rat(n - 2, 2)
}

fn parity_line(n: usize, lambda: &Rational) -> Rational {
    if n % 2 == 1 {
        odd_line(n, lambda)
    } else {
        even_line(n, lambda)
    }
}

/// Largest `κ` ruled out by the first-order conditions at both endpoints.
fn necessary_kappa_bound(n: usize, lambda: &Rational) -> Rational {
    let ni = n as i64;
    // Σ kaₖ ≥ 0: κ + (n(n−1)/2 − 1) + nλ ≥ 0
    let at_zero = -(int(ni * (ni - 1) / 2 - 1) + int(ni) * lambda);
    parity_line(n, lambda).max(at_zero)
}

/// `κ = (9λ² + 9λ + 2√((6λ² − 3λ + 1)³) − 2) / (27λ²)` for `n = 4`, enclosed to width `≤ tol`.
pub fn quartic_curve(lambda: &Rational, tol: &Rational) -> Result<RatInterval> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("the n = 4 curve is undefined at lambda = 0".into()));
    }
    let l2 = lambda * lambda;
    let base = int(6) * &l2 - int(3) * lambda + int(1);
    let radicand = &base * &base * &base;
    let denom = int(27) * &l2;
    let affine = int(9) * &l2 + int(9) * lambda - int(2);
    // width of the κ enclosure is 2·w/(27λ²) for a √ enclosure of width w
    let sqrt_tol = tol * &denom / int(2);
    let root = sqrt_enclosure(&radicand, &sqrt_tol);
    let lo = (&affine + int(2) * &root.lo) / &denom;
    let hi = (&affine + int(2) * &root.hi) / &denom;
    Ok(RatInterval::new_unchecked(lo, hi))
}

/// Rational interval of width `≤ tol` containing `√s` for `s ≥ 0`.
pub fn sqrt_enclosure(s: &Rational, tol: &Rational) -> RatInterval {
    assert!(!s.is_negative(), "square root of a negative rational");
    let (p, q) = (s.numer(), s.denom());
    let pq = p * q;
    let mut scale = BigInt::one();
    loop {
        let target = &pq * &scale * &scale;
        let r = target.sqrt();
        let den = q * &scale;
        if &r * &r == target {
            return RatInterval::point(Rational::new(r, den));
        }
        let lo = Rational::new(r.clone(), den.clone());
        let hi = Rational::new(r + 1, den);
        if &(&hi - &lo) <= tol {
            return RatInterval::new_unchecked(lo, hi);
        }
        scale <<= 32;
    }
}

/// `κ₀(λ; n)` enclosed to width `≤ tol`.
pub fn kappa0(n: usize, lambda: &Rational, tol: &Rational) -> Result<BoundaryPoint> {
    kappa0_with(n, lambda, tol, Kappa0Strategy::Auto)
}

pub fn kappa0_with(n: usize, lambda: &Rational, tol: &Rational, strategy: Kappa0Strategy) -> Result<BoundaryPoint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("kappa0 needs n >= 3, got {n}")));
    }
    if !tol.is_positive() {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let exact = |k: Rational, method| BoundaryPoint {
        lambda: lambda.clone(),
        kappa0: RatInterval::point(k),
        method,
    };
    if strategy == Kappa0Strategy::Auto {
        if n % 2 == 1 && lambda <= &phi_last(n) {
            return Ok(exact(odd_line(n, lambda), BoundaryMethod::ClosedFormLine));
        }
        if n.is_multiple_of(2) && lambda >= &rat(1, 2) {
            return Ok(exact(even_line(n, lambda), BoundaryMethod::ClosedFormLine));
        }
        if n == 3 && lambda > &rat(1, 4) {
            let k = lambda + (int(4) * lambda).recip();
            return Ok(exact(k, BoundaryMethod::ClosedFormCurve));
        }
        if n == 4 && lambda.is_positive() && lambda < &rat(1, 2) {
            return Ok(BoundaryPoint {
                lambda: lambda.clone(),
                kappa0: quartic_curve(lambda, tol)?,
                method: BoundaryMethod::ClosedFormCurve,
            });
        }
    }
    Ok(BoundaryPoint {
        lambda: lambda.clone(),
        kappa0: bisect_kappa0(n, lambda, tol),
        method: BoundaryMethod::Bisection,
    })
}

/// Bracket `(lo, hi]` with `lo` certified outside and `hi` certified inside,
/// halved until `hi − lo ≤ tol`.
fn bisect_kappa0(n: usize, lambda: &Rational, tol: &Rational) -> RatInterval {
    let mut step = Rational::one();
    let mut lo = necessary_kappa_bound(n, lambda) - &step;
    while is_member(n, &lo, lambda) {
        step *= int(2);
        lo -= &step;
    }
    let mut hi = (parity_line(n, lambda) + int(2)).max(&lo + int(1));
    let mut step = Rational::one();
    while !is_member(n, &hi, lambda) {
        lo = hi.clone();
        hi += &step;
        step *= int(2);
    }
    let two = int(2);
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / &two;
        if is_member(n, &mid, lambda) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RatInterval::new_unchecked(lo, hi)
}

/// `κ₀` at `steps` uniformly spaced `λ` in `[lambda_lo, lambda_hi]`, ascending.
pub fn boundary_sweep(
    n: usize,
    lambda_lo: &Rational,
    lambda_hi: &Rational,
    steps: usize,
    tol: &Rational,
) -> Result<Vec<BoundaryPoint>> {
    if steps < 2 {
        return Err(Error::InvalidParameter(format!("a sweep needs at least 2 steps, got {steps}")));
    }
    if lambda_lo >= lambda_hi {
        return Err(Error::InvalidInterval(format!("empty lambda range [{lambda_lo}, {lambda_hi}]")));
    }
    let h = (lambda_hi - lambda_lo) / int(steps as i64 - 1);
    (0..steps)
        .into_par_iter()
        .map(|i| kappa0(n, &(lambda_lo + &h * int(i as i64)), tol))
        .collect()
}

/// CSV with header `lambda,kappa0_lo,kappa0_hi,method`; bounds are rounded
/// outward to the number of decimals that resolves `tol`.
pub fn boundary_csv(points: &[BoundaryPoint], tol: &Rational) -> String {
    let digits = digits_for(tol);
    let mut out = String::from("lambda,kappa0_lo,kappa0_hi,method\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            to_decimal(&p.lambda, digits + 2, false),
            to_decimal(&p.kappa0.lo, digits, false),
            to_decimal(&p.kappa0.hi, digits, true),
            p.method.as_str()
        );
    }
    out
}

/// Polyline of `(λ, midpoint of κ₀)`, axis ranges taken from the data.
pub fn boundary_svg(points: &[BoundaryPoint]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 480.0;
    const PAD: f64 = 40.0;
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (to_f64(&p.lambda), to_f64(&p.kappa0.midpoint())))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &xy {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    if y1 <= y0 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);
    let pts: Vec<String> = xy.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(
        s,
        r#"<line x1="{PAD}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        H - PAD,
        W - PAD,
        H - PAD
    );
    let _ = writeln!(s, r#"<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{}" stroke="black"/>"#, H - PAD);
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="12">lambda [{x0:.3}, {x1:.3}]</text>"#, W / 2.0 - 40.0, H - 10.0);
    let _ = writeln!(s, r#"<text x="4" y="{}" font-size="12">kappa0 [{y0:.3}, {y1:.3}]</text>"#, PAD - 12.0);
    let _ = writeln!(s, r#"<polyline fill="none" stroke="red" stroke-width="2" points="{}"/>"#, pts.join(" "));
    s.push_str("</svg>\n");
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CharacterizationCase {
    /// `|b| ≥ 4c`: the reduced quadratic attains its minimum on `[-1, 1]` at an endpoint.
    #[serde(rename = "i")]
    Endpoint,
    /// `|b| < 4c`: the minimum is at the interior vertex.
    #[serde(rename = "ii")]
    Vertex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Characterization {
    pub holds: bool,
    pub case: CharacterizationCase,
    /// `|b|`, compared against `four_c` to select the case.
    #[serde(serialize_with = "ser_rat")]
    pub abs_b: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub four_c: Rational,
    /// Quantity required to be `≥ 0` in the selected case.
    #[serde(serialize_with = "ser_rat")]
    pub margin: Rational,
}

/// Complete test for `[a, b, c]_s ≥ 0` on `[0, π]`:
/// (i) `|b| ≥ 4c` and `a − 2|b| + 3c ≥ 0`, or (ii) `|b| < 4c` and `a ≥ c + b²/(4c)`.
pub fn degree3_characterize(a: &Rational, b: &Rational, c: &Rational) -> Characterization {
    let abs_b = b.abs();
    let four_c = int(4) * c;
    if abs_b >= four_c {
        let margin = a - int(2) * &abs_b + int(3) * c;
        Characterization { holds: !margin.is_negative(), case: CharacterizationCase::Endpoint, abs_b, four_c, margin }
    } else {
        let margin = a - c - b * b / &four_c;
        Characterization { holds: !margin.is_negative(), case: CharacterizationCase::Vertex, abs_b, four_c, margin }
    }
}

/// Complete test for `a + b cos(x) + c cos(2x) ≥ 0` on `[0, π]`:
/// (i) `|b| ≥ 4c` and `a − |b| + c ≥ 0`, or (ii) `|b| < 4c` and `a ≥ c + b²/(8c)`.
/// Equivalent to [`degree3_characterize`] on [`cosine2_as_sine`].
pub fn cosine2_characterize(a: &Rational, b: &Rational, c: &Rational) -> Characterization {
    let abs_b = b.abs();
    let four_c = int(4) * c;
    if abs_b >= four_c {
        let margin = a - &abs_b + c;
        Characterization { holds: !margin.is_negative(), case: CharacterizationCase::Endpoint, abs_b, four_c, margin }
    } else {
        let margin = a - c - b * b / (int(8) * c);
        Characterization { holds: !margin.is_negative(), case: CharacterizationCase::Vertex, abs_b, four_c, margin }
    }
}

/// `[a, b, c]_c = a + b cos(x) + c cos(2x)`.
pub fn cosine2_poly(a: &Rational, b: &Rational, c: &Rational) -> CosinePoly {
    CosinePoly::new(vec![a.clone(), b.clone(), c.clone()])
}

/// `[2a − c, b, c]_s`, which equals `2 sin(x)·(a + b cos x + c cos 2x)`.
pub fn cosine2_as_sine(a: &Rational, b: &Rational, c: &Rational) -> SinePoly {
    SinePoly::new(vec![int(2) * a - c, b.clone(), c.clone()]).expect("three coefficients")
}

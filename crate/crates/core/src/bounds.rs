//! Certified enclosures of `sin`/`cos` from truncated Taylor series, and an
//! interval branch-and-bound nonnegativity prover for trigonometric sums.
//!
//! For `t ≥ 0` the partial sums of the sine and cosine series alternate
//! around the true value: a partial sum ending in a `+` term is an upper
//! bound, one ending in a `−` term a lower bound (`t − t³/6 ≤ sin t ≤ t − t³/6 + t⁵/120`,
//! and so on). Enclosures intersect the bounds from every truncation order on a fixed
//! ladder, so enclosures of nested intervals stay nested.

use num_traits::{One, Signed, Zero};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::scalar::{ceil_rat, floor_rat, int, rat};
use crate::{
    Certificate, CosinePoly, Error, RatInterval, Rational, Result, SinePoly, Status, Verdict, Witness,
    WitnessVariable,
};

/// Grid used to round enclosure arithmetic outward.
const ROUND_BITS: u32 = 96;
/// Highest truncation order on the ladder; the error at `t = 4` is below `10^-15`.
const MAX_ORDER: u32 = 30;
/// Subintervals visited before the search gives up as inconclusive. Zeros of
/// high multiplicity make the number of undecided subintervals grow with depth.
pub const MAX_NODES: usize = 1 << 13;

/// `[3.14159265358979, 3.14159265358980]`.
pub fn pi_enclosure() -> RatInterval {
    let den = 100_000_000_000_000i64;
    RatInterval::new_unchecked(rat(314_159_265_358_979, den), rat(314_159_265_358_980, den))
}

fn check_nonneg(t: &RatInterval) -> Result<()> {
    if t.lo.is_negative() {
        return Err(Error::InvalidInterval(format!("enclosures need t >= 0, got {t}")));
    }
    Ok(())
}

/// `[t − t³/6, t − t³/6 + t⁵/120]` at a point `t ≥ 0`.
pub fn printed_sin_bounds(t: &Rational) -> Result<RatInterval> {
    check_nonneg(&RatInterval::point(t.clone()))?;
    let t3 = t * t * t;
    let lo = t - &t3 / int(6);
    let hi = &lo + &t3 * t * t / int(120);
    Ok(RatInterval::new_unchecked(lo, hi))
}

/// `[1 − t²/2 + t⁴/24 − t⁶/720, 1 − t²/2 + t⁴/24]` at a point `t ≥ 0`.
pub fn printed_cos_bounds(t: &Rational) -> Result<RatInterval> {
    check_nonneg(&RatInterval::point(t.clone()))?;
    let t2 = t * t;
    let t4 = &t2 * &t2;
    let hi = int(1) - &t2 / int(2) + &t4 / int(24);
    let lo = &hi - &t4 * &t2 / int(720);
    Ok(RatInterval::new_unchecked(lo, hi))
}

fn shr_floor(x: BigInt) -> BigInt {
    x >> ROUND_BITS
}

fn shr_ceil(x: BigInt) -> BigInt {
    -((-x) >> ROUND_BITS)
}

/// Interval with endpoints in units of `2^-ROUND_BITS`.
#[derive(Clone, Debug)]
struct Fixed {
    lo: BigInt,
    hi: BigInt,
}

impl Fixed {
    fn unit() -> BigInt {
        BigInt::one() << ROUND_BITS
    }

    fn from_rat(t: &RatInterval) -> Self {
        let unit = Rational::from_integer(Self::unit());
        Fixed { lo: floor_rat(&(&t.lo * &unit)), hi: ceil_rat(&(&t.hi * &unit)) }
    }

    fn to_rat(&self) -> RatInterval {
        RatInterval::new_unchecked(Rational::new(self.lo.clone(), Self::unit()), Rational::new(self.hi.clone(), Self::unit()))
    }

    fn scale_int(&self, k: i64) -> Self {
        Fixed { lo: &self.lo * k, hi: &self.hi * k }
    }

    fn scale_rat(&self, c: &Rational) -> Self {
        let (n, d) = (c.numer(), c.denom());
        let (a, b) = (&self.lo * n, &self.hi * n);
        let (a, b) = if n.is_negative() { (b, a) } else { (a, b) };
        Fixed { lo: a.div_floor(d), hi: b.div_ceil(d) }
    }
}

struct PiFixed {
    lo: BigInt,
    hi: BigInt,
}

fn pi_fixed() -> PiFixed {
    let f = Fixed::from_rat(&pi_enclosure());
    PiFixed { lo: f.lo, hi: f.hi }
}

/// Series `Σ (−1)^j t^{first+2j} / (first+2j)!` bounded over `t ∈ [a, b]`, `a ≥ 0`.
/// Each monomial is bounded by its value at `a` or `b` according to its sign.
fn series_fixed(t: &Fixed, first: u32) -> Fixed {
    let scale = Fixed::unit();
    let (a, b) = (&t.lo, &t.hi);
    let a2 = shr_floor(a * a);
    let b2 = shr_ceil(b * b);
    let (mut pa, mut pb) = if first == 0 { (scale.clone(), scale.clone()) } else { (a.clone(), b.clone()) };
    let mut fact = BigInt::one();
    let mut lo_acc = BigInt::zero();
    let mut hi_acc = BigInt::zero();
    let mut best_lo = -scale.clone();
    let mut best_hi = scale;
    let mut k = first;
    let mut positive = true;
    while k <= MAX_ORDER {
        if k > 1 {
            fact *= BigInt::from(k) * BigInt::from(k - 1);
        }
        let small = pa.div_floor(&fact);
        let large = pb.div_ceil(&fact);
        if positive {
            lo_acc += small;
            hi_acc += large;
            best_hi = best_hi.min(hi_acc.clone());
        } else {
            lo_acc -= large;
            hi_acc -= small;
            best_lo = best_lo.max(lo_acc.clone());
        }
        pa = shr_floor(pa * &a2);
        pb = shr_ceil(pb * &b2);
        k += 2;
        positive = !positive;
    }
    Fixed { lo: best_lo, hi: best_hi }
}

fn series_enclosure(t: &RatInterval, first: u32) -> RatInterval {
    series_fixed(&Fixed::from_rat(t), first).to_rat()
}

/// Enclosure of `{sin t : t ∈ t}` for `t ⊂ [0, ∞)`; tight on `[0, 4]`.
pub fn sin_enclosure(t: &RatInterval) -> Result<RatInterval> {
    check_nonneg(t)?;
    if t.is_point() && t.lo.is_zero() {
        return Ok(RatInterval::point(Rational::zero()));
    }
    Ok(series_enclosure(t, 1))
}

/// Enclosure of `{cos t : t ∈ t}` for `t ⊂ [0, ∞)`; tight on `[0, 4]`.
pub fn cos_enclosure(t: &RatInterval) -> Result<RatInterval> {
    check_nonneg(t)?;
    if t.is_point() && t.lo.is_zero() {
        return Ok(RatInterval::point(Rational::one()));
    }
    Ok(series_enclosure(t, 0))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Wave {
    Sin,
    Cos,
}

impl std::fmt::Debug for Wave {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(if *self == Wave::Sin { "sin" } else { "cos" })
    }
}

/// Range of `sin`/`cos` over any `t ⊂ [0, ∞)`, reducing by multiples of `π`
/// (`f(t) = (−1)^j f(t − jπ)` for both functions) until the argument lies in `[0, 4]`.
fn wave_fixed(wave: Wave, t: &Fixed, pi: &PiFixed) -> Fixed {
    let unit = Fixed::unit();
    if &t.hi - &t.lo >= &pi.lo * 2 {
        return Fixed { lo: -unit.clone(), hi: unit };
    }
    let j = t.lo.div_floor(&pi.hi);
    let u = Fixed { lo: &t.lo - &j * &pi.hi, hi: &t.hi - &j * &pi.lo };
    if u.hi > unit * 4 {
        let m: BigInt = (&t.lo + &t.hi) >> 1;
        let left = wave_fixed(wave, &Fixed { lo: t.lo.clone(), hi: m.clone() }, pi);
        let right = wave_fixed(wave, &Fixed { lo: m, hi: t.hi.clone() }, pi);
        return Fixed { lo: left.lo.min(right.lo), hi: left.hi.max(right.hi) };
    }
    let e = series_fixed(&u, if wave == Wave::Sin { 1 } else { 0 });
    if j.bit(0) {
        Fixed { lo: -e.hi, hi: -e.lo }
    } else {
        e
    }
}

#[cfg(test)]
fn wave_range(wave: Wave, t: &RatInterval) -> RatInterval {
    wave_fixed(wave, &Fixed::from_rat(t), &pi_fixed()).to_rat()
}

/// A finite sum `Σ cᵢ·wave(kᵢ x)` with `kᵢ ≥ 1`, plus a constant.
#[derive(Clone, Debug)]
struct Terms {
    constant: Rational,
    waves: Vec<(i64, Rational, Wave)>,
}

impl Terms {
    fn range(&self, x: &RatInterval) -> RatInterval {
        let pi = pi_fixed();
        let xf = Fixed::from_rat(x);
        let mut acc = Fixed { lo: BigInt::zero(), hi: BigInt::zero() };
        for (k, c, wave) in &self.waves {
            let e = wave_fixed(*wave, &xf.scale_int(*k), &pi).scale_rat(c);
            acc.lo += e.lo;
            acc.hi += e.hi;
        }
        let r = acc.to_rat();
        RatInterval::new_unchecked(r.lo + &self.constant, r.hi + &self.constant)
    }
}

/// A trigonometric sum the interval prover can work on.
#[derive(Clone, Copy, Debug)]
pub enum TrigSum<'a> {
    Sine(&'a SinePoly),
    Cosine(&'a CosinePoly),
}

struct Prepared {
    f: Terms,
    df: Terms,
    at_zero: Rational,
    at_pi: Rational,
}

impl TrigSum<'_> {
    fn prepare(self) -> Prepared {
        match self {
            TrigSum::Sine(p) => {
                let mut f = Vec::new();
                let mut df = Vec::new();
                for (i, a) in p.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    let k = i as i64 + 1;
                    f.push((k, a.clone(), Wave::Sin));
                    df.push((k, a * int(k), Wave::Cos));
                }
                Prepared {
                    f: Terms { constant: Rational::zero(), waves: f },
                    df: Terms { constant: Rational::zero(), waves: df },
                    at_zero: Rational::zero(),
                    at_pi: Rational::zero(),
                }
            }
            TrigSum::Cosine(p) => {
                let mut f = Vec::new();
                let mut df = Vec::new();
                let mut at_zero = Rational::zero();
                let mut at_pi = Rational::zero();
                let mut constant = Rational::zero();
                for (i, a) in p.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    let k = i as i64;
                    if k == 0 {
                        constant = a.clone();
                    } else {
                        f.push((k, a.clone(), Wave::Cos));
                        df.push((k, -(a * int(k)), Wave::Sin));
                    }
                    at_zero += a;
                    if k % 2 == 0 {
                        at_pi += a;
                    } else {
                        at_pi -= a;
                    }
                }
                Prepared {
                    f: Terms { constant, waves: f },
                    df: Terms { constant: Rational::zero(), waves: df },
                    at_zero,
                    at_pi,
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Right {
    At(Rational),
    Pi,
}

struct Search<'a> {
    prep: &'a Prepared,
    max_depth: u32,
    leaves: usize,
    visited: usize,
    deepest: u32,
    inconclusive: bool,
}

enum NodeOutcome {
    Done,
    Negative(Witness),
}

impl Search<'_> {
    fn point(&self, x: &Rational) -> RatInterval {
        if x.is_zero() {
            return RatInterval::point(self.prep.at_zero.clone());
        }
        self.prep.f.range(&RatInterval::point(x.clone()))
    }

    fn visit(&mut self, a: Rational, right: Right, depth: u32) -> NodeOutcome {
        self.visited += 1;
        let pi = pi_enclosure();
        let (b_hi, b_mid) = match &right {
            Right::At(b) => (b.clone(), b.clone()),
            Right::Pi => (pi.hi.clone(), pi.lo.clone()),
        };
        let x = RatInterval::new_unchecked(a.clone(), b_hi.clone());
        let m = (&a + &b_mid) / int(2);

        let f_m = self.point(&m);
        if f_m.hi.is_negative() {
            return NodeOutcome::Negative(angle_witness(m, f_m.hi));
        }
        let f_a = self.point(&a);
        if f_a.hi.is_negative() {
            return NodeOutcome::Negative(angle_witness(a, f_a.hi));
        }

        let slope = self.prep.df.range(&x);
        let offsets = RatInterval::new_unchecked(&a - &m, &b_hi - &m);
        let centered = &f_m + &(&slope * &offsets);
        let direct = self.prep.f.range(&x);
        let f_x = direct.intersect(&centered).unwrap_or(direct);

        let f_b_lo = match &right {
            Right::Pi => self.prep.at_pi.clone(),
            Right::At(b) => self.point(b).lo,
        };
        let proven = !f_x.lo.is_negative()
            || (!f_a.lo.is_negative() && !slope.lo.is_negative())
            || (!f_b_lo.is_negative() && !slope.hi.is_positive());
        if proven {
            self.leaves += 1;
            self.deepest = self.deepest.max(depth);
            return NodeOutcome::Done;
        }
        if depth >= self.max_depth || self.visited >= MAX_NODES {
            self.leaves += 1;
            self.deepest = self.deepest.max(depth);
            self.inconclusive = true;
            return NodeOutcome::Done;
        }
        if let NodeOutcome::Negative(w) = self.visit(a, Right::At(m.clone()), depth + 1) {
            return NodeOutcome::Negative(w);
        }
        self.visit(m, right, depth + 1)
    }
}

fn angle_witness(point: Rational, upper: Rational) -> Witness {
    Witness {
        variable: WitnessVariable::Angle,
        angle: Some(crate::scalar::to_f64(&point)),
        point,
        value: upper,
        value_is_exact: false,
    }
}

fn run(prep: &Prepared, lo: Rational, right: Right, max_depth: u32) -> Verdict {
    let mut search = Search { prep, max_depth, leaves: 0, visited: 0, deepest: 0, inconclusive: false };
    match search.visit(lo, right, 0) {
        NodeOutcome::Negative(w) => Verdict { status: Status::Negative, witness: Some(w), certificate: None },
        NodeOutcome::Done if search.inconclusive => Verdict { status: Status::Inconclusive, witness: None, certificate: None },
        NodeOutcome::Done => Verdict {
            status: Status::Nonnegative,
            witness: None,
            certificate: Some(Certificate::Interval { leaves: search.leaves, max_depth_reached: search.deepest }),
        },
    }
}

/// Interval branch and bound for `Σ aₖ sin(kx) ≥ 0` on `[lo, hi]`,
/// `0 ≤ lo ≤ hi ≤ π_hi`. Returns negative only with a rational `x` whose
/// certified upper bound is below zero, and inconclusive when `max_depth`
/// bisections (or [`MAX_NODES`] subintervals in total) do not settle some subinterval.
pub fn branch_and_bound_nn(p: &SinePoly, lo: &Rational, hi: &Rational, max_depth: u32) -> Result<Verdict> {
    if lo.is_negative() || lo > hi || hi > &pi_enclosure().hi {
        return Err(Error::InvalidInterval(format!("need 0 <= lo <= hi <= pi, got [{lo}, {hi}]")));
    }
    let prep = TrigSum::Sine(p).prepare();
    Ok(run(&prep, lo.clone(), Right::At(hi.clone()), max_depth))
}

/// Interval branch and bound on the whole of `[0, π]`, with `π` itself as
/// the right endpoint: the last subinterval is closed off using the exact
/// value of the sum at `π` and a sign bound on its derivative.
pub fn branch_and_bound_full(p: TrigSum<'_>, max_depth: u32) -> Verdict {
    let prep = p.prepare();
    run(&prep, Rational::zero(), Right::Pi, max_depth)
}

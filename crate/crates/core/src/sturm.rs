//! Sturm chains over exact rationals: root counting and isolation, a complete
//! nonnegativity decision on an interval, and certified minimum enclosures.

use num_bigint::Sign;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::scalar::{int, pow10_inv, pow2_inv, to_f64};
use crate::zpoly::ZPoly;
use crate::{
    AlgPoly, Certificate, CosinePoly, Error, RatInterval, Rational, Result, Sample, SinePoly, Status,
    Verdict, Witness, WitnessVariable,
};

/// Default isolating-interval width, `2^-16`.
pub fn default_width() -> Rational {
    pow2_inv(16)
}

/// Default minimum-enclosure tolerance, `10^-9`.
pub fn default_tol() -> Rational {
    pow10_inv(9)
}

/// `p₀ = squarefree target, p₁ = p₀′, p_{i+1} = −rem(p_{i−1}, p_i)`, each
/// element stored as a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

impl SturmChain {
    /// Chain of the squarefree part of `p`.
    pub fn new(p: &AlgPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_squarefree(squarefree_z(&ZPoly::from_rational(p))))
    }

    fn from_squarefree(p0: ZPoly) -> Self {
        let mut chain = vec![p0.clone()];
        let d = p0.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let r = chain[n - 2].signed_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive());
            }
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The chain as rational polynomials (each a positive multiple of the
    /// textbook element).
    pub fn polys(&self) -> Vec<AlgPoly> {
        self.chain.iter().map(ZPoly::to_rational).collect()
    }

    fn target(&self) -> &ZPoly {
        &self.chain[0]
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Sign::NoSign;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open `(lo, hi]`.
    fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    /// Distinct roots in the open `(lo, hi)`.
    fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let at_hi = usize::from(self.target().sign_at(hi) == Sign::NoSign);
        self.count_half_open(lo, hi) - at_hi
    }

    fn isolate(&self, lo: &Rational, hi: &Rational, width: &Rational) -> Vec<RatInterval> {
        let p = self.target();
        let is_root = |x: &Rational| p.sign_at(x) == Sign::NoSign;
        let mut out = Vec::new();
        if lo == hi {
            if is_root(lo) {
                out.push(RatInterval::point(lo.clone()));
            }
            return out;
        }
        if is_root(lo) {
            out.push(RatInterval::point(lo.clone()));
        }
        if is_root(hi) {
            out.push(RatInterval::point(hi.clone()));
        }
        let two = int(2);
        let mut stack = vec![(lo.clone(), hi.clone(), self.count_open(lo, hi))];
        while let Some((a, b, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 && &(&b - &a) <= width && !is_root(&a) && !is_root(&b) {
                out.push(RatInterval::new_unchecked(a, b));
                continue;
            }
            let mid = (&a + &b) / &two;
            let mid_root = is_root(&mid);
            if mid_root {
                out.push(RatInterval::point(mid.clone()));
            }
            let left = self.count_open(&a, &mid);
            let right = count - left - usize::from(mid_root);
            stack.push((mid.clone(), b, right));
            stack.push((a, mid, left));
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }
}

fn squarefree_z(p: &ZPoly) -> ZPoly {
    let d = p.derivative();
    if d.is_zero() {
        return p.clone().primitive();
    }
    let g = p.gcd(&d);
    if g.degree() == 0 {
        return p.clone().primitive();
    }
    p.exact_quotient(&g)
}

/// `p / gcd(p, p′)` scaled to a primitive integer polynomial with the same
/// distinct roots as `p`.
pub fn squarefree_part(p: &AlgPoly) -> Result<AlgPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(squarefree_z(&ZPoly::from_rational(p)).to_rational())
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn count_roots(p: &AlgPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::InvalidInterval(format!("count_roots needs lo < hi, got [{lo}, {hi}]")));
    }
    Ok(SturmChain::new(p)?.count_half_open(lo, hi))
}

/// Number of distinct real roots of `p` in the closed `[lo, hi]`.
pub fn count_roots_closed(p: &AlgPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo > hi {
        return Err(Error::InvalidInterval(format!("lo {lo} exceeds hi {hi}")));
    }
    let chain = SturmChain::new(p)?;
    let at_lo = usize::from(chain.target().sign_at(lo) == Sign::NoSign);
    if lo == hi {
        return Ok(at_lo);
    }
    Ok(chain.count_half_open(lo, hi) + at_lo)
}

/// Disjoint intervals, one per distinct root in `[lo, hi]`, sorted
/// ascending. Each is either a degenerate point at an exact rational root or
/// an interval of width at most the requested width whose interior holds the
/// root and whose endpoints are not roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootIsolation {
    pub intervals: Vec<RatInterval>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

pub fn isolate_roots(p: &AlgPoly, lo: &Rational, hi: &Rational, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(Error::InvalidParameter(format!("isolation width must be positive, got {width}")));
    }
    if lo > hi {
        return Err(Error::InvalidInterval(format!("lo {lo} exceeds hi {hi}")));
    }
    let chain = SturmChain::new(p)?;
    Ok(RootIsolation { intervals: chain.isolate(lo, hi, width) })
}

/// Complete decision of `p ≥ 0` on `[lo, hi]` with the default isolation width.
pub fn is_nonneg_on(p: &AlgPoly, lo: &Rational, hi: &Rational) -> Result<Verdict> {
    is_nonneg_on_with(p, lo, hi, &default_width())
}

/// Isolates the distinct roots in `[lo, hi]` and evaluates `p` exactly at
/// `lo`, `hi` and the midpoint of every gap between consecutive isolating
/// intervals. The sign of `p` is constant between consecutive roots, so
/// these samples decide nonnegativity.
pub fn is_nonneg_on_with(p: &AlgPoly, lo: &Rational, hi: &Rational, width: &Rational) -> Result<Verdict> {
    decide(p, lo, hi, width, false)
}

/// Samples `lo`, `hi` and one point per gap between isolating intervals.
/// Interior samples are tested for a witness before the endpoints, in
/// ascending order or, with `descending`, from `hi` down.
fn decide(p: &AlgPoly, lo: &Rational, hi: &Rational, width: &Rational, descending: bool) -> Result<Verdict> {
    if lo > hi {
        return Err(Error::InvalidInterval(format!("lo {lo} exceeds hi {hi}")));
    }
    if p.is_zero() {
        return Ok(Verdict {
            status: Status::Nonnegative,
            witness: None,
            certificate: Some(Certificate::Sturm { roots: Vec::new(), samples: Vec::new() }),
        });
    }
    let roots = isolate_roots(p, lo, hi, width)?.intervals;
    let mut points = Vec::new();
    let two = int(2);
    let mut cursor = lo.clone();
    for r in &roots {
        if r.lo > cursor {
            points.push((&cursor + &r.lo) / &two);
        }
        cursor = r.hi.clone();
    }
    if hi > &cursor {
        points.push((&cursor + hi) / &two);
    }
    if descending {
        points.reverse();
    }
    points.push(lo.clone());
    if hi != lo {
        points.push(hi.clone());
    }

    let mut samples = Vec::with_capacity(points.len());
    for x in &points {
        let value = p.eval(x);
        if value.is_negative() {
            let x = x.clone();
            return Ok(Verdict {
                status: Status::Negative,
                witness: Some(Witness {
                    variable: WitnessVariable::AlgebraicX,
                    point: x,
                    value,
                    value_is_exact: true,
                    angle: None,
                }),
                certificate: None,
            });
        }
        samples.push(Sample { point: x.clone(), value });
    }
    samples.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(Verdict { status: Status::Nonnegative, witness: None, certificate: Some(Certificate::Sturm { roots, samples }) })
}

fn attach_angle(mut v: Verdict) -> Verdict {
    if let Some(w) = v.witness.as_mut() {
        w.angle = Some(to_f64(&w.point).clamp(-1.0, 1.0).acos());
    }
    v
}

/// Nonnegativity of `Σ aₖ sin(kx)` on `[0, π]`, decided on the reduced
/// polynomial over `X ∈ [-1, 1]`. Witnesses are in `X` with `x = arccos X`
/// attached; the first negative interior sample in increasing `x` is preferred.
pub fn certify_sine(p: &SinePoly) -> Verdict {
    let alg = p.to_algebraic();
    let v = decide(&alg, &-Rational::one(), &Rational::one(), &default_width(), true).expect("[-1, 1] is a valid interval");
    attach_angle(v)
}

/// Nonnegativity of `Σ aₖ cos(kx)` on `[0, π]`.
pub fn certify_cosine(p: &CosinePoly) -> Verdict {
    let alg = p.to_algebraic();
    let v = decide(&alg, &-Rational::one(), &Rational::one(), &default_width(), true).expect("[-1, 1] is a valid interval");
    attach_angle(v)
}

/// Interval of width `≤ tol` containing `min_{[lo, hi]} p`.
///
/// Candidates are the endpoint values and the critical points (roots of
/// `p′`). Each critical point is kept in an isolating interval `[a, b]`
/// around midpoint `m`; there `p` lies within `p(m) ± Σ_{k≥1} |qₖ| rᵏ` where
/// `q` is `p` re-expanded at `m` and `r = (b − a)/2`. Intervals are bisected
/// until the bound gap meets `tol`.
pub fn min_enclosure(p: &AlgPoly, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<RatInterval> {
    if !tol.is_positive() {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    if lo > hi {
        return Err(Error::InvalidInterval(format!("lo {lo} exceeds hi {hi}")));
    }
    let mut best_exact = p.eval(lo).min(p.eval(hi));
    if lo == hi {
        return Ok(RatInterval::point(best_exact));
    }
    let dp = p.derivative();
    if dp.is_zero() {
        return Ok(RatInterval::point(best_exact));
    }
    let dchain = SturmChain::new(&dp)?;
    let dsq = dchain.target().clone();
    let mut open: Vec<(Rational, Rational)> = Vec::new();
    for iv in dchain.isolate(lo, hi, &int(1)) {
        if iv.is_point() {
            best_exact = best_exact.min(p.eval(&iv.lo));
        } else {
            open.push((iv.lo, iv.hi));
        }
    }
    let two = int(2);
    loop {
        let mut lower = best_exact.clone();
        let mut bounds = Vec::with_capacity(open.len());
        for (a, b) in &open {
            let m = (a + b) / &two;
            let r = (b - a) / &two;
            let shifted = p.taylor_shift(&m);
            let q0 = shifted.coeffs().first().cloned().unwrap_or_else(Rational::zero);
            let mut spread = Rational::zero();
            let mut rpow = Rational::one();
            for c in shifted.coeffs().iter().skip(1) {
                rpow *= &r;
                spread += c.abs() * &rpow;
            }
            best_exact = best_exact.min(q0.clone());
            let lb = &q0 - &spread;
            lower = lower.min(lb.clone());
            bounds.push(lb);
        }
        let upper = best_exact.clone();
        if &(&upper - &lower) <= tol {
            return Ok(RatInterval::new_unchecked(lower, upper));
        }
        let threshold = &upper - tol;
        let mut next = Vec::with_capacity(open.len());
        for ((a, b), lb) in open.into_iter().zip(bounds) {
            if lb >= threshold {
                next.push((a, b));
                continue;
            }
            let m = (&a + &b) / &two;
            let sm = dsq.sign_at(&m);
            if sm == Sign::NoSign {
                best_exact = best_exact.min(p.eval(&m));
            } else if sm != dsq.sign_at(&a) {
                next.push((a, m));
            } else {
                next.push((m, b));
            }
        }
        open = next;
    }
}

/// Convenience: `Polynomial` from integer coefficients, constant first.
pub fn alg_from_ints(c: &[i64]) -> AlgPoly {
    Polynomial::new(c.iter().map(|&v| int(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn alg(c: &[Rational]) -> AlgPoly {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn squarefree_examples() {
        let sq = squarefree_part(&alg_from_ints(&[1, 2, 1])).unwrap();
        assert_eq!(sq, alg_from_ints(&[1, 1]));
        let quarter = alg(&[rat(-1, 4), int(0), int(1)]);
        assert_eq!(squarefree_part(&quarter).unwrap(), alg_from_ints(&[-1, 0, 4]));
        // (X − 1/3)²(X + 2) = X³ + (4/3)X² − (11/9)X + 2/9
        let p = alg(&[rat(2, 9), rat(-11, 9), rat(4, 3), int(1)]);
        let sq = squarefree_part(&p).unwrap();
        // (3X − 1)(X + 2) = 3X² + 5X − 2
        assert!(sq == alg_from_ints(&[-2, 5, 3]) || sq == alg_from_ints(&[2, -5, -3]));
        assert_eq!(squarefree_part(&AlgPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn root_counts() {
        let (m1, p1) = (int(-1), int(1));
        assert_eq!(count_roots(&alg(&[rat(-1, 4), int(0), int(1)]), &m1, &p1).unwrap(), 2);
        assert_eq!(count_roots(&alg_from_ints(&[1, 0, 1]), &m1, &p1).unwrap(), 0);
        assert_eq!(count_roots(&alg_from_ints(&[1, 2, 1]), &int(-2), &int(0)).unwrap(), 1);
        assert!(count_roots(&AlgPoly::zero(), &m1, &p1).is_err());
        assert!(count_roots(&alg_from_ints(&[1]), &p1, &m1).is_err());
        // half-open convention: root at lo not counted, root at hi counted
        let x_plus_1 = alg_from_ints(&[1, 1]);
        assert_eq!(count_roots(&x_plus_1, &m1, &p1).unwrap(), 0);
        assert_eq!(count_roots(&x_plus_1, &int(-2), &m1).unwrap(), 1);
        assert_eq!(count_roots_closed(&x_plus_1, &m1, &p1).unwrap(), 1);
    }

    #[test]
    fn isolation() {
        let w = rat(1, 100);
        let iso = isolate_roots(&alg(&[rat(-1, 4), int(0), int(1)]), &int(-1), &int(1), &w).unwrap();
        assert_eq!(iso.len(), 2);
        assert!(iso.intervals[0].contains(&rat(-1, 2)));
        assert!(iso.intervals[1].contains(&rat(1, 2)));
        for iv in &iso.intervals {
            assert!(iv.width() <= w);
        }
        let endpoint = isolate_roots(&alg_from_ints(&[1, 1]), &int(-1), &int(1), &w).unwrap();
        assert_eq!(endpoint.intervals, vec![RatInterval::point(int(-1))]);
        assert!(isolate_roots(&alg_from_ints(&[1, 0, 1]), &int(-1), &int(1), &w).unwrap().is_empty());
        assert!(isolate_roots(&alg_from_ints(&[1, 1]), &int(-1), &int(1), &int(0)).is_err());
    }

    #[test]
    fn isolating_endpoints_avoid_roots() {
        // roots at 0 (the first midpoint), 1/3 and -1/7
        let p = &(&alg_from_ints(&[0, 1]) * &alg_from_ints(&[-1, 3])) * &alg_from_ints(&[1, 7]);
        let iso = isolate_roots(&p, &int(-1), &int(1), &rat(1, 2)).unwrap();
        assert_eq!(iso.len(), 3);
        for iv in &iso.intervals {
            if !iv.is_point() {
                assert!(!p.eval(&iv.lo).is_zero() && !p.eval(&iv.hi).is_zero());
            }
        }
        for pair in iso.intervals.windows(2) {
            assert!(pair[0].hi <= pair[1].lo);
        }
    }

    #[test]
    fn nonnegativity_decisions() {
        let (m1, p1) = (int(-1), int(1));
        let v = is_nonneg_on(&alg_from_ints(&[1, 2, 1]), &m1, &p1).unwrap();
        assert_eq!(v.status, Status::Nonnegative);
        let q = alg(&[rat(99, 100), int(2), int(1)]);
        let v = is_nonneg_on(&q, &m1, &p1).unwrap();
        assert_eq!(v.status, Status::Negative);
        let w = v.witness.unwrap();
        assert!(q.eval(&w.point).is_negative());
        assert_eq!(w.value, q.eval(&w.point));
        assert!(to_f64(&w.point) < -0.8);
        assert_eq!(is_nonneg_on(&AlgPoly::zero(), &m1, &p1).unwrap().status, Status::Nonnegative);
        assert!(is_nonneg_on(&q, &p1, &m1).is_err());
    }

    #[test]
    fn point_interval_decision() {
        let q = alg_from_ints(&[0, 1]);
        assert_eq!(is_nonneg_on(&q, &int(0), &int(0)).unwrap().status, Status::Nonnegative);
        assert_eq!(is_nonneg_on(&q, &int(-1), &int(-1)).unwrap().status, Status::Negative);
    }

    #[test]
    fn minimum_enclosures() {
        let tol = default_tol();
        let (m1, p1) = (int(-1), int(1));
        // 2X² + 2X + (κ − 1/2) at κ = 1: minimum 0 at X = -1/2
        let p = alg(&[rat(1, 2), int(2), int(2)]);
        let e = min_enclosure(&p, &m1, &p1, &tol).unwrap();
        assert!(e.contains(&int(0)) && e.width() <= tol);
        let e = min_enclosure(&alg_from_ints(&[1, 2, 1]), &m1, &p1, &tol).unwrap();
        assert!(e.contains(&int(0)) && e.width() <= tol);
        let e = min_enclosure(&alg_from_ints(&[0, 1]), &m1, &p1, &tol).unwrap();
        assert!(e.contains(&int(-1)) && e.width() <= tol);
        let e = min_enclosure(&alg_from_ints(&[3, 1]), &p1, &p1, &tol).unwrap();
        assert_eq!(e, RatInterval::point(int(4)));
        assert!(min_enclosure(&p, &m1, &p1, &int(0)).is_err());
    }

    #[test]
    fn irrational_minimum_is_enclosed() {
        // X³ − X has minimum −2/(3√3) at X = 1/√3
        let p = alg_from_ints(&[0, -1, 0, 1]);
        let tol = rat(1, 1_000_000_000_000);
        let e = min_enclosure(&p, &int(-1), &int(1), &tol).unwrap();
        let exact = -2.0 / (3.0 * 3f64.sqrt());
        assert!(e.contains_f64(exact, 1e-15));
        assert!(e.width() <= tol);
    }

    #[test]
    fn chain_shape() {
        let chain = SturmChain::new(&alg_from_ints(&[-1, 0, 0, 1, 1])).unwrap();
        let polys = chain.polys();
        for pair in polys.windows(2) {
            assert!(pair[0].degree() > pair[1].degree());
        }
        assert_eq!(polys.last().unwrap().degree(), Some(0));
    }
}

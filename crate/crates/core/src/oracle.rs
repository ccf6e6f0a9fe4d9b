//! Floating-point and sampling cross-checks for tests: dense minima, seeded
//! random polynomials and a grid sign-change root counter.

use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::poly::{eval_rational, EvalFloat};
use crate::scalar::{int, rat};
use crate::sturm::{isolate_roots, squarefree_part};
use crate::{AlgPoly, Error, Rational, Result, SinePoly};

/// Sampled minimum of a trigonometric sum over `[0, π]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport {
    pub min_value: f64,
    pub argmin_x: f64,
    pub samples: usize,
}

/// Minimum of `p` over `m ≥ 2` equally spaced points of `[0, π]`, endpoints included.
pub fn dense_min<P: EvalFloat + ?Sized>(p: &P, m: usize) -> Result<SampleReport> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("dense_min needs m >= 2, got {m}")));
    }
    let step = std::f64::consts::PI / (m - 1) as f64;
    let mut report = SampleReport { min_value: f64::INFINITY, argmin_x: 0.0, samples: m };
    for i in 0..m {
        let x = if i == m - 1 { std::f64::consts::PI } else { i as f64 * step };
        let v = p.eval_float(x);
        if v < report.min_value {
            report.min_value = v;
            report.argmin_x = x;
        }
    }
    Ok(report)
}

/// Seeded `Σ aₖ sin(kx)` of the given degree with `aₖ = p/q`,
/// `p ∈ [−magnitude, magnitude]`, `q ∈ [1, magnitude]`.
pub fn random_sine_poly(degree: usize, magnitude: u32, seed: u64) -> Result<SinePoly> {
    if degree == 0 {
        return Err(Error::InvalidParameter("random_sine_poly needs degree >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = i64::from(magnitude);
    let coeffs = (0..degree)
        .map(|_| {
            let p = rng.gen_range(-m..=m);
            let q = rng.gen_range(1..=m.max(1));
            rat(p, q)
        })
        .collect();
    SinePoly::new(coeffs)
}

/// Seeded integer polynomial of degree in `[1, max_degree]` with coefficients
/// in `[−magnitude, magnitude]` and a nonzero leading coefficient.
pub fn random_int_poly(max_degree: usize, magnitude: u32, seed: u64) -> Result<AlgPoly> {
    if max_degree == 0 || magnitude == 0 {
        return Err(Error::InvalidParameter("random_int_poly needs max_degree, magnitude >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = i64::from(magnitude);
    let degree = rng.gen_range(1..=max_degree);
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| int(rng.gen_range(-m..=m))).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-m..=m);
    }
    coeffs.push(int(lead));
    Ok(AlgPoly::new(coeffs))
}

/// Number of roots of `p` seen on the grid `xᵢ = −1 + 2i/cells`, `0 ≤ i ≤ cells`:
/// grid points where `p` vanishes plus sign changes between consecutive nonzero samples.
/// Signs come from `f64` Horner evaluation and are recomputed exactly whenever the
/// value is within a rounding-error bound of zero.
pub fn grid_root_count(p: &AlgPoly, cells: usize) -> Result<usize> {
    if cells == 0 {
        return Err(Error::InvalidParameter("grid needs at least one cell".into()));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let d = coeffs.len() as f64;
    let abs_sum: f64 = coeffs.iter().map(|c| c.abs()).sum();
    let slope_sum: f64 = coeffs.iter().enumerate().map(|(k, c)| k as f64 * c.abs()).sum();
    let bound = (4.0 * (d + 1.0) * abs_sum + slope_sum) * f64::EPSILON;
    let sign_at = |i: usize| -> i8 {
        let x = -1.0 + 2.0 * i as f64 / cells as f64;
        let v = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        if v.abs() > bound {
            return if v > 0.0 { 1 } else { -1 };
        }
        let exact = eval_rational(p, &rat(2 * i as i64 - cells as i64, cells as i64));
        if exact.is_zero() {
            0
        } else if exact.is_positive() {
            1
        } else {
            -1
        }
    };
    let mut count = 0;
    let mut prev = 0i8;
    for i in 0..=cells {
        let s = sign_at(i);
        if s == 0 || (prev != 0 && s != prev) {
            count += 1;
        }
        prev = s;
    }
    Ok(count)
}

/// True when `p` is squarefree and its real roots in `[−1, 1]` are pairwise at
/// least `2·step` apart, so that grid counting with cell size `step` is reliable.
pub fn well_separated(p: &AlgPoly, step: &Rational) -> Result<bool> {
    let sf = squarefree_part(p)?;
    if sf.degree() != p.degree() {
        return Ok(false);
    }
    let iso = isolate_roots(p, &int(-1), &int(1), &(step / int(4)))?;
    let gap = step * int(2);
    Ok(iso.intervals.windows(2).all(|w| &w[1].lo - &w[0].hi >= gap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{phi, sigma};
    use crate::sturm::{alg_from_ints, count_roots_closed};
    use crate::SinePolyF64;

    #[test]
    fn dense_min_examples() {
        let r = dense_min(&sigma(4).unwrap(), 10_000).unwrap();
        assert!(r.min_value >= -1e-9);
        let r = dense_min(&SinePolyF64::new(vec![-1.0]).unwrap(), 10_000).unwrap();
        assert!((r.min_value + 1.0).abs() < 1e-6);
        assert!((r.argmin_x - std::f64::consts::FRAC_PI_2).abs() < 1e-3);
        let r = dense_min(&phi(3).unwrap(), 10_000).unwrap();
        assert!(r.min_value >= -1e-9);
        assert_eq!(r.samples, 10_000);
        assert!(dense_min(&sigma(4).unwrap(), 1).is_err());
    }

    #[test]
    fn random_sine_is_deterministic() {
        let a = random_sine_poly(3, 9, 42).unwrap();
        assert_eq!(a, random_sine_poly(3, 9, 42).unwrap());
        assert_eq!(a.degree(), 3);
        for c in a.coeffs() {
            assert!(c.numer().abs() <= 9.into() && c.denom() <= &9.into());
        }
        let one = random_sine_poly(1, 1, 7).unwrap();
        assert!(one.coeffs()[0].abs() <= int(1));
        assert!(random_sine_poly(0, 3, 1).is_err());
    }

    #[test]
    fn seeds_rarely_collide() {
        let polys: Vec<_> = (0..1000).map(|s| random_sine_poly(3, 9, s).unwrap()).collect();
        let mut distinct = polys.iter().map(|p| format!("{:?}", p.coeffs())).collect::<Vec<_>>();
        distinct.sort();
        distinct.dedup();
        assert!(distinct.len() >= 990);
    }

    #[test]
    fn grid_counts_simple_roots() {
        // (2x − 1)(x + 1/3)(x − 2): roots 1/2 and −1/3 in [−1, 1]
        let p = &(&alg_from_ints(&[-1, 2]) * &AlgPoly::new(vec![rat(1, 3), int(1)])) * &alg_from_ints(&[-2, 1]);
        assert_eq!(grid_root_count(&p, 1000).unwrap(), 2);
        assert_eq!(grid_root_count(&alg_from_ints(&[-1, 0, 1]), 10).unwrap(), 2);
        assert!(well_separated(&p, &rat(1, 500)).unwrap());
        assert!(!well_separated(&alg_from_ints(&[1, 2, 1]), &rat(1, 500)).unwrap());
        for seed in 0..40 {
            let p = random_int_poly(8, 9, seed).unwrap();
            if well_separated(&p, &rat(1, 500)).unwrap() {
                assert_eq!(grid_root_count(&p, 1000).unwrap(), count_roots_closed(&p, &int(-1), &int(1)).unwrap());
            }
        }
    }
}

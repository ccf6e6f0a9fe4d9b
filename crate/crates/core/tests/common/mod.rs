#![allow(dead_code)]

use proptest::prelude::*;
use trignn::scalar::rat;
use trignn::Rational;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

pub fn small_coeffs(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 1..=max_len)
}

pub fn grid_min_on(p: &trignn::AlgPoly, lo: f64, hi: f64, points: usize) -> f64 {
    let c: Vec<f64> = p.coeffs().iter().map(trignn::scalar::to_f64).collect();
    (0..points)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
            c.iter().rev().fold(0.0, |acc, a| acc * x + a)
        })
        .fold(f64::INFINITY, f64::min)
}

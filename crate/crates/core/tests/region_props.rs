use num_traits::Zero;
use proptest::prelude::*;
use trignn::families::phi_last;
use trignn::region::{cosine2_characterize, cosine2_poly, degree3_characterize, kappa0, membership, odd_line, RegionQuery};
use trignn::scalar::{int, rat};
use trignn::sturm::{certify_cosine, certify_sine};
use trignn::{Rational, SinePoly, Status};

fn member(n: usize, kappa: Rational, lambda: Rational) -> Status {
    membership(&RegionQuery::new(n, kappa, lambda).unwrap()).status
}

fn quarter_grid() -> Vec<Rational> {
    (-8..=8).map(|k| rat(k, 4)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn membership_is_monotone_in_kappa(n in 3usize..=7, k in -8i64..=16, l in 0i64..=12, d in 1i64..=16) {
        let (kappa, lambda) = (rat(k, 4), rat(l, 8));
        if member(n, kappa.clone(), lambda.clone()) == Status::Nonnegative {
            prop_assert_eq!(member(n, kappa + rat(d, 8), lambda), Status::Nonnegative);
        }
    }
}

#[test]
fn boundary_is_sharp() {
    let tol = rat(1, 1000);
    for n in 3..=6 {
        for l in 1..=12 {
            let lambda = rat(l, 8);
            let b = kappa0(n, &lambda, &tol).unwrap();
            assert!(b.kappa0.width() <= tol);
            assert_eq!(member(n, &b.kappa0.hi + &tol, lambda.clone()), Status::Nonnegative, "n={n} λ={lambda}");
            assert_eq!(member(n, b.kappa0.hi.clone(), lambda.clone()), Status::Nonnegative, "n={n} λ={lambda}");
            assert_eq!(member(n, &b.kappa0.lo - &tol, lambda.clone()), Status::Negative, "n={n} λ={lambda}");
        }
    }
}

#[test]
fn degree3_characterization_matches_sturm() {
    let g = quarter_grid();
    for a in &g {
        for b in &g {
            for c in &g {
                let p = SinePoly::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
                assert_eq!(degree3_characterize(a, b, c).holds, certify_sine(&p).is_nonnegative(), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn cosine2_characterization_matches_sturm() {
    let g = quarter_grid();
    for a in &g {
        for b in &g {
            for c in &g {
                let p = cosine2_poly(a, b, c);
                assert_eq!(cosine2_characterize(a, b, c).holds, certify_cosine(&p).is_nonnegative(), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn odd_line_kills_the_alternating_sum() {
    for n in (3..=11).step_by(2) {
        for l in 0..=8 {
            let lambda = rat(l, 16);
            let p = trignn::families::kappa_lambda(n, odd_line(n, &lambda), lambda).unwrap();
            let s: Rational = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 0 { a * int(i as i64 + 1) } else { -(a * int(i as i64 + 1)) })
                .sum();
            assert!(s.is_zero());
        }
    }
}

#[test]
fn odd_line_fails_past_its_range() {
    for n in (3..=9).step_by(2) {
        for lambda in [phi_last(n) + rat(1, 10), rat(3, 5)] {
            assert_eq!(member(n, odd_line(n, &lambda), lambda.clone()), Status::Negative, "n={n} λ={lambda}");
        }
        assert_eq!(member(n, int(1), rat(3, 4)), Status::Negative, "n={n}");
    }
}

use trignn::families::{kappa_lambda, phi, phi_last, sigma, theta, Sign};
use trignn::poly::eval_float;
use trignn::scalar::rat;
use trignn::sturm::certify_sine;

#[test]
fn phi_is_a_region_slice() {
    for n in (3..=21).step_by(2) {
        assert_eq!(phi(n).unwrap(), kappa_lambda(n, rat(5, 4), phi_last(n)).unwrap());
    }
}

#[test]
fn sigma_closed_form() {
    for n in 2..=15 {
        let s = sigma(n).unwrap();
        for i in 1..1000 {
            let x = std::f64::consts::PI * i as f64 / 1000.0;
            let lhs = eval_float(&s, x) * 2.0 * (x / 2.0).sin();
            let rhs = (x / 2.0).cos() * (1.0 - (n as f64 * x).cos());
            assert!((lhs - rhs).abs() <= 1e-9, "n={n} x={x}");
        }
    }
}

#[test]
fn theta_is_nonnegative() {
    for n in 2..=20 {
        for sign in [Sign::Plus, Sign::Minus] {
            assert!(certify_sine(&theta(n, sign).unwrap()).is_nonnegative(), "n={n} {sign:?}");
        }
    }
}

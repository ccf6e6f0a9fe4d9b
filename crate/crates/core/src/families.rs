//! Constructors for the named sine polynomials.

use std::fmt;
use std::str::FromStr;

use crate::criteria::vietoris_coefficients;
use crate::scalar::{int, parse_rational, rat};
use crate::{Error, Rational, Result, SinePoly};

/// `[5/4, 1, …, 1, (2n−3)/(4n)]_s` for odd `n ≥ 3`.
pub fn phi(n: usize) -> Result<SinePoly> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("phi needs odd n >= 3, got {n}")));
    }
    kappa_lambda(n, rat(5, 4), phi_last(n))
}

/// Last coefficient of `phi(n)`, `(2n−3)/(4n)`.
pub fn phi_last(n: usize) -> Rational {
    let n = n as i64;
    rat(2 * n - 3, 4 * n)
}

/// `[1, …, 1, 1/2]_s` of degree `n ≥ 2`.
pub fn sigma(n: usize) -> Result<SinePoly> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("sigma needs n >= 2, got {n}")));
    }
    let mut c = vec![int(1); n];
    c[n - 1] = rat(1, 2);
    SinePoly::new(c)
}

/// `n sin(x) + sign·sin(nx)`.
pub fn theta(n: usize, sign: Sign) -> Result<SinePoly> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("theta needs n >= 2, got {n}")));
    }
    let mut c = vec![int(0); n];
    c[0] = int(n as i64);
    c[n - 1] = match sign {
        Sign::Plus => int(1),
        Sign::Minus => int(-1),
    };
    SinePoly::new(c)
}

/// `[n, n−1, …, 1]_s`.
pub fn lukacs(n: usize) -> Result<SinePoly> {
    if n < 1 {
        return Err(Error::InvalidParameter("lukacs needs n >= 1".into()));
    }
    SinePoly::new((1..=n as i64).rev().map(int).collect())
}

/// Vietoris coefficients `a₁, …, aₙ` used as a sine polynomial.
pub fn vietoris(n: usize) -> Result<SinePoly> {
    SinePoly::new(vietoris_coefficients(n)?)
}

/// `[κ, 1, …, 1, λ]_s` with `n ≥ 3`.
pub fn kappa_lambda(n: usize, kappa: Rational, lambda: Rational) -> Result<SinePoly> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("kappa_lambda needs n >= 3, got {n}")));
    }
    let mut c = vec![int(1); n];
    c[0] = kappa;
    c[n - 1] = lambda;
    SinePoly::new(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A named family member, parsed from strings such as `phi:5`, `theta-:3`
/// or `kappa-lambda:4:1:1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyId {
    Phi(usize),
    Sigma(usize),
    Theta(usize, Sign),
    Lukacs(usize),
    Vietoris(usize),
    KappaLambda { n: usize, kappa: Rational, lambda: Rational },
}

impl FamilyId {
    pub fn build(&self) -> Result<SinePoly> {
        match self {
            FamilyId::Phi(n) => phi(*n),
            FamilyId::Sigma(n) => sigma(*n),
            FamilyId::Theta(n, s) => theta(*n, *s),
            FamilyId::Lukacs(n) => lukacs(*n),
            FamilyId::Vietoris(n) => vietoris(*n),
            FamilyId::KappaLambda { n, kappa, lambda } => kappa_lambda(*n, kappa.clone(), lambda.clone()),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let parts: Vec<&str> = s.trim().split(':').collect();
        let n: usize = parts
            .get(1)
            .ok_or_else(|| err("missing degree, expected e.g. phi:5"))?
            .trim()
            .parse()
            .map_err(|_| err("degree is not a nonnegative integer"))?;
        let arity = |k: usize| if parts.len() == k { Ok(()) } else { Err(err("wrong number of fields")) };
        let id = match parts[0].trim() {
            "phi" => FamilyId::Phi(n),
            "sigma" => FamilyId::Sigma(n),
            "theta-" => FamilyId::Theta(n, Sign::Minus),
            "theta+" => FamilyId::Theta(n, Sign::Plus),
            "lukacs" => FamilyId::Lukacs(n),
            "vietoris" => FamilyId::Vietoris(n),
            "kappa-lambda" => {
                arity(4)?;
                let kappa = parse_rational(parts[2])?;
                let lambda = parse_rational(parts[3])?;
                return Ok(FamilyId::KappaLambda { n, kappa, lambda });
            }
            _ => return Err(err("unknown family")),
        };
        arity(2)?;
        Ok(id)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Phi(n) => write!(f, "phi:{n}"),
            FamilyId::Sigma(n) => write!(f, "sigma:{n}"),
            FamilyId::Theta(n, Sign::Minus) => write!(f, "theta-:{n}"),
            FamilyId::Theta(n, Sign::Plus) => write!(f, "theta+:{n}"),
            FamilyId::Lukacs(n) => write!(f, "lukacs:{n}"),
            FamilyId::Vietoris(n) => write!(f, "vietoris:{n}"),
            FamilyId::KappaLambda { n, kappa, lambda } => write!(f, "kappa-lambda:{n}:{kappa}:{lambda}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm::certify_sine;
    use crate::Status;

    fn coeffs(p: &SinePoly) -> Vec<Rational> {
        p.coeffs().to_vec()
    }

    #[test]
    fn phi_members() {
        assert_eq!(coeffs(&phi(3).unwrap()), vec![rat(5, 4), int(1), rat(1, 4)]);
        assert_eq!(coeffs(&phi(5).unwrap()), vec![rat(5, 4), int(1), int(1), int(1), rat(7, 20)]);
        assert_eq!(phi(9).unwrap().coeff(9), rat(5, 12));
        assert!(phi(4).is_err());
        assert!(phi(1).is_err());
        for n in (3..=31).step_by(2) {
            assert_eq!(phi(n).unwrap(), kappa_lambda(n, rat(5, 4), rat(2 * n as i64 - 3, 4 * n as i64)).unwrap());
        }
    }

    #[test]
    fn sigma_members() {
        assert_eq!(coeffs(&sigma(3).unwrap()), vec![int(1), int(1), rat(1, 2)]);
        assert_eq!(coeffs(&sigma(2).unwrap()), vec![int(1), rat(1, 2)]);
        assert_eq!(coeffs(&sigma(6).unwrap()).len(), 6);
        assert!(sigma(1).is_err());
        assert_eq!(kappa_lambda(4, int(1), rat(1, 2)).unwrap(), sigma(4).unwrap());
    }

    #[test]
    fn theta_and_lukacs() {
        assert_eq!(coeffs(&theta(3, Sign::Minus).unwrap()), vec![int(3), int(0), int(-1)]);
        assert_eq!(coeffs(&theta(4, Sign::Plus).unwrap()), vec![int(4), int(0), int(0), int(1)]);
        assert_eq!(coeffs(&theta(2, Sign::Minus).unwrap()), vec![int(2), int(-1)]);
        assert_eq!(coeffs(&lukacs(3).unwrap()), vec![int(3), int(2), int(1)]);
        assert_eq!(coeffs(&lukacs(1).unwrap()), vec![int(1)]);
        assert_eq!(coeffs(&kappa_lambda(5, int(0), int(0)).unwrap()), vec![int(0), int(1), int(1), int(1), int(0)]);
        assert_eq!(kappa_lambda(3, rat(5, 4), rat(1, 4)).unwrap(), phi(3).unwrap());
        assert!(kappa_lambda(2, int(1), int(1)).is_err());
    }

    #[test]
    fn theta_is_nonnegative() {
        for n in 2..=20 {
            for s in [Sign::Plus, Sign::Minus] {
                assert_eq!(certify_sine(&theta(n, s).unwrap()).status, Status::Nonnegative, "theta({n}, {s:?})");
            }
        }
    }

    #[test]
    fn sigma_closed_form() {
        use crate::poly::EvalFloat;
        for n in 2..=12 {
            let s = sigma(n).unwrap();
            for i in 1..200 {
                let x = std::f64::consts::PI * i as f64 / 200.0;
                let lhs = s.eval_float(x) * 2.0 * (x / 2.0).sin();
                let rhs = (x / 2.0).cos() * (1.0 - (n as f64 * x).cos());
                assert!((lhs - rhs).abs() <= 1e-9, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn family_ids_parse() {
        assert_eq!("phi:5".parse::<FamilyId>().unwrap(), FamilyId::Phi(5));
        assert_eq!("theta-:2".parse::<FamilyId>().unwrap(), FamilyId::Theta(2, Sign::Minus));
        let kl: FamilyId = "kappa-lambda:4:1:1/2".parse().unwrap();
        assert_eq!(kl.build().unwrap(), sigma(4).unwrap());
        assert_eq!(kl.to_string(), "kappa-lambda:4:1:1/2");
        assert!("phi".parse::<FamilyId>().is_err());
        assert!("phi:x".parse::<FamilyId>().is_err());
        assert!("psi:3".parse::<FamilyId>().is_err());
        assert!("sigma:3:1".parse::<FamilyId>().is_err());
        assert!("kappa-lambda:4:0.5:1".parse::<FamilyId>().is_err());
    }
}

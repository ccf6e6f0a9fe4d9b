//! Exact nonnegativity certification for sine and cosine polynomials on `[0, π]`.
//!
//! A sine polynomial `Σ aₖ sin(kx)` is nonnegative on `[0, π]` exactly when the
//! algebraic polynomial `P` with `Σ aₖ sin(kx) = sin(x)·P(cos x)` is nonnegative
//! on `[-1, 1]`; cosine polynomials reduce to `Q(cos x)` directly. The reduced
//! polynomial is then decided with Sturm chains over exact rationals.
//!
//! The polynomial containers in [`poly`] are generic over the coefficient
//! scalar; the aliases below fix the exact instantiation used by every
//! certified path and an `f64` instantiation for plotting and oracles.
//!
//! ```
//! use trignn::{families, sturm, Status};
//!
//! let phi = families::phi(5).unwrap();
//! assert_eq!(sturm::certify_sine(&phi).status, Status::Nonnegative);
//! ```

pub mod bounds;
pub mod criteria;
mod error;
pub mod families;
pub mod interval;
pub mod oracle;
pub mod poly;
pub mod region;
pub mod scalar;
pub mod sturm;
mod verdict;
mod zpoly;

pub use error::{Error, Result};
pub use interval::RatInterval;
pub use verdict::{Certificate, Sample, Status, Verdict, Witness, WitnessVariable};

/// Exact arbitrary-precision fraction, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `Σ aₖ sin(kx)` with exact coefficients.
pub type SinePoly = poly::SineSum<Rational>;
/// `Σ aₖ cos(kx)` with exact coefficients.
pub type CosinePoly = poly::CosineSum<Rational>;
/// Dense polynomial in `X = cos(x)` with exact coefficients.
pub type AlgPoly = poly::Polynomial<Rational>;

pub type SinePolyF64 = poly::SineSum<f64>;
pub type CosinePolyF64 = poly::CosineSum<f64>;
pub type AlgPolyF64 = poly::Polynomial<f64>;

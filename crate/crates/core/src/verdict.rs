use serde::{Serialize, Serializer};

use crate::{RatInterval, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Nonnegative,
    Negative,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Nonnegative => "nonnegative",
            Status::Negative => "negative",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Which variable a witness point is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessVariable {
    /// `X = cos(x)` of the reduced algebraic polynomial.
    AlgebraicX,
    /// The angle `x` itself.
    Angle,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub variable: WitnessVariable,
    #[serde(serialize_with = "ser_rat")]
    pub point: Rational,
    /// Exact value for Sturm witnesses; a certified upper bound (still `< 0`)
    /// for interval witnesses.
    #[serde(serialize_with = "ser_rat")]
    pub value: Rational,
    pub value_is_exact: bool,
    /// `arccos(point)` for algebraic witnesses, `point` for angle witnesses.
    pub angle: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    #[serde(serialize_with = "ser_rat")]
    pub point: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Isolating intervals of the distinct roots in the query interval and a
    /// nonnegative exact sample in every sign-constant gap between them.
    Sturm { roots: Vec<RatInterval>, samples: Vec<Sample> },
    /// Every leaf of the subdivision had a nonnegative certified lower bound.
    Interval { leaves: usize, max_depth_reached: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn is_nonnegative(&self) -> bool {
        self.status == Status::Nonnegative
    }

    pub fn is_negative(&self) -> bool {
        self.status == Status::Negative
    }
}

pub(crate) fn ser_rat<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

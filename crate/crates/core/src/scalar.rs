//! Field elements: the two-element field and the exact rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Which field a matrix lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    F2,
    Q,
}

impl Field {
    pub fn tag(self) -> &'static str {
        match self {
            Field::F2 => "f2",
            Field::Q => "q",
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f2" | "F2" | "gf2" => Ok(Field::F2),
            "q" | "Q" => Ok(Field::Q),
            other => Err(format!("unknown field {other:?} (expected f2 or q)")),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Operations Gaussian elimination needs from a field.
pub trait FieldElement: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

/// An element of GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2(pub bool);

impl FieldElement for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gf2(self.0 & rhs.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
}

impl FieldElement for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// A tagged scalar as returned by determinant and accepted by vector checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    F2(bool),
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::F2(_) => Field::F2,
            Scalar::Q(_) => Field::Q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::F2(b) => !b,
            Scalar::Q(q) => Zero::is_zero(q),
        }
    }

    pub fn zero(field: Field) -> Self {
        match field {
            Field::F2 => Scalar::F2(false),
            Field::Q => Scalar::Q(Zero::zero()),
        }
    }

    pub fn one(field: Field) -> Self {
        match field {
            Field::F2 => Scalar::F2(true),
            Field::Q => Scalar::Q(One::one()),
        }
    }

    pub fn integer(field: Field, v: i64) -> Self {
        match field {
            Field::F2 => Scalar::F2(v.rem_euclid(2) == 1),
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Q(BigRational::new(num.into(), den.into()))
    }

    /// Exact quotient; `None` when dividing by zero or mixing fields.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        match (self, rhs) {
            (Scalar::F2(a), Scalar::F2(b)) => b.then_some(Scalar::F2(*a)),
            (Scalar::Q(a), Scalar::Q(b)) => (!Zero::is_zero(b)).then(|| Scalar::Q(a / b)),
            _ => None,
        }
    }

    /// Parses `0|1` for GF(2) or `int` / `p/q` for the rationals.
    pub fn parse(field: Field, text: &str) -> Result<Scalar, String> {
        match field {
            Field::F2 => match text {
                "0" => Ok(Scalar::F2(false)),
                "1" => Ok(Scalar::F2(true)),
                _ => Err(format!("GF(2) entry must be 0 or 1, got {text:?}")),
            },
            Field::Q => parse_rational(text).map(Scalar::Q),
        }
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational, String> {
    let bad = || format!("bad rational entry {text:?}");
    match text.split_once('/') {
        None => BigInt::from_str(text).map(BigRational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Writes `p/q` with a positive denominator, or just `p` for integers.
pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        debug_assert!(q.denom().is_positive());
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::F2(b) => write!(f, "{}", u8::from(*b)),
            Scalar::Q(q) => f.write_str(&format_rational(q)),
        }
    }
}

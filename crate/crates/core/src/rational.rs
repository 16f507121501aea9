//! Exact rational scalars and their `"p/q"` string encoding.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for `num/den` with small integer parts.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    q(1, 2)
}

/// Sign with `sgn(0) = 0`.
pub fn sgn(x: &Rational) -> Rational {
    if x.is_zero() {
        Rational::zero()
    } else if x.is_positive() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Sign with `sgn(0) = +1`, used by every witness construction.
pub fn sign_or_plus(x: &Rational) -> Rational {
    if x.is_negative() {
        -Rational::one()
    } else {
        Rational::one()
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Canonical encoding: always `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn format(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` or a bare integer `p`; the result is reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((p, d)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(Error::Parse(format!("denominator must be positive: {s:?}")));
            }
            Ok(Rational::new(p, d))
        }
    }
}

/// Wrapper carrying the string encoding through serde.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QStr(pub Rational);

impl Serialize for QStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(&self.0))
    }
}

impl<'de> Deserialize<'de> for QStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map(QStr).map_err(|e| match e {
            Error::Parse(msg) => serde::de::Error::custom(msg),
            other => serde::de::Error::custom(other),
        })
    }
}

/// `#[serde(with = "crate::rational::one")]` for a single rational field.
pub mod one {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        QStr::deserialize(d).map(|q| q.0)
    }
}

/// `#[serde(with = "crate::rational::many")]` for a list of rationals.
pub mod many {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<QStr>::deserialize(d).map(|v| v.into_iter().map(|q| q.0).collect())
    }
}

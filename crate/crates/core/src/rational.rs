//! Exact rationals used throughout the crate.
//!
//! `Rational` is an alias for [`num_rational::BigRational`], which keeps
//! every value in lowest terms with a positive denominator. This module adds
//! the string form used by the JSON files (`"p/q"`, or `"p"` when the
//! denominator is one) and a few constructors.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Rational = num_rational::BigRational;

/// `n/d` reduced to lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// True when the value is stored in canonical form: `gcd(p, q) = 1`, `q > 0`,
/// and zero is `0/1`.
pub fn is_canonical(r: &Rational) -> bool {
    let (p, q) = (r.numer(), r.denom());
    if !q.is_positive() {
        return false;
    }
    if p.is_zero() {
        return q.is_one();
    }
    p.gcd(q).is_one()
}

/// Canonical decimal string: `"p/q"`, or `"p"` when `q = 1`.
pub fn to_decimal(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p/q"` or `"p"`. The result is reduced; a zero denominator is an error.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = s.trim();
    let err = || ParseRationalError(s.to_string());
    match trimmed.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(trimmed)
            .map(Rational::from_integer)
            .map_err(|_| err()),
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_decimal(r))
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(serde::de::Error::custom)
}

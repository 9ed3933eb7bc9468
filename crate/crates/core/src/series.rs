//! Truncated multivariate Laurent series over exact rationals.
//!
//! A [`TruncatedSeries`] is a finite sum of terms `c · x^a y^b · t₁^p t₂^q`
//! with `(a, b) ∈ Z²`, `p, q ≥ 0`, kept modulo all monomials of total
//! t-degree `p + q > order`. Wall-crossing functions and the images of the
//! coordinates under wall-crossing automorphisms all live in this ring.
//!
//! Terms are stored sparsely in a `BTreeMap` keyed by [`ZMonomial`], whose
//! ordering (total t-degree, then `p, q, a, b`) is also the order used for
//! serialization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("constant term must be 0, found {0}")]
    ConstantTermNotZero(String),
    #[error("non-constant terms must have positive t-degree (found {0})")]
    NotTNilpotent(String),
    #[error("monomial of t-degree {degree} queried beyond truncation order {order}")]
    BeyondOrder { degree: u32, order: u32 },
    #[error("invalid series: {0}")]
    Invalid(String),
}

/// `x^a y^b t₁^p t₂^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZMonomial {
    pub z: [i64; 2],
    pub t: [u32; 2],
}

impl ZMonomial {
    pub const ONE: ZMonomial = ZMonomial {
        z: [0, 0],
        t: [0, 0],
    };

    pub fn new(z: [i64; 2], t: [u32; 2]) -> Self {
        ZMonomial { z, t }
    }

    pub fn z(a: i64, b: i64) -> Self {
        ZMonomial {
            z: [a, b],
            t: [0, 0],
        }
    }

    pub fn t_degree(&self) -> u32 {
        self.t[0] + self.t[1]
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    fn sort_key(&self) -> (u32, u32, u32, i64, i64) {
        (self.t_degree(), self.t[0], self.t[1], self.z[0], self.z[1])
    }
}

impl Ord for ZMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for ZMonomial {
    type Output = ZMonomial;

    fn mul(self, rhs: ZMonomial) -> ZMonomial {
        ZMonomial {
            z: [self.z[0] + rhs.z[0], self.z[1] + rhs.z[1]],
            t: [self.t[0] + rhs.t[0], self.t[1] + rhs.t[1]],
        }
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, e) in [
            ("t1", self.t[0] as i64),
            ("t2", self.t[1] as i64),
            ("x", self.z[0]),
            ("y", self.z[1]),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    order: u32,
    terms: BTreeMap<ZMonomial, Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: u32) -> Self {
        Self::monomial(c, ZMonomial::ONE, order)
    }

    pub fn monomial(c: Rational, m: ZMonomial, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(m, c);
        s
    }

    /// Builds a series from `(monomial, coefficient)` pairs. Repeated monomials
    /// are summed, terms above `order` are dropped.
    pub fn from_terms<I>(order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (ZMonomial, Rational)>,
    {
        let mut s = Self::zero(order);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ZMonomial::ONE).is_some_and(|c| c.is_one())
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ZMonomial, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: ZMonomial, c: Rational) {
        if m.t_degree() > self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of `m`. Asking for a monomial above the truncation order is
    /// an error since the answer is not determined by the stored data.
    pub fn coefficient(&self, m: &ZMonomial) -> Result<Rational, SeriesError> {
        if m.t_degree() > self.order {
            return Err(SeriesError::BeyondOrder {
                degree: m.t_degree(),
                order: self.order,
            });
        }
        Ok(self.coeff(m))
    }

    pub(crate) fn coeff(&self, m: &ZMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ZMonomial::ONE)
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t_degree() <= order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Same terms, with the declared order raised or lowered. Raising the
    /// order asserts that the missing higher terms are zero.
    pub fn with_order(&self, order: u32) -> Self {
        let mut s = self.truncate(order);
        s.order = order;
        s
    }

    /// Terms of total t-degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        TruncatedSeries {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t_degree() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Smallest total t-degree among the stored terms.
    pub fn t_valuation(&self) -> Option<u32> {
        self.terms.keys().map(ZMonomial::t_degree).min()
    }

    /// True when every term other than the constant has positive t-degree,
    /// so that powers of `self - c₀` vanish past the truncation order.
    pub fn is_t_nilpotent_shift(&self) -> bool {
        self.terms.keys().all(|m| m.is_one() || m.t_degree() > 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        TruncatedSeries {
            order: self.order,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplication by a single monomial (exponent shift).
    pub fn shift(&self, m: ZMonomial) -> Self {
        Self::from_terms(
            self.order,
            self.terms.iter().map(|(k, c)| (*k * m, c.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// Truncated convolution product; the result order is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut acc: BTreeMap<ZMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.t_degree();
            if da > order {
                break;
            }
            for (mb, cb) in &other.terms {
                // other.terms iterates by increasing t-degree
                if da + mb.t_degree() > order {
                    break;
                }
                let m = *ma * *mb;
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        TruncatedSeries { order, terms: acc }
    }

    fn require_unit(&self) -> Result<(), SeriesError> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(SeriesError::ConstantTermNotOne(rational::to_decimal(&c0)));
        }
        self.require_nilpotent()
    }

    fn require_nilpotent(&self) -> Result<(), SeriesError> {
        match self.terms.keys().find(|m| !m.is_one() && m.t_degree() == 0) {
            Some(m) => Err(SeriesError::NotTNilpotent(m.to_string())),
            None => Ok(()),
        }
    }

    /// `log(f) = Σ_{k≥1} (−1)^{k−1} (f−1)^k / k`; requires `f ≡ 1 mod (t₁, t₂)`.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        self.require_unit()?;
        let g = self.sub(&Self::one(self.order));
        let mut out = Self::zero(self.order);
        let mut power = g.clone();
        for k in 1..=self.order.max(1) {
            if power.is_zero() {
                break;
            }
            let c = rational::rat(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            out = out.add(&power.scale(&c));
            power = power.mul(&g);
        }
        Ok(out)
    }

    /// `exp(g) = Σ g^k / k!`; requires `g ≡ 0 mod (t₁, t₂)`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(SeriesError::ConstantTermNotZero(rational::to_decimal(&c0)));
        }
        self.require_nilpotent()?;
        let mut out = Self::one(self.order);
        let mut term = Self::one(self.order);
        for k in 1..=self.order.max(1) {
            term = term.mul(self).scale(&rational::rat(1, k as i64));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Multiplicative inverse of a unit `1 + g`, via the geometric series.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        self.require_unit()?;
        let neg_g = Self::one(self.order).sub(self);
        let mut out = Self::one(self.order);
        let mut power = Self::one(self.order);
        for _ in 1..=self.order.max(1) {
            power = power.mul(&neg_g);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `f^k` for any integer `k`. Negative exponents need a unit `f`.
    pub fn int_pow(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut out = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(out)
    }

    /// Sets `t₁ = t₂ = t`: every monomial moves its total t-degree into the
    /// first slot.
    pub fn specialize_t(&self) -> Self {
        Self::from_terms(
            self.order,
            self.terms
                .iter()
                .map(|(m, c)| (ZMonomial::new(m.z, [m.t_degree(), 0]), c.clone())),
        )
    }

    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && rational::is_canonical(c) && m.t_degree() <= self.order)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("series always serializes")
    }
}

impl PartialEq for TruncatedSeries {
    /// Equality of term maps at the common truncation order.
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let a = self.terms.iter().filter(|(m, _)| m.t_degree() <= order);
        let b = other.terms.iter().filter(|(m, _)| m.t_degree() <= order);
        a.eq(b)
    }
}

impl Eq for TruncatedSeries {}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(t^{})", self.order + 1);
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            if m.is_one() {
                write!(f, "{sep}{abs}")?;
            } else if abs.is_one() {
                write!(f, "{sep}{m}")?;
            } else {
                write!(f, "{sep}{abs}*{m}")?;
            }
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                TruncatedSeries::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    #[serde(
        serialize_with = "rational::serialize",
        deserialize_with = "rational::deserialize"
    )]
    c: Rational,
    z: [i64; 2],
    t: [u32; 2],
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: u32,
    terms: Vec<TermJson>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    c: c.clone(),
                    z: m.z,
                    t: m.t,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(d)?;
        let order = raw.order;
        if let Some(bad) = raw.terms.iter().find(|t| t.t[0] + t.t[1] > order) {
            return Err(serde::de::Error::custom(SeriesError::Invalid(format!(
                "term with t-exponents {:?} exceeds order {order}",
                bad.t
            ))));
        }
        Ok(TruncatedSeries::from_terms(
            order,
            raw.terms
                .into_iter()
                .map(|t| (ZMonomial::new(t.z, t.t), t.c)),
        ))
    }
}

/// Convenience constructor for tests and fixtures: `Σ c·x^a y^b t₁^p t₂^q`
/// from `(c_num, c_den, [a, b], [p, q])` tuples.
pub fn series(order: u32, terms: &[(i64, i64, [i64; 2], [u32; 2])]) -> TruncatedSeries {
    TruncatedSeries::from_terms(
        order,
        terms
            .iter()
            .map(|&(n, d, z, t)| (ZMonomial::new(z, t), rational::rat(n, d))),
    )
}

/// Univariate helper: `Σ c_k t₁^k` with integer coefficients.
pub fn univariate(order: u32, coeffs: &[BigInt]) -> TruncatedSeries {
    TruncatedSeries::from_terms(
        order,
        coeffs.iter().enumerate().map(|(k, c)| {
            (
                ZMonomial::new([0, 0], [k as u32, 0]),
                Rational::from_integer(c.clone()),
            )
        }),
    )
}

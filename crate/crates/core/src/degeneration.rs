//! Partitions as exponent vectors and the degeneration sum for
//! `N_d(P², D₁ + D₂)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::series::{univariate, SeriesError, TruncatedSeries, ZMonomial};

/// `m = (m₁, …, m_d)`: `m_ℓ` parts of size `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    m: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("degree must be at least 1, got {0}")]
    DegreeTooSmall(i64),
    #[error("empty exponent vector")]
    Empty,
}

impl Partition {
    pub fn new(m: Vec<u32>) -> Result<Self, PartitionError> {
        if m.is_empty() {
            return Err(PartitionError::Empty);
        }
        Ok(Partition { m })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.m
    }

    /// `Σ ℓ·m_ℓ`.
    pub fn degree(&self) -> u32 {
        self.m
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u32 + 1) * c)
            .sum()
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut p = Vec::new();
        for (i, &c) in self.m.iter().enumerate().rev() {
            p.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
        }
        p
    }
}

/// All partitions of `d` as length-`d` exponent vectors, in decreasing
/// lexicographic order of the vector: `(d, 0, …)` first, `(0, …, 1)` last.
pub fn partitions(d: i64) -> Result<Vec<Partition>, PartitionError> {
    if d < 1 {
        return Err(PartitionError::DegreeTooSmall(d));
    }
    let d = d as usize;
    let mut out = Vec::new();
    let mut m = vec![0u32; d];
    fill(&mut m, 0, d as u32, &mut out);
    Ok(out)
}

fn fill(m: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Partition>) {
    let size = idx as u32 + 1;
    if idx == m.len() {
        if remaining == 0 {
            out.push(Partition { m: m.clone() });
        }
        return;
    }
    for c in (0..=remaining / size).rev() {
        m[idx] = c;
        fill(m, idx + 1, remaining - c * size, out);
    }
    m[idx] = 0;
}

/// Weight of `m` in the sum: `Π_ℓ (ℓ^{m_ℓ}/m_ℓ!)·((−1)^{ℓ−1}/ℓ²)^{m_ℓ}`.
pub fn partition_weight(m: &Partition) -> Rational {
    let mut w = Rational::one();
    for (i, &c) in m.exponents().iter().enumerate() {
        let l = i as i64 + 1;
        let sign = if l % 2 == 1 { 1 } else { -1 };
        // ℓ^c · (±1/ℓ²)^c = (±1/ℓ)^c
        let per = rational::rat(sign, l);
        for _ in 0..c {
            w *= &per;
        }
        w /= rational::from_bigint(rational::factorial(c as u64));
    }
    w
}

/// `Σ_{m ⊢ d} weight(m)·N_F2(m)`.
pub fn degeneration_sum<E>(
    d: i64,
    mut n_f2: impl FnMut(&Partition) -> Result<Rational, E>,
) -> Result<Rational, E>
where
    E: From<PartitionError>,
{
    let mut total = Rational::zero();
    for m in partitions(d)? {
        let n = n_f2(&m)?;
        total += partition_weight(&m) * n;
    }
    Ok(total)
}

/// `N_m(F₂) = Π_ℓ (2d)^{m_ℓ}`.
pub fn closed_form_f2(m: &Partition) -> Rational {
    let d = BigInt::from(m.degree());
    let parts: u32 = m.exponents().iter().sum();
    rational::from_bigint(num_traits::pow(BigInt::from(2) * d, parts as usize))
}

pub fn line_conic_invariant(d: i64) -> Result<Rational, PartitionError> {
    degeneration_sum(d, |m| Ok::<_, PartitionError>(closed_form_f2(m)))
}

/// `[x^d] exp(2d·log(1 + x))` in the truncated-series ring.
pub fn line_conic_series_coefficient(d: u32) -> Result<Rational, SeriesError> {
    let one_plus_x = univariate(d, &[BigInt::one(), BigInt::one()]);
    let scaled = one_plus_x.log1p()?.scale(&rational::int(2 * d as i64));
    let e: TruncatedSeries = scaled.exp()?;
    e.coefficient(&ZMonomial::new([0, 0], [d, 0]))
}

//! Multi-indices `α ∈ ℕ^s` and the canonical enumeration order used for
//! derivative indices, matrix rows and matrix columns.
//!
//! The canonical order sorts by total degree first and, inside one degree,
//! increasingly by lex with `x_1 < x_2 < … < x_s`: the last exponent is
//! compared first, smaller first. For `s = 3` in degree 2 this gives
//! `x², xy, y², xz, yz, z²`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiIndexError {
    #[error("multi-index length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{lower} is not componentwise below {upper}")]
    NotDominated {
        lower: MultiIndex,
        upper: MultiIndex,
    },
    #[error("multi-indices need at least one variable")]
    NoVariables,
}

/// An exponent vector `(α_1, …, α_s)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(s: usize) -> Self {
        MultiIndex(vec![0; s])
    }

    /// The unit vector `e_i` of length `s`.
    pub fn unit(s: usize, i: usize) -> Self {
        let mut e = vec![0; s];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_len(&self, other: &MultiIndex) -> Result<(), MultiIndexError> {
        if self.len() != other.len() {
            return Err(MultiIndexError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &MultiIndex) -> Result<bool, MultiIndexError> {
        self.check_len(other)?;
        Ok(self.divides(other))
    }

    /// Componentwise comparison without the length check; used on hot paths
    /// where both sides come from the same ring.
    #[inline]
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &MultiIndex) -> Result<MultiIndex, MultiIndexError> {
        self.check_len(other)?;
        Ok(self.add(other))
    }

    #[inline]
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, defined only when `other ≤ self`.
    pub fn checked_sub(&self, other: &MultiIndex) -> Result<MultiIndex, MultiIndexError> {
        self.check_len(other)?;
        if !other.divides(self) {
            return Err(MultiIndexError::NotDominated {
                lower: other.clone(),
                upper: self.clone(),
            });
        }
        Ok(self.sub_unchecked(other))
    }

    #[inline]
    pub(crate) fn sub_unchecked(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise maximum.
    #[inline]
    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both.
    #[inline]
    pub fn is_coprime(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `α! = α_1! ⋯ α_s!`.
    pub fn factorial(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &a| acc * factorial(a))
    }

    /// `binom(α, β) = ∏ binom(α_i, β_i)` for `β ≤ α`.
    pub fn multi_binomial(&self, beta: &MultiIndex) -> Result<BigUint, MultiIndexError> {
        self.check_len(beta)?;
        if !beta.divides(self) {
            return Err(MultiIndexError::NotDominated {
                lower: beta.clone(),
                upper: self.clone(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&beta.0)
            .fold(BigUint::one(), |acc, (&a, &b)| acc * binomial(a, b)))
    }

    /// Comparison in the canonical enumeration order.
    pub fn canonical_cmp(&self, other: &MultiIndex) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` as a machine integer, for matrix shapes.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `α ∈ ℕ^s` with `d_min ≤ |α| ≤ d_max`, in canonical order.
pub fn enumerate(s: usize, d_min: u32, d_max: u32) -> Result<Vec<MultiIndex>, MultiIndexError> {
    if s == 0 {
        return Err(MultiIndexError::NoVariables);
    }
    let mut out = Vec::new();
    let mut buf = vec![0u32; s];
    for d in d_min..=d_max {
        fill_degree(&mut buf, s - 1, d, &mut out);
    }
    Ok(out)
}

fn fill_degree(buf: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos == 0 {
        buf[0] = remaining;
        out.push(MultiIndex(buf.to_vec()));
        return;
    }
    for a in 0..=remaining {
        buf[pos] = a;
        fill_degree(buf, pos - 1, remaining - a, out);
    }
    buf[pos] = 0;
}

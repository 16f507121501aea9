//! Finitely supported vectors of `ℓ₁`, eventually constant members of `c`,
//! and the pairing between them.
//!
//! Coordinates are 1-based. For `x ∈ c` the index `0` denotes the limit
//! `x₀ = lim xᵢ`, so a functional `f = (f₁, f₂, …)` acts by
//! `f(x) = f₁·x₀ + Σ_{i≥1} f_{i+1}·xᵢ`.

use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Finitely supported element of `ℓ₁`.
///
/// Stored coefficients are `(f₁, …, f_n)` with `f_n ≠ 0`; the zero vector
/// has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawL1Vector", into = "RawL1Vector")]
pub struct L1Vector {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawL1Vector {
    #[serde(with = "rational::many")]
    coeffs: Vec<Rational>,
}

impl From<RawL1Vector> for L1Vector {
    fn from(raw: RawL1Vector) -> Self {
        L1Vector::new(raw.coeffs)
    }
}

impl From<L1Vector> for RawL1Vector {
    fn from(v: L1Vector) -> Self {
        RawL1Vector { coeffs: v.coeffs }
    }
}

impl L1Vector {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        L1Vector { coeffs }
    }

    pub fn zero() -> Self {
        L1Vector { coeffs: Vec::new() }
    }

    /// The standard basis vector `e_n` (`n ≥ 1`).
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1, "basis vectors are 1-based");
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[n - 1] = Rational::one();
        L1Vector { coeffs }
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        L1Vector::new(pairs.iter().map(|&(p, d)| rational::q(p, d)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Length of the stored support, i.e. the largest `n` with `f_n ≠ 0`.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// `f_j` for `j ≥ 1`; zero beyond the support.
    pub fn coeff(&self, j: usize) -> Rational {
        assert!(j >= 1, "coefficients are 1-based");
        self.coeffs
            .get(j - 1)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(Signed::abs).sum()
    }

    pub fn scale(&self, c: &Rational) -> L1Vector {
        L1Vector::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn normalize(&self) -> Result<L1Functional> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = self.l1_norm();
        Ok(L1Functional {
            inner: self.scale(&norm.recip()),
        })
    }

    /// The pairing `f(x) = f₁·x₀ + Σ_{i≥1} f_{i+1}·xᵢ`.
    pub fn pair(&self, x: &ConvergentSeq) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, fi)| fi * x.coord(i))
            .sum()
    }
}

impl Add for &L1Vector {
    type Output = L1Vector;

    fn add(self, rhs: &L1Vector) -> L1Vector {
        let n = self.support_len().max(rhs.support_len());
        L1Vector::new((1..=n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Neg for &L1Vector {
    type Output = L1Vector;

    fn neg(self) -> L1Vector {
        L1Vector::new(self.coeffs.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for L1Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of `ℓ₁` with norm exactly one, identified with the
/// functional whose kernel is the hyperplane `W_f ⊂ c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct L1Functional {
    inner: L1Vector,
}

impl L1Functional {
    pub fn new(v: L1Vector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = v.l1_norm();
        if !norm.is_one() {
            return Err(Error::NotNormalized(rational::format(&norm)));
        }
        Ok(L1Functional { inner: v })
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        L1Functional::new(L1Vector::from_ratios(pairs))
    }

    pub fn as_vector(&self) -> &L1Vector {
        &self.inner
    }

    pub fn into_vector(self) -> L1Vector {
        self.inner
    }

    pub fn negate(&self) -> L1Functional {
        L1Functional {
            inner: -&self.inner,
        }
    }
}

impl Deref for L1Functional {
    type Target = L1Vector;

    fn deref(&self) -> &L1Vector {
        &self.inner
    }
}

impl fmt::Display for L1Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// Eventually constant element of `c`: `(x₁, …, x_m)` followed by the
/// constant `tail`, which is also the limit.
///
/// Canonical form: the prefix never ends with a value equal to `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawSeq", into = "RawSeq")]
pub struct ConvergentSeq {
    prefix: Vec<Rational>,
    tail: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawSeq {
    #[serde(with = "rational::many")]
    prefix: Vec<Rational>,
    #[serde(with = "rational::one")]
    tail: Rational,
}

impl From<RawSeq> for ConvergentSeq {
    fn from(raw: RawSeq) -> Self {
        ConvergentSeq::new(raw.prefix, raw.tail)
    }
}

impl From<ConvergentSeq> for RawSeq {
    fn from(x: ConvergentSeq) -> Self {
        RawSeq {
            prefix: x.prefix,
            tail: x.tail,
        }
    }
}

impl ConvergentSeq {
    pub fn new(mut prefix: Vec<Rational>, tail: Rational) -> Self {
        while prefix.last().is_some_and(|v| *v == tail) {
            prefix.pop();
        }
        ConvergentSeq { prefix, tail }
    }

    pub fn constant(tail: Rational) -> Self {
        ConvergentSeq {
            prefix: Vec::new(),
            tail,
        }
    }

    pub fn zero() -> Self {
        ConvergentSeq::constant(Rational::zero())
    }

    /// The sequence `e_i` of `c` (one at coordinate `i`, zero elsewhere).
    pub fn basis(i: usize) -> Self {
        assert!(i >= 1, "coordinates are 1-based");
        let mut prefix = vec![Rational::zero(); i];
        prefix[i - 1] = Rational::one();
        ConvergentSeq::new(prefix, Rational::zero())
    }

    pub fn from_ratios(prefix: &[(i64, i64)], tail: (i64, i64)) -> Self {
        ConvergentSeq::new(
            prefix.iter().map(|&(p, d)| rational::q(p, d)).collect(),
            rational::q(tail.0, tail.1),
        )
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    pub fn limit(&self) -> &Rational {
        &self.tail
    }

    /// `xᵢ` for `i ≥ 1`, and the limit for `i = 0`.
    pub fn coord(&self, i: usize) -> Rational {
        if i == 0 {
            return self.tail.clone();
        }
        self.prefix.get(i - 1).unwrap_or(&self.tail).clone()
    }

    pub fn sup_norm(&self) -> Rational {
        self.prefix
            .iter()
            .map(Signed::abs)
            .fold(self.tail.abs(), |m, v| if v > m { v } else { m })
    }

    /// The first `len` coordinates, reading the tail past the prefix.
    pub fn coords(&self, len: usize) -> Vec<Rational> {
        (1..=len).map(|i| self.coord(i)).collect()
    }

    pub fn scale(&self, c: &Rational) -> ConvergentSeq {
        ConvergentSeq::new(self.prefix.iter().map(|v| v * c).collect(), &self.tail * c)
    }

    fn zip_with(
        &self,
        other: &ConvergentSeq,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Self {
        let len = self.prefix_len().max(other.prefix_len());
        let prefix = (1..=len)
            .map(|i| op(&self.coord(i), &other.coord(i)))
            .collect();
        ConvergentSeq::new(prefix, op(&self.tail, &other.tail))
    }
}

impl Add for &ConvergentSeq {
    type Output = ConvergentSeq;

    fn add(self, rhs: &ConvergentSeq) -> ConvergentSeq {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ConvergentSeq {
    type Output = ConvergentSeq;

    fn sub(self, rhs: &ConvergentSeq) -> ConvergentSeq {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for ConvergentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for v in &self.prefix {
            write!(f, "{v}, ")?;
        }
        write!(f, "{}...)", self.tail)
    }
}

pub fn l1_norm(y: &L1Vector) -> Rational {
    y.l1_norm()
}

pub fn pair(f: &L1Vector, x: &ConvergentSeq) -> Rational {
    f.pair(x)
}

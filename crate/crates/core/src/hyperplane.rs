//! Projections of `c` onto `W_f = ker f` and the classification of `W_f`.
//!
//! Every projection onto `W_f` has the form `P_z(x) = x − f(x)·z` with
//! `f(z) = 1`, and its norm is
//!
//! ```text
//! ‖P_z‖ = sup_{i≥1} |1 − f_{i+1}·zᵢ| + |zᵢ|·(1 − |f_{i+1}|)
//! ```
//!
//! For finitely supported `f` and eventually constant `z` the supremum is a
//! maximum over the joint support plus one tail term `1 + |z₀|`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, half, Rational};
use crate::seq::{ConvergentSeq, L1Functional};

/// The four-way partition of hyperplanes `W_f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperplaneClass {
    /// Some `j ≥ 2` has `|f_j| ≥ 1/2`; `W_f` is isometric to `c`.
    IsoC,
    /// `|f₁| = 1`; `W_f` is the space of null sequences.
    IsoC0,
    /// `1/2 ≤ |f₁| < 1` and `|f_j| < 1/2` for `j ≥ 2`; the dual is `ℓ₁`
    /// but `W_f` is isometric neither to `c` nor to `c₀`.
    DualL1Only,
    /// Every `|f_j| < 1/2`; the dual is not isometric to `ℓ₁`.
    DualNotL1,
}

impl HyperplaneClass {
    pub fn as_str(self) -> &'static str {
        match self {
            HyperplaneClass::IsoC => "iso_c",
            HyperplaneClass::IsoC0 => "iso_c0",
            HyperplaneClass::DualL1Only => "dual_l1_only",
            HyperplaneClass::DualNotL1 => "dual_not_l1",
        }
    }

    pub fn dual_is_l1(self) -> bool {
        self != HyperplaneClass::DualNotL1
    }
}

impl fmt::Display for HyperplaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A projection `P_z` together with its norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionSpec {
    pub z: ConvergentSeq,
    #[serde(with = "rational::one")]
    pub norm: Rational,
}

impl ProjectionSpec {
    pub fn new(f: &L1Functional, z: ConvergentSeq) -> Result<Self> {
        let norm = projection_norm(f, &z)?;
        Ok(ProjectionSpec { z, norm })
    }
}

fn require_projection(f: &L1Functional, z: &ConvergentSeq) -> Result<()> {
    let fz = f.pair(z);
    if fz.is_one() {
        Ok(())
    } else {
        Err(Error::NotAProjection(rational::format(&fz)))
    }
}

pub fn member(f: &L1Functional, x: &ConvergentSeq) -> bool {
    f.pair(x).is_zero()
}

/// `P_z(x) = x − f(x)·z`.
pub fn projection_apply(
    f: &L1Functional,
    z: &ConvergentSeq,
    x: &ConvergentSeq,
) -> Result<ConvergentSeq> {
    require_projection(f, z)?;
    Ok(x - &z.scale(&f.pair(x)))
}

/// One term of the norm formula: `|1 − b·s| + |s|·(1 − |b|)`.
pub(crate) fn row_term(b: &Rational, s: &Rational) -> Rational {
    (Rational::one() - b * s).abs() + s.abs() * (Rational::one() - b.abs())
}

pub fn projection_norm(f: &L1Functional, z: &ConvergentSeq) -> Result<Rational> {
    require_projection(f, z)?;
    let last = z.prefix_len().max(f.support_len().saturating_sub(1));
    let tail_term = Rational::one() + z.tail().abs();
    Ok((1..=last)
        .map(|i| row_term(&f.coeff(i + 1), &z.coord(i)))
        .fold(tail_term, |m, t| if t > m { t } else { m }))
}

/// All `j ≥ 2` with `|f_j| ≥ 1/2`, in increasing order.
pub fn one_complemented(f: &L1Functional) -> Vec<usize> {
    let h = half();
    (2..=f.support_len())
        .filter(|&j| f.coeff(j).abs() >= h)
        .collect()
}

/// A norm-one projection and whether it is the only one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinProjection {
    #[serde(flatten)]
    pub projection: ProjectionSpec,
    /// The index `j₀` the projection was built from.
    pub index: usize,
    pub unique: bool,
}

/// `z⁰` with `z⁰_{j₀−1} = 1/f_{j₀}` and zero elsewhere, for a qualifying `j₀`.
pub fn norm_one_projection_at(f: &L1Functional, j0: usize) -> Result<ProjectionSpec> {
    if j0 < 2 || f.coeff(j0).abs() < half() {
        return Err(Error::NotOneComplemented);
    }
    let mut prefix = vec![Rational::zero(); j0 - 1];
    prefix[j0 - 2] = f.coeff(j0).recip();
    ProjectionSpec::new(f, ConvergentSeq::new(prefix, Rational::zero()))
}

/// Norm-one projection built from the smallest qualifying index.
pub fn min_projection(f: &L1Functional) -> Result<MinProjection> {
    let indices = one_complemented(f);
    let &j0 = indices.first().ok_or(Error::NotOneComplemented)?;
    Ok(MinProjection {
        projection: norm_one_projection_at(f, j0)?,
        index: j0,
        unique: indices.len() == 1,
    })
}

/// `λ = (|f₁| + Σ_{j≥2} |f_j|/(1 − 2|f_j|))⁻¹`, defined when no `j ≥ 2`
/// reaches `1/2`.
pub fn lambda(f: &L1Functional) -> Option<Rational> {
    if !one_complemented(f).is_empty() {
        return None;
    }
    let two = rational::int(2);
    let denom = (2..=f.support_len())
        .map(|j| {
            let a = f.coeff(j).abs();
            &a / (Rational::one() - &two * &a)
        })
        .fold(f.coeff(1).abs(), |acc, t| acc + t);
    Some(denom.recip())
}

/// `inf_z ‖P_z‖`: 1 when `W_f` is 1-complemented, `1 + λ` otherwise.
pub fn projection_constant(f: &L1Functional) -> Rational {
    match lambda(f) {
        Some(l) => Rational::one() + l,
        None => Rational::one(),
    }
}

/// `α_N = |f₁| + Σ_{j=1}^{N−1} |f_{j+1}|/(1−2|f_{j+1}|) + sgn(f₁)·Σ_{j≥N} f_{j+1}`.
pub fn alpha_n(f: &L1Functional, n: usize) -> Rational {
    let two = rational::int(2);
    let head: Rational = (1..n)
        .map(|j| {
            let a = f.coeff(j + 1).abs();
            &a / (Rational::one() - &two * &a)
        })
        .sum();
    let tail: Rational = (n..f.support_len()).map(|j| f.coeff(j + 1)).sum();
    f.coeff(1).abs() + head + rational::sgn(&f.coeff(1)) * tail
}

/// Smallest `N ≥ 1` with `α_N > 0` and `α_N ≥ |f_{k+1}|/(1−2|f_{k+1}|)` for
/// every `k < N`. Requires `W_f` not 1-complemented.
pub fn minimizing_threshold(f: &L1Functional) -> Result<usize> {
    if let Some(&j) = one_complemented(f).first() {
        return Err(Error::OneComplemented(j));
    }
    let two = rational::int(2);
    let ok = |n: usize| {
        let a = alpha_n(f, n);
        a.is_positive()
            && (1..n).all(|k| {
                let b = f.coeff(k + 1).abs();
                a >= &b / (Rational::one() - &two * &b)
            })
    };
    // N = support length always qualifies, so the search terminates.
    Ok((1..=f.support_len().max(1))
        .find(|&n| ok(n))
        .unwrap_or(f.support_len().max(1)))
}

/// The projection `P_{z^N}` from the minimizing sequence
/// `z^N = λ_N·(sgn f₂/(1−2|f₂|), …, sgn f_N/(1−2|f_N|), sgn f₁, sgn f₁, …)`.
pub fn minimizing_projection(f: &L1Functional, n: usize) -> Result<ProjectionSpec> {
    let threshold = minimizing_threshold(f)?;
    if n < threshold {
        return Err(Error::NBelowThreshold { got: n, threshold });
    }
    let two = rational::int(2);
    let lambda_n = alpha_n(f, n).recip();
    let prefix = (1..n)
        .map(|j| {
            let b = f.coeff(j + 1);
            rational::sgn(&b) / (Rational::one() - &two * b.abs()) * &lambda_n
        })
        .collect();
    let tail = rational::sgn(&f.coeff(1)) * &lambda_n;
    ProjectionSpec::new(f, ConvergentSeq::new(prefix, tail))
}

pub fn classify(f: &L1Functional) -> HyperplaneClass {
    let h = half();
    let f1 = f.coeff(1).abs();
    if !one_complemented(f).is_empty() {
        HyperplaneClass::IsoC
    } else if f1.is_one() {
        HyperplaneClass::IsoC0
    } else if f1 >= h {
        HyperplaneClass::DualL1Only
    } else {
        HyperplaneClass::DualNotL1
    }
}

/// Whether `ker f ⊂ c₀` is 1-complemented: some `j ≥ 1` has `|f_j| ≥ 1/2`.
pub fn c0_one_complemented(f: &L1Functional) -> bool {
    let h = half();
    f.coeffs().iter().any(|c| c.abs() >= h)
}

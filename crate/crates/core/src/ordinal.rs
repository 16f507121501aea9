//! Continuous functions on the ordinal interval `[0, ω·n]`, finitely
//! supported measures on it, and the measures `μ_i` that exhibit `W_f` as a
//! quotient of `C(ω·n)` for finitely supported `f`.
//!
//! An ordinal `ω·k + m ≤ ω·n` is stored as `(block k, offset m)`. The
//! points `(k, 0)` with `k ≥ 1` are limit points; everything else is
//! isolated.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::duality::weak_star_limit;
use crate::error::{Error, Result};
use crate::hyperplane::{classify, HyperplaneClass};
use crate::rational::{self, QStr, Rational};
use crate::seq::{ConvergentSeq, L1Functional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrdinalPoint {
    pub block: usize,
    pub offset: u64,
}

impl OrdinalPoint {
    pub fn new(block: usize, offset: u64) -> Self {
        OrdinalPoint { block, offset }
    }

    /// The limit ordinal `ω·k` (or `0` for `k = 0`).
    pub fn anchor(block: usize) -> Self {
        OrdinalPoint { block, offset: 0 }
    }

    pub fn within(&self, n: usize) -> bool {
        self.block < n || (self.block == n && self.offset == 0)
    }
}

/// An element of `C(ω·n)` that is eventually constant on every block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFunc", into = "RawFunc")]
pub struct COmegaNFunc {
    n: usize,
    blocks: Vec<ConvergentSeq>,
    anchors: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawFunc {
    n: usize,
    blocks: Vec<ConvergentSeq>,
    #[serde(with = "rational::many")]
    anchors: Vec<Rational>,
}

impl TryFrom<RawFunc> for COmegaNFunc {
    type Error = Error;

    fn try_from(raw: RawFunc) -> Result<Self> {
        COmegaNFunc::new(raw.n, raw.blocks, raw.anchors)
    }
}

impl From<COmegaNFunc> for RawFunc {
    fn from(g: COmegaNFunc) -> Self {
        RawFunc {
            n: g.n,
            blocks: g.blocks,
            anchors: g.anchors,
        }
    }
}

impl COmegaNFunc {
    /// `blocks[k]` holds the values at `ω·k + m` for `m ≥ 1`; `anchors[k]`
    /// the value at `ω·k`. Continuity forces `anchors[k] = lim blocks[k−1]`.
    pub fn new(n: usize, blocks: Vec<ConvergentSeq>, anchors: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainMismatch("n must be positive".into()));
        }
        if blocks.len() != n || anchors.len() != n + 1 {
            return Err(Error::DomainMismatch(format!(
                "expected {n} blocks and {} anchors, got {} and {}",
                n + 1,
                blocks.len(),
                anchors.len()
            )));
        }
        for k in 1..=n {
            if &anchors[k] != blocks[k - 1].limit() {
                return Err(Error::DomainMismatch(format!(
                    "discontinuous at block {k}: anchor {} but limit {}",
                    anchors[k],
                    blocks[k - 1].limit()
                )));
            }
        }
        Ok(COmegaNFunc { n, blocks, anchors })
    }

    /// Builds the function from its blocks; the anchors at limit points are
    /// read off the block limits and `value_at_zero` fills ordinal `0`.
    pub fn from_blocks(blocks: Vec<ConvergentSeq>, value_at_zero: Rational) -> Result<Self> {
        let n = blocks.len();
        let mut anchors = vec![value_at_zero];
        anchors.extend(blocks.iter().map(|b| b.limit().clone()));
        COmegaNFunc::new(n, blocks, anchors)
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        COmegaNFunc::from_blocks(vec![ConvergentSeq::constant(value.clone()); n], value)
            .expect("constant functions are continuous")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ConvergentSeq] {
        &self.blocks
    }

    pub fn anchors(&self) -> &[Rational] {
        &self.anchors
    }

    pub fn value_at(&self, p: OrdinalPoint) -> Result<Rational> {
        if !p.within(self.n) {
            return Err(Error::DomainMismatch(format!(
                "point (block {}, offset {}) lies outside [0, w*{}]",
                p.block, p.offset, self.n
            )));
        }
        Ok(if p.offset == 0 {
            self.anchors[p.block].clone()
        } else {
            self.blocks[p.block].coord(p.offset as usize)
        })
    }

    pub fn sup_norm(&self) -> Rational {
        self.blocks
            .iter()
            .map(ConvergentSeq::sup_norm)
            .chain(self.anchors.iter().map(Signed::abs))
            .fold(Rational::zero(), |m, v| if v > m { v } else { m })
    }
}

/// A finitely supported signed measure; atoms are kept sorted by point and
/// zero weights are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinMeasure {
    atoms: Vec<(OrdinalPoint, Rational)>,
}

impl FinMeasure {
    /// Merges repeated points and drops zero weights.
    pub fn from_atoms(atoms: impl IntoIterator<Item = (OrdinalPoint, Rational)>) -> Self {
        let mut merged: BTreeMap<OrdinalPoint, Rational> = BTreeMap::new();
        for (p, w) in atoms {
            *merged.entry(p).or_insert_with(Rational::zero) += w;
        }
        FinMeasure {
            atoms: merged.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
        }
    }

    pub fn dirac(p: OrdinalPoint) -> Self {
        FinMeasure::from_atoms([(p, Rational::from_integer(1.into()))])
    }

    pub fn atoms(&self) -> &[(OrdinalPoint, Rational)] {
        &self.atoms
    }

    pub fn total_variation(&self) -> Rational {
        self.atoms.iter().map(|(_, w)| w.abs()).sum()
    }
}

impl Serialize for FinMeasure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            atoms: Vec<(OrdinalPoint, QStr)>,
        }
        Raw {
            atoms: self
                .atoms
                .iter()
                .map(|(p, w)| (*p, QStr(w.clone())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            atoms: Vec<(OrdinalPoint, QStr)>,
        }
        let raw = Raw::deserialize(d)?;
        Ok(FinMeasure::from_atoms(
            raw.atoms.into_iter().map(|(p, w)| (p, w.0)),
        ))
    }
}

fn require_quotient_class(f: &L1Functional) -> Result<()> {
    match classify(f) {
        HyperplaneClass::DualL1Only | HyperplaneClass::IsoC0 => Ok(()),
        got => Err(Error::WrongClass {
            expected: "dual_l1_only or iso_c0",
            got,
        }),
    }
}

/// The measure `μ_i` on `[0, ω·n]`, `n` the support length of `f`:
///
/// * `μ_i = δ_{ω·i}` for `i < n`;
/// * for `i ≥ n`, `μ_i = −(1/f₁) Σ_{j=2}^{n} f_j·δ_{ω·(j−2)+i}
///   + (2|f₁|−1)/(|f₁|·i) · Σ_{j=1}^{i} (−1)^j δ_{ω·(n−1) + i(i−1)/2 + j}`.
pub fn make_mu(f: &L1Functional, i: usize) -> Result<FinMeasure> {
    require_quotient_class(f)?;
    if i == 0 {
        return Err(Error::DomainMismatch("measures are indexed from 1".into()));
    }
    let n = f.support_len();
    if i < n {
        return Ok(FinMeasure::dirac(OrdinalPoint::anchor(i)));
    }
    let f1 = f.coeff(1);
    let a1 = f1.abs();
    let shifted = (2..=n).map(|j| (OrdinalPoint::new(j - 2, i as u64), -f.coeff(j) / &f1));
    let coef = (&a1 * rational::int(2) - rational::int(1)) / (&a1 * rational::int(i as i64));
    let base = (i as u64) * (i as u64 - 1) / 2;
    let alternating = (1..=i as u64).map(|j| {
        let sign = if j % 2 == 0 {
            coef.clone()
        } else {
            -coef.clone()
        };
        (OrdinalPoint::new(n - 1, base + j), sign)
    });
    Ok(FinMeasure::from_atoms(shifted.chain(alternating)))
}

pub fn integrate(mu: &FinMeasure, g: &COmegaNFunc) -> Result<Rational> {
    mu.atoms()
        .iter()
        .map(|(p, w)| g.value_at(*p).map(|v| v * w))
        .sum()
}

/// The sequence `(μ_i(g))_{i ≤ m}` and its limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientImage {
    #[serde(with = "rational::many")]
    pub values: Vec<Rational>,
    #[serde(with = "rational::one")]
    pub limit: Rational,
}

impl QuotientImage {
    /// `f₁·L + Σ_{i<n} f_{i+1}·μ_i(g)`, zero when the image lies in `W_f`.
    /// `None` if fewer than `n − 1` terms were computed.
    pub fn pairing_with(&self, f: &L1Functional) -> Option<Rational> {
        let n = f.support_len();
        if self.values.len() + 1 < n {
            return None;
        }
        Some(
            (1..n)
                .map(|i| f.coeff(i + 1) * &self.values[i - 1])
                .fold(f.coeff(1) * &self.limit, |acc, t| acc + t),
        )
    }
}

fn require_same_n(f: &L1Functional, g: &COmegaNFunc) -> Result<()> {
    if g.n() != f.support_len() {
        return Err(Error::DomainMismatch(format!(
            "function lives on [0, w*{}] but f has support {}",
            g.n(),
            f.support_len()
        )));
    }
    Ok(())
}

/// `lim_i μ_i(g) = −(1/f₁) Σ_{j=2}^{n} f_j·lim(block j−2)`, in closed form.
pub fn mu_limit(f: &L1Functional, g: &COmegaNFunc) -> Result<Rational> {
    require_quotient_class(f)?;
    require_same_n(f, g)?;
    let f1 = f.coeff(1);
    Ok((2..=f.support_len())
        .map(|j| -f.coeff(j) * g.blocks()[j - 2].limit() / &f1)
        .sum())
}

/// `μ_i(g)` without materializing `μ_i`: the alternating block is summed
/// termwise only over the prefix of the last block, and in closed form over
/// its constant tail.
fn mu_value(f: &L1Functional, g: &COmegaNFunc, i: usize) -> Rational {
    let n = f.support_len();
    if i < n {
        return g.anchors()[i].clone();
    }
    let f1 = f.coeff(1);
    let a1 = f1.abs();
    let shifted: Rational = (2..=n)
        .map(|j| -f.coeff(j) * g.blocks()[j - 2].coord(i))
        .sum::<Rational>()
        / &f1;
    let last = &g.blocks()[n - 1];
    let base = i * (i - 1) / 2;
    let mut alternating = Rational::zero();
    let mut tail_signs = 0i64;
    for k in 1..=i {
        let odd = k % 2 == 1;
        if base + k <= last.prefix_len() {
            let v = last.coord(base + k);
            alternating += if odd { -v } else { v };
        } else {
            tail_signs += if odd { -1 } else { 1 };
        }
    }
    alternating += last.tail() * rational::int(tail_signs);
    let coef = (&a1 * rational::int(2) - rational::int(1)) / (&a1 * rational::int(i as i64));
    shifted + coef * alternating
}

pub fn quotient_apply(f: &L1Functional, g: &COmegaNFunc, m: usize) -> Result<QuotientImage> {
    let limit = mu_limit(f, g)?;
    let values = (1..=m).map(|i| mu_value(f, g, i)).collect();
    Ok(QuotientImage { values, limit })
}

/// Whether `lim_i μ_i(g) = Σ_j ê_j·μ_j(g)` with `ê` the weak*-limit of the basis.
pub fn mu_limit_compatibility(f: &L1Functional, g: &COmegaNFunc) -> Result<bool> {
    let limit = mu_limit(f, g)?;
    let ehat = weak_star_limit(f)?.ehat;
    let combined = ehat
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, e)| Ok(e * integrate(&make_mu(f, j + 1)?, g)?))
        .sum::<Result<Rational>>()?;
    Ok(limit == combined)
}

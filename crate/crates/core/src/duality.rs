//! The duality `φ: ℓ₁ → W_f*`, `(φ(y))(x) = Σ_{j≥1} xⱼ·yⱼ`, the weak*-limit of
//! the unit vector basis, and recovery of `f` from that limit.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperplane::{classify, member, HyperplaneClass};
use crate::rational::{self, half, Rational};
use crate::seq::{ConvergentSeq, L1Functional, L1Vector};

/// `(φ(y))(x)` for `x ∈ W_f`.
pub fn phi_apply(f: &L1Functional, y: &L1Vector, x: &ConvergentSeq) -> Result<Rational> {
    if !member(f, x) {
        return Err(Error::NotInHyperplane(rational::format(&f.pair(x))));
    }
    Ok(y.coeffs()
        .iter()
        .enumerate()
        .map(|(j, yj)| yj * x.coord(j + 1))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakStarLimit {
    pub ehat: L1Vector,
    /// False when `f` is outside the class where `e_n → ê` is an isometric
    /// statement about `W_f* ≅ ℓ₁` (the formula is still well defined).
    pub within_hypothesis: bool,
}

/// `ê = (−f₂/f₁, −f₃/f₁, …)`.
pub fn weak_star_limit(f: &L1Functional) -> Result<WeakStarLimit> {
    let f1 = f.coeff(1);
    if f1.is_zero() {
        return Err(Error::ZeroLeadCoefficient);
    }
    let ehat = L1Vector::new(f.coeffs()[1..].iter().map(|c| -c / &f1).collect());
    Ok(WeakStarLimit {
        ehat,
        within_hypothesis: classify(f) == HyperplaneClass::DualL1Only,
    })
}

/// Smallest `N ≥ 1` with `Σ_{j>N} |f_{j+1}| < 1/2`.
pub fn dual_witness_threshold(f: &L1Functional) -> usize {
    let h = half();
    (1..)
        .find(|&n| {
            let rest: Rational = (n + 1..f.support_len()).map(|j| f.coeff(j + 1).abs()).sum();
            rest < h
        })
        .expect("finite support")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualWitness {
    pub x: ConvergentSeq,
    #[serde(with = "rational::one")]
    pub value: Rational,
}

/// The unit-ball point `x^N = (sgn y₁, …, sgn y_N, x₀^N, x₀^N, …)` of `W_f`
/// and `|(φ(y))(x^N)|`, which reaches `‖y‖₁` once `N` covers both supports.
pub fn dual_norm_lower_witness(f: &L1Functional, y: &L1Vector, n: usize) -> Result<DualWitness> {
    let class = classify(f);
    if class != HyperplaneClass::DualL1Only {
        return Err(Error::WrongClass {
            expected: "dual_l1_only",
            got: class,
        });
    }
    let threshold = dual_witness_threshold(f);
    if n < threshold {
        return Err(Error::NBelowThreshold { got: n, threshold });
    }
    let signs: Vec<Rational> = (1..=n)
        .map(|j| rational::sign_or_plus(&y.coeff(j)))
        .collect();
    let numer: Rational = signs
        .iter()
        .enumerate()
        .map(|(j, s)| f.coeff(j + 2) * s)
        .sum();
    let denom: Rational = (n + 1..f.support_len())
        .map(|j| f.coeff(j + 1))
        .fold(f.coeff(1), |acc, c| acc + c);
    if denom.is_zero() {
        return Err(Error::DegenerateWitness(format!(
            "f_1 + sum_(j>{n}) f_(j+1) vanishes"
        )));
    }
    let x0 = -numer / denom;
    let x = ConvergentSeq::new(signs, x0);
    let value = phi_apply(f, y, &x)?.abs();
    Ok(DualWitness { x, value })
}

/// A predual recovered from the weak*-limit of the basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Predual {
    /// `X ≅ W_f` for the returned `f`.
    Hyperplane { f: L1Functional },
    /// `ê = ±e_m`: `X ≅ c`, represented by any 1-complemented hyperplane.
    IsoC { representative: L1Functional },
}

impl Predual {
    pub fn functional(&self) -> &L1Functional {
        match self {
            Predual::Hyperplane { f } => f,
            Predual::IsoC { representative } => representative,
        }
    }
}

/// `f₁ = 1/(1 + ‖ê‖₁)`, `f_n = −ê_{n−1}/(1 + ‖ê‖₁)`.
pub fn predual_from_limit(ehat: &L1Vector) -> Result<Predual> {
    let norm = ehat.l1_norm();
    if norm > Rational::one() {
        return Err(Error::NotInUnitBall(rational::format(&norm)));
    }
    if ehat.coeffs().iter().any(|c| c.abs().is_one()) {
        // With ‖ê‖₁ ≤ 1 a unit-modulus coefficient forces ê = ±e_m.
        let representative = L1Functional::new(L1Vector::unit(2))?;
        return Ok(Predual::IsoC { representative });
    }
    let scale = (Rational::one() + norm).recip();
    let mut coeffs = Vec::with_capacity(ehat.support_len() + 1);
    coeffs.push(scale.clone());
    coeffs.extend(ehat.coeffs().iter().map(|e| -e * &scale));
    Ok(Predual::Hyperplane {
        f: L1Functional::new(L1Vector::new(coeffs))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn f(p: &[(i64, i64)]) -> L1Functional {
        L1Functional::from_ratios(p).unwrap()
    }

    fn v(p: &[(i64, i64)]) -> L1Vector {
        L1Vector::from_ratios(p)
    }

    fn seq(p: &[(i64, i64)], t: (i64, i64)) -> ConvergentSeq {
        ConvergentSeq::from_ratios(p, t)
    }

    #[test]
    fn phi_examples() {
        let g = f(&[(1, 2), (1, 2)]);
        let x = seq(&[(1, 1)], (-1, 1));
        assert_eq!(phi_apply(&g, &L1Vector::unit(5), &x).unwrap(), int(-1));
        assert_eq!(
            phi_apply(&g, &v(&[(2, 1), (0, 1), (1, 1)]), &x).unwrap(),
            int(1)
        );
        let bad = seq(&[(1, 1), (-3, 1)], (-3, 1));
        assert!(matches!(
            phi_apply(&f(&[(3, 4), (1, 4)]), &v(&[(1, 1), (1, 1)]), &bad),
            Err(Error::NotInHyperplane(_))
        ));
    }

    #[test]
    fn weak_star_limit_examples() {
        let w = weak_star_limit(&f(&[(3, 4), (1, 4)])).unwrap();
        assert_eq!(w.ehat, v(&[(-1, 3)]));
        assert!(w.within_hypothesis);
        let w = weak_star_limit(&f(&[(1, 1)])).unwrap();
        assert!(w.ehat.is_zero());
        assert!(!w.within_hypothesis);
        assert_eq!(
            weak_star_limit(&f(&[(0, 1), (1, 1)])),
            Err(Error::ZeroLeadCoefficient)
        );
    }

    #[test]
    fn witness_examples() {
        let g = f(&[(3, 4), (1, 4)]);
        let w = dual_norm_lower_witness(&g, &v(&[(1, 1)]), 1).unwrap();
        assert_eq!(w.x, seq(&[(1, 1)], (-1, 3)));
        assert_eq!(w.value, int(1));

        let w = dual_norm_lower_witness(&g, &v(&[(0, 1), (-2, 1)]), 2).unwrap();
        assert_eq!(w.x, seq(&[(1, 1), (-1, 1)], (-1, 3)));
        assert_eq!(w.value, int(2));
        assert!(w.x.sup_norm() <= int(1));

        assert_eq!(
            dual_norm_lower_witness(&g, &v(&[(1, 1)]), 0),
            Err(Error::NBelowThreshold {
                got: 0,
                threshold: 1
            })
        );
        assert!(matches!(
            dual_norm_lower_witness(&f(&[(1, 1)]), &v(&[(1, 1)]), 3),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn predual_examples() {
        assert_eq!(
            predual_from_limit(&v(&[(-1, 3)])).unwrap(),
            Predual::Hyperplane {
                f: f(&[(3, 4), (1, 4)])
            }
        );
        assert_eq!(
            predual_from_limit(&L1Vector::zero()).unwrap(),
            Predual::Hyperplane { f: f(&[(1, 1)]) }
        );
        assert_eq!(
            predual_from_limit(&L1Vector::unit(1)).unwrap(),
            Predual::IsoC {
                representative: f(&[(0, 1), (1, 1)])
            }
        );
        assert!(matches!(
            predual_from_limit(&v(&[(1, 1), (1, 2)])),
            Err(Error::NotInUnitBall(_))
        ));
    }

    #[test]
    fn predual_round_trip_normalizes_sign() {
        let g = f(&[(-5, 8), (1, 4), (-1, 8)]);
        let w = weak_star_limit(&g).unwrap();
        assert_eq!(w.ehat.l1_norm(), q(3, 5));
        let back = predual_from_limit(&w.ehat).unwrap();
        assert_eq!(back.functional(), &g.negate());
    }
}

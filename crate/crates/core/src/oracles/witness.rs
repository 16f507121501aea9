//! Two exact lower-bound routes to `‖P_z‖` that never read the closed-form
//! norm: the explicit row witnesses `x^(n,i)` and exhaustive enumeration of
//! sign patterns.

use num_traits::One;

use crate::error::Result;
use crate::hyperplane::projection_apply;
use crate::rational::{sign_or_plus, Rational};
use crate::seq::{ConvergentSeq, L1Functional};

/// The smallest truncation length at which both oracles are exact: every
/// coefficient of `f` is covered and one coordinate past the prefix of `z`
/// (where `zᵢ = z₀` and `f_{i+1} = 0`) lies in the free window.
pub fn exact_depth(f: &L1Functional, z: &ConvergentSeq) -> usize {
    f.support_len().max(z.prefix_len() + 1)
}

/// `x^(n,i)` with `x_j = sgn(δ_ij − f_{j+1}·zᵢ)` for `1 ≤ j ≤ n` and the
/// constant `sgn(−f₁·zᵢ)` beyond, together with `‖P_z(x^(n,i))‖`.
pub fn attained_norm_witness(
    f: &L1Functional,
    z: &ConvergentSeq,
    n: usize,
    i: usize,
) -> Result<(ConvergentSeq, Rational)> {
    let zi = z.coord(i);
    let prefix = (1..=n)
        .map(|j| {
            let delta = if i == j {
                Rational::one()
            } else {
                Rational::from_integer(0.into())
            };
            sign_or_plus(&(delta - f.coeff(j + 1) * &zi))
        })
        .collect();
    let x = ConvergentSeq::new(prefix, sign_or_plus(&(-f.coeff(1) * &zi)));
    let value = projection_apply(f, z, &x)?.sup_norm();
    Ok((x, value))
}

/// `max_{1≤i≤n} ‖P_z(x^(n,i))‖`.
pub fn attained_norm_max(f: &L1Functional, z: &ConvergentSeq, n: usize) -> Result<Rational> {
    let mut best = Rational::from_integer(0.into());
    for i in 1..=n.max(1) {
        let (_, v) = attained_norm_witness(f, z, n, i)?;
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// Max of `‖P_z(x)‖` over all `x` with prefix in `{−1, 1}^depth` and tail in
/// `{−1, 1}`.
pub fn extreme_point_norm_oracle(
    f: &L1Functional,
    z: &ConvergentSeq,
    depth: usize,
) -> Result<Rational> {
    assert!(depth < 24, "2^(depth+1) sign patterns");
    let one = Rational::one();
    let mut best = Rational::from_integer(0.into());
    for mask in 0u32..(1u32 << (depth + 1)) {
        let sign = |bit: usize| {
            if mask >> bit & 1 == 1 {
                -one.clone()
            } else {
                one.clone()
            }
        };
        let prefix = (0..depth).map(sign).collect();
        let x = ConvergentSeq::new(prefix, sign(depth));
        let v = projection_apply(f, z, &x)?.sup_norm();
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

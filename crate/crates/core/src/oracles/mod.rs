//! Independent cross-checks of every closed form in the crate.

pub mod implication;
pub mod numeric;
pub mod verify;
pub mod witness;

use num_traits::Signed;

pub use implication::{implication_suite, ImplicationReport};
pub use numeric::{numeric_projection_constant, NumericConfig, NumericEstimate};
pub use verify::{verify, Check, Report, Status, VerifyConfig};
pub use witness::{
    attained_norm_max, attained_norm_witness, exact_depth, extreme_point_norm_oracle,
};

use crate::duality::{phi_apply, weak_star_limit};
use crate::error::Result;
use crate::rational::Rational;
use crate::seq::{ConvergentSeq, L1Functional, L1Vector};

/// `|(φ(e_n))(x) − (φ(ê))(x)|`; zero once `n` is past the prefix of `x`.
pub fn weak_star_convergence_check(
    f: &L1Functional,
    x: &ConvergentSeq,
    n: usize,
) -> Result<Rational> {
    let ehat = weak_star_limit(f)?.ehat;
    let at_n = phi_apply(f, &L1Vector::unit(n), x)?;
    let at_limit = phi_apply(f, &ehat, x)?;
    Ok((at_n - at_limit).abs())
}

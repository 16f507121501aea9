//! Concrete evaluation of the eight structural properties of `W_f` and the
//! implications that hold between them:
//!
//! ```text
//! (1) ⇔ (2) ⇔ (3) ⇒ (4) ⇔ (5) ⇐ (6) ⇔ (7) ⇔ (8)
//! ```

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::hyperplane::{
    c0_one_complemented, classify, member, min_projection, one_complemented, projection_constant,
    projection_norm,
};
use crate::isometry::{embed_c_into_wf, project_wf_to_c};
use crate::rational;
use crate::seq::{ConvergentSeq, L1Functional};

pub const PROPERTY_NAMES: [&str; 8] = [
    "W_f is 1-complemented",
    "W_f is isometric to c",
    "some j >= 2 has |f_j| >= 1/2",
    "W_f* is isometric to l1",
    "some j >= 1 has |f_j| >= 1/2",
    "W_f is isometric to c0",
    "projection constant is 2",
    "|f_1| = 1 and f_j = 0 for j >= 2",
];

/// `(from, to)` pairs, 1-based, of every stated implication.
pub const IMPLICATIONS: [(usize, usize); 12] = [
    (1, 2),
    (2, 1),
    (2, 3),
    (3, 2),
    (3, 4),
    (4, 5),
    (5, 4),
    (6, 5),
    (6, 7),
    (7, 6),
    (7, 8),
    (8, 7),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationCheck {
    pub name: String,
    pub premise: bool,
    pub conclusion: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationReport {
    /// Truth values of properties (1) through (8).
    pub properties: [bool; 8],
    pub checks: Vec<ImplicationCheck>,
}

impl ImplicationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Deterministic sample of `c` used to probe the isometry.
fn sample_sequences(len: usize) -> Vec<ConvergentSeq> {
    let q = rational::q;
    let mut out = vec![
        ConvergentSeq::constant(q(1, 1)),
        ConvergentSeq::constant(q(-2, 3)),
        ConvergentSeq::from_ratios(&[(1, 1), (-1, 1), (1, 2)], (-1, 3)),
        ConvergentSeq::from_ratios(&[(0, 1), (3, 4), (-5, 7), (2, 1)], (1, 5)),
    ];
    out.extend((1..=len + 1).map(ConvergentSeq::basis));
    out
}

/// (1): a norm-one projection exists, confirmed by computing its norm.
fn norm_one_projection_exists(f: &L1Functional) -> bool {
    min_projection(f)
        .ok()
        .and_then(|m| projection_norm(f, &m.projection.z).ok())
        .is_some_and(|n| n.is_one())
}

/// (2): the explicit map `c → W_f` is an isometry with the stated inverse
/// on every sample point.
fn isometric_to_c(f: &L1Functional) -> bool {
    sample_sequences(f.support_len()).iter().all(|x| {
        let Ok(y) = embed_c_into_wf(f, x) else {
            return false;
        };
        member(f, &y)
            && y.sup_norm() == x.sup_norm()
            && project_wf_to_c(f, &y).is_ok_and(|back| &back == x)
    })
}

/// (6): `ker f` is exactly the space of null sequences, i.e. it contains every
/// `e_i` and misses the constant sequence.
fn equals_c0(f: &L1Functional) -> bool {
    let basis_inside = (1..=f.support_len() + 1).all(|i| member(f, &ConvergentSeq::basis(i)));
    basis_inside && !member(f, &ConvergentSeq::constant(rational::int(1)))
}

pub fn evaluate_properties(f: &L1Functional) -> [bool; 8] {
    [
        norm_one_projection_exists(f),
        isometric_to_c(f),
        !one_complemented(f).is_empty(),
        classify(f).dual_is_l1(),
        c0_one_complemented(f),
        equals_c0(f),
        projection_constant(f) == rational::int(2),
        f.coeff(1).abs().is_one() && f.coeffs()[1..].iter().all(Zero::is_zero),
    ]
}

pub fn implication_suite(f: &L1Functional) -> ImplicationReport {
    let properties = evaluate_properties(f);
    let checks = IMPLICATIONS
        .iter()
        .map(|&(a, b)| {
            let premise = properties[a - 1];
            let conclusion = properties[b - 1];
            ImplicationCheck {
                name: format!("({a}) => ({b})"),
                premise,
                conclusion,
                pass: !premise || conclusion,
            }
        })
        .collect();
    ImplicationReport { properties, checks }
}

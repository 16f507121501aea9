//! The per-functional verification report behind `hyperc verify`.

use std::time::Instant;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::duality::{
    dual_norm_lower_witness, dual_witness_threshold, predual_from_limit, weak_star_limit,
};
use crate::hyperplane::{
    classify, min_projection, minimizing_projection, projection_apply, projection_constant,
    HyperplaneClass, ProjectionSpec,
};
use crate::oracles::implication::implication_suite;
use crate::oracles::numeric::NumericConfig;
use crate::oracles::weak_star_convergence_check;
use crate::ordinal::{make_mu, mu_limit_compatibility, quotient_apply, COmegaNFunc};
use crate::rational::{self, q, Rational};
use crate::seq::{ConvergentSeq, L1Functional, L1Vector};
use crate::strategy::{ConstantValue, Registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub f: L1Functional,
    pub class: HyperplaneClass,
    pub checks: Vec<Check>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub numeric: NumericConfig,
    /// Agreement required between the numeric and closed-form constants.
    pub tolerance: f64,
    /// Depth for the sign-pattern oracle; `None` uses the exact depth.
    pub depth: Option<usize>,
    /// Record wall-clock time per check. Off by default so reports are
    /// byte-for-byte reproducible.
    pub timings: bool,
    /// Highest measure index probed for the quotient checks.
    pub measures: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            numeric: NumericConfig::default(),
            tolerance: 1e-6,
            depth: None,
            timings: false,
            measures: 20,
        }
    }
}

struct Recorder {
    checks: Vec<Check>,
    timings: bool,
}

impl Recorder {
    fn run(&mut self, name: impl Into<String>, body: impl FnOnce() -> (String, String, bool)) {
        let start = Instant::now();
        let (expected, got, ok) = body();
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        self.checks.push(Check {
            name: name.into(),
            expected,
            got,
            status: Status::from_bool(ok),
            elapsed_ms: self.timings.then_some(elapsed),
        });
    }
}

fn fmt(x: &Rational) -> String {
    rational::format(x)
}

/// A projection attaining the projection constant.
pub fn optimal_projection(f: &L1Functional) -> ProjectionSpec {
    match min_projection(f) {
        Ok(m) => m.projection,
        Err(_) => minimizing_projection(f, f.support_len().max(1))
            .expect("N = support length is always above the threshold"),
    }
}

/// A feasible but generally non-optimal `z`: all mass on the coordinate with
/// the largest coefficient.
fn spike_projection(f: &L1Functional) -> ConvergentSeq {
    let (k, c) = f
        .coeffs()
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.abs().cmp(&b.1.abs()))
        .expect("nonzero functional");
    let value = c.recip();
    if k == 0 {
        ConvergentSeq::new(vec![Rational::zero(); f.support_len()], value)
    } else {
        ConvergentSeq::basis(k).scale(&value)
    }
}

fn sample_sequences() -> Vec<ConvergentSeq> {
    vec![
        ConvergentSeq::constant(q(1, 1)),
        ConvergentSeq::from_ratios(&[(1, 1), (-1, 1)], (1, 2)),
        ConvergentSeq::from_ratios(&[(-1, 3), (1, 1), (0, 1), (1, 1)], (-1, 1)),
        ConvergentSeq::from_ratios(&[(2, 5), (-3, 4), (1, 6), (-1, 1), (1, 1), (1, 7)], (0, 1)),
    ]
}

fn sample_vectors() -> Vec<L1Vector> {
    vec![
        L1Vector::unit(1),
        L1Vector::from_ratios(&[(1, 1), (-2, 1), (1, 2)]),
        L1Vector::from_ratios(&[(0, 1), (0, 1), (3, 1), (-1, 5), (0, 1), (1, 9)]),
    ]
}

fn sample_functions(n: usize) -> Vec<COmegaNFunc> {
    let mut out = vec![
        COmegaNFunc::constant(n, q(1, 1)),
        COmegaNFunc::constant(n, q(-2, 3)),
    ];
    let blocks = (0..n)
        .map(|k| {
            let k = k as i64;
            ConvergentSeq::from_ratios(&[(k, 1), (-1, k + 2), (1, 1)], (k - 1, k + 1))
        })
        .collect();
    out.push(COmegaNFunc::from_blocks(blocks, q(5, 2)).expect("continuous by construction"));
    out
}

pub fn verify(f: &L1Functional, registry: &Registry, config: &VerifyConfig) -> Report {
    let class = classify(f);
    let mut rec = Recorder {
        checks: Vec::new(),
        timings: config.timings,
    };
    let constant = projection_constant(f);

    for name in registry.constant_names() {
        let strategy = registry.constant(name).expect("listed name");
        rec.run(format!("projection_constant/{name}"), || {
            let got = strategy.constant(f);
            match &got {
                ConstantValue::Exact(v) => (fmt(&constant), fmt(v), *v == constant),
                ConstantValue::Approx { value, converged } => {
                    let ok = *converged
                        && (value - rational::to_f64(&constant)).abs() <= config.tolerance;
                    (fmt(&constant), format!("{value:.12}"), ok)
                }
            }
        });
    }

    let optimal = optimal_projection(f);
    rec.run("optimal_projection/attains_constant", || {
        (fmt(&constant), fmt(&optimal.norm), optimal.norm == constant)
    });

    let spike = spike_projection(f);
    for (label, z) in [("optimal", &optimal.z), ("spike", &spike)] {
        let reference = registry
            .norm("formula")
            .and_then(|s| s.norm(f, z).ok())
            .map(|v| v.value);
        for name in registry.norm_names() {
            let strategy = registry.norm(name).expect("listed name");
            rec.run(format!("projection_norm/{name}@{label}"), || {
                match (strategy.norm(f, z), &reference) {
                    (Ok(v), Some(r)) => {
                        let ok = if v.exact {
                            &v.value == r
                        } else {
                            &v.value <= r
                        };
                        (fmt(r), fmt(&v.value), ok)
                    }
                    (Err(e), _) => ("value".into(), e.code().into(), false),
                    (Ok(v), None) => ("formula".into(), fmt(&v.value), false),
                }
            });
        }
        rec.run(
            format!("projection_norm/at_least_constant@{label}"),
            || match &reference {
                Some(r) => (format!(">= {}", fmt(&constant)), fmt(r), r >= &constant),
                None => (fmt(&constant), "error".into(), false),
            },
        );
    }

    let implications = implication_suite(f);
    for c in &implications.checks {
        rec.run(format!("implication/{}", c.name), || {
            (
                "premise false or conclusion true".into(),
                format!("premise={} conclusion={}", c.premise, c.conclusion),
                c.pass,
            )
        });
    }

    if class == HyperplaneClass::DualL1Only {
        for (k, y) in sample_vectors().iter().enumerate() {
            rec.run(format!("duality/norm_attained#{k}"), || {
                let n = y
                    .support_len()
                    .max(f.support_len())
                    .max(dual_witness_threshold(f));
                let want = y.l1_norm();
                match dual_norm_lower_witness(f, y, n) {
                    Ok(w) => (
                        fmt(&want),
                        fmt(&w.value),
                        w.value == want && w.x.sup_norm() <= Rational::one(),
                    ),
                    Err(e) => (fmt(&want), e.code().into(), false),
                }
            });
        }
        rec.run("duality/predual_round_trip", || {
            let want = if f.coeff(1) > Rational::zero() {
                f.clone()
            } else {
                f.negate()
            };
            let got = weak_star_limit(f).and_then(|w| predual_from_limit(&w.ehat));
            match got {
                Ok(p) => (
                    want.to_string(),
                    p.functional().to_string(),
                    p.functional() == &want,
                ),
                Err(e) => (want.to_string(), e.code().into(), false),
            }
        });
    }

    if f.coeff(1) != Rational::zero() {
        rec.run("duality/weak_star_limit", || {
            let members: Vec<ConvergentSeq> = sample_sequences()
                .iter()
                .filter_map(|s| projection_apply(f, &optimal.z, s).ok())
                .collect();
            let worst = members
                .iter()
                .flat_map(|x| {
                    (1..=3)
                        .map(move |extra| weak_star_convergence_check(f, x, x.prefix_len() + extra))
                })
                .map(|r| r.unwrap_or_else(|_| Rational::one()))
                .max()
                .unwrap_or_else(Rational::zero);
            ("0/1".into(), fmt(&worst), worst.is_zero())
        });
    }

    if matches!(class, HyperplaneClass::DualL1Only | HyperplaneClass::IsoC0) {
        rec.run("measures/total_variation", || {
            let bad = (1..=config.measures)
                .filter(|&i| make_mu(f, i).map_or(true, |m| !m.total_variation().is_one()))
                .count();
            ("0 failures".into(), format!("{bad} failures"), bad == 0)
        });
        let n = f.support_len();
        for (k, g) in sample_functions(n).iter().enumerate() {
            rec.run(
                format!("measures/quotient_membership#{k}"),
                || match quotient_apply(f, g, config.measures.max(n)) {
                    Ok(img) => {
                        let pairing = img.pairing_with(f).unwrap_or_else(Rational::one);
                        ("0/1".into(), fmt(&pairing), pairing.is_zero())
                    }
                    Err(e) => ("0/1".into(), e.code().into(), false),
                },
            );
            rec.run(
                format!("measures/limit_compatibility#{k}"),
                || match mu_limit_compatibility(f, g) {
                    Ok(ok) => ("true".into(), ok.to_string(), ok),
                    Err(e) => ("true".into(), e.code().into(), false),
                },
            );
        }
    }

    let passed = rec.checks.iter().all(|c| c.status == Status::Pass);
    Report {
        f: f.clone(),
        class,
        checks: rec.checks,
        passed,
    }
}

//! Named, interchangeable routes to the same quantity.
//!
//! Projection norms can be computed by the closed formula or by either of the
//! two witness oracles; projection constants by the closed form or the
//! numeric minimizer. Each route implements a common trait and is looked up
//! by name, so callers (the CLI, the verification report) choose them at
//! runtime and can register their own.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::hyperplane::{projection_constant, projection_norm};
use crate::oracles::numeric::{numeric_projection_constant, NumericConfig};
use crate::oracles::witness::{attained_norm_max, exact_depth, extreme_point_norm_oracle};
use crate::rational::{self, Rational};
use crate::seq::{ConvergentSeq, L1Functional};

/// A value for `‖P_z‖`, either exact or a guaranteed lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormValue {
    pub value: Rational,
    pub exact: bool,
}

pub trait NormStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn norm(&self, f: &L1Functional, z: &ConvergentSeq) -> Result<NormValue>;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ConstantValue {
    Exact(#[serde(with = "rational::one")] Rational),
    Approx { value: f64, converged: bool },
}

impl ConstantValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            ConstantValue::Exact(q) => rational::to_f64(q),
            ConstantValue::Approx { value, .. } => *value,
        }
    }
}

pub trait ConstantStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn constant(&self, f: &L1Functional) -> ConstantValue;
}

pub struct Formula;

impl NormStrategy for Formula {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn norm(&self, f: &L1Functional, z: &ConvergentSeq) -> Result<NormValue> {
        Ok(NormValue {
            value: projection_norm(f, z)?,
            exact: true,
        })
    }
}

/// Row witnesses `x^(n,i)` at the exact truncation length.
pub struct RowWitness;

impl NormStrategy for RowWitness {
    fn name(&self) -> &'static str {
        "row_witness"
    }

    fn norm(&self, f: &L1Functional, z: &ConvergentSeq) -> Result<NormValue> {
        Ok(NormValue {
            value: attained_norm_max(f, z, exact_depth(f, z))?,
            exact: true,
        })
    }
}

/// Exhaustive sign patterns; `depth: None` uses the exact depth.
pub struct ExtremePoints {
    pub depth: Option<usize>,
}

impl NormStrategy for ExtremePoints {
    fn name(&self) -> &'static str {
        "extreme_points"
    }

    fn norm(&self, f: &L1Functional, z: &ConvergentSeq) -> Result<NormValue> {
        let exact = exact_depth(f, z);
        let depth = self.depth.unwrap_or(exact);
        Ok(NormValue {
            value: extreme_point_norm_oracle(f, z, depth)?,
            exact: depth >= exact,
        })
    }
}

pub struct ClosedForm;

impl ConstantStrategy for ClosedForm {
    fn name(&self) -> &'static str {
        "closed_form"
    }

    fn constant(&self, f: &L1Functional) -> ConstantValue {
        ConstantValue::Exact(projection_constant(f))
    }
}

pub struct Numeric {
    pub config: NumericConfig,
}

impl ConstantStrategy for Numeric {
    fn name(&self) -> &'static str {
        "numeric"
    }

    fn constant(&self, f: &L1Functional) -> ConstantValue {
        let e = numeric_projection_constant(f, self.config);
        ConstantValue::Approx {
            value: e.value,
            converged: e.converged,
        }
    }
}

#[derive(Default)]
pub struct Registry {
    norms: BTreeMap<&'static str, Box<dyn NormStrategy>>,
    constants: BTreeMap<&'static str, Box<dyn ConstantStrategy>>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// All built-in strategies with default settings.
    pub fn builtin() -> Self {
        Registry::configured(NumericConfig::default(), None)
    }

    pub fn configured(numeric: NumericConfig, extreme_depth: Option<usize>) -> Self {
        let mut r = Registry::new();
        r.register_norm(Box::new(Formula));
        r.register_norm(Box::new(RowWitness));
        r.register_norm(Box::new(ExtremePoints {
            depth: extreme_depth,
        }));
        r.register_constant(Box::new(ClosedForm));
        r.register_constant(Box::new(Numeric { config: numeric }));
        r
    }

    /// Replaces any strategy already registered under the same name.
    pub fn register_norm(&mut self, s: Box<dyn NormStrategy>) {
        self.norms.insert(s.name(), s);
    }

    pub fn register_constant(&mut self, s: Box<dyn ConstantStrategy>) {
        self.constants.insert(s.name(), s);
    }

    pub fn norm(&self, name: &str) -> Option<&dyn NormStrategy> {
        self.norms.get(name).map(|b| b.as_ref())
    }

    pub fn constant(&self, name: &str) -> Option<&dyn ConstantStrategy> {
        self.constants.get(name).map(|b| b.as_ref())
    }

    pub fn norm_names(&self) -> Vec<&'static str> {
        self.norms.keys().copied().collect()
    }

    pub fn constant_names(&self) -> Vec<&'static str> {
        self.constants.keys().copied().collect()
    }
}

//! Floating-point minimization of `‖P_z‖` over truncated `z`, independent of
//! the closed-form projection constant.
//!
//! With `z = (z₁, …, z_N, z₀, z₀, …)` the objective is a maximum of
//! one-dimensional convex terms, one per free coordinate plus one for the
//! shared tail, subject to the single linear constraint `f(z) = 1`. The level
//! `t` is feasible iff the coordinatewise maxima of `f`'s contributions over
//! the sublevel sets `{term ≤ t}` sum to at least one. The search refines a
//! grid over `t` and, inside each feasibility test, a grid over every
//! coordinate. All grids are fixed, so results are reproducible.

use serde::Serialize;

use crate::rational::to_f64;
use crate::seq::L1Functional;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericConfig {
    /// Number of free coordinates `N` before the tail.
    pub truncation: usize,
    /// Maximum number of refinement rounds on the level grid.
    pub iterations: usize,
    /// Target width of the final level bracket.
    pub tolerance: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            truncation: 32,
            iterations: 200,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericEstimate {
    /// Smallest level found feasible: the norm of an explicit feasible `z`.
    pub value: f64,
    /// Largest level found infeasible.
    pub lower: f64,
    pub converged: bool,
    pub rounds: usize,
}

const GRID: usize = 16;

/// `|1 − b·s| + |s|·(1 − |b|)`.
fn term(b: f64, s: f64) -> f64 {
    (1.0 - b * s).abs() + s.abs() * (1.0 - b.abs())
}

/// One block of the separable objective: a coordinate's pairing weight and
/// the coefficients `f_{i+1}` whose terms it controls.
struct Block {
    weight: f64,
    rows: Vec<f64>,
}

impl Block {
    fn level(&self, s: f64) -> f64 {
        self.rows.iter().map(|&b| term(b, s)).fold(0.0, f64::max)
    }

    /// Largest `weight·s` over `{s : level(s) ≤ t}`, approached from inside
    /// the sublevel set. The set is an interval containing `0`.
    fn best(&self, t: f64, rounds: usize) -> f64 {
        if self.weight == 0.0 || self.level(0.0) > t {
            return 0.0;
        }
        let dir = self.weight.signum();
        let inside = |r: f64| self.level(dir * r) <= t;
        let mut hi = 1.0;
        while inside(hi) {
            hi *= 2.0;
            if hi > 1e12 {
                return self.weight.abs() * hi;
            }
        }
        let mut lo = 0.0;
        for _ in 0..rounds {
            let step = (hi - lo) / GRID as f64;
            if step <= f64::EPSILON * hi {
                break;
            }
            let mut last = lo;
            for k in 1..GRID {
                let r = lo + step * k as f64;
                if inside(r) {
                    last = r;
                } else {
                    break;
                }
            }
            hi = last + step;
            lo = last;
        }
        self.weight.abs() * lo
    }
}

fn blocks(f: &L1Functional, truncation: usize) -> Vec<Block> {
    let coeff = |j: usize| to_f64(&f.coeff(j));
    let n = f.support_len();
    let mut out: Vec<Block> = (1..=truncation)
        .map(|i| Block {
            weight: coeff(i + 1),
            rows: vec![coeff(i + 1)],
        })
        .collect();
    // The tail z₀ pairs with f₁ and with every f_{i+1}, i > N; its rows
    // include all coordinates past the truncation, one of which has f_{i+1} = 0.
    let mut tail_rows: Vec<f64> = (truncation + 1..n).map(|i| coeff(i + 1)).collect();
    tail_rows.push(0.0);
    let tail_weight = coeff(1) + tail_rows.iter().sum::<f64>();
    out.push(Block {
        weight: tail_weight,
        rows: tail_rows,
    });
    out
}

fn feasible(blocks: &[Block], t: f64, rounds: usize) -> bool {
    blocks.iter().map(|b| b.best(t, rounds)).sum::<f64>() >= 1.0
}

/// Approximates `inf { ‖P_z‖ : f(z) = 1, z = (z₁, …, z_N, z₀, …) }`.
pub fn numeric_projection_constant(f: &L1Functional, config: NumericConfig) -> NumericEstimate {
    let blocks = blocks(f, config.truncation);
    let inner_rounds = 64;

    // Feasible start: put all mass on the coordinate with the largest weight.
    let start = blocks
        .iter()
        .max_by(|a, b| a.weight.abs().total_cmp(&b.weight.abs()))
        .expect("at least the tail block");
    let s = 1.0 / start.weight;
    let mut hi = blocks
        .iter()
        .map(|b| {
            if std::ptr::eq(b, start) {
                b.level(s)
            } else {
                b.level(0.0)
            }
        })
        .fold(0.0, f64::max);
    let mut lo = 1.0;
    if feasible(&blocks, lo, inner_rounds) {
        return NumericEstimate {
            value: lo,
            lower: lo,
            converged: true,
            rounds: 0,
        };
    }

    let mut rounds = 0;
    while rounds < config.iterations && hi - lo > config.tolerance {
        rounds += 1;
        let step = (hi - lo) / GRID as f64;
        let mut first = hi;
        for k in 1..GRID {
            let t = lo + step * k as f64;
            if feasible(&blocks, t, inner_rounds) {
                first = t;
                break;
            }
        }
        lo = first - step;
        hi = first;
    }
    NumericEstimate {
        value: hi,
        lower: lo,
        converged: hi - lo <= config.tolerance,
        rounds,
    }
}

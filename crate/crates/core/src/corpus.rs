//! Exhaustive grids of small normalized functionals.

use std::collections::BTreeSet;

use crate::rational;
use crate::seq::{L1Functional, L1Vector};

/// Every `f = (k₁, …, k_s)/D` with `D ≤ max_den`, `s ≤ max_support`,
/// integer `kⱼ`, `Σ|kⱼ| = D` and `k_s ≠ 0`, deduplicated and sorted.
pub fn exhaustive_grid(max_den: u32, max_support: usize) -> Vec<L1Functional> {
    let mut seen: BTreeSet<L1Vector> = BTreeSet::new();
    for den in 1..=max_den as i64 {
        for support in 1..=max_support {
            let mut ks = vec![0i64; support];
            fill(&mut ks, 0, den, &mut |ks| {
                if ks[support - 1] != 0 {
                    seen.insert(L1Vector::new(
                        ks.iter().map(|&k| rational::q(k, den)).collect(),
                    ));
                }
            });
        }
    }
    seen.into_iter()
        .map(|v| L1Functional::new(v).expect("unit l1 norm by construction"))
        .collect()
}

/// Enumerates integer vectors with `Σ|kⱼ| = remaining` over `ks[pos..]`.
fn fill(ks: &mut [i64], pos: usize, remaining: i64, emit: &mut impl FnMut(&[i64])) {
    if pos + 1 == ks.len() {
        for k in [remaining, -remaining] {
            ks[pos] = k;
            emit(ks);
            if remaining == 0 {
                break;
            }
        }
        return;
    }
    for mag in 0..=remaining {
        for k in [mag, -mag] {
            ks[pos] = k;
            fill(ks, pos + 1, remaining - mag, emit);
            if mag == 0 {
                break;
            }
        }
    }
}

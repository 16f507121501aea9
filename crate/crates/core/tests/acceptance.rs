//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line is printed even when an
//! earlier criterion fails; the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperc_core::corpus::exhaustive_grid;
use hyperc_core::duality::{
    dual_norm_lower_witness, phi_apply, predual_from_limit, weak_star_limit, Predual,
};
use hyperc_core::hyperplane::{
    classify, member, min_projection, minimizing_projection, one_complemented, projection_constant,
    projection_norm, HyperplaneClass,
};
use hyperc_core::isometry::{embed_c_into_wf, iso_c0, project_wf_to_c};
use hyperc_core::oracles::implication::implication_suite;
use hyperc_core::oracles::numeric::{numeric_projection_constant, NumericConfig};
use hyperc_core::oracles::weak_star_convergence_check;
use hyperc_core::oracles::witness::{attained_norm_max, exact_depth, extreme_point_norm_oracle};
use hyperc_core::ordinal::{
    integrate, make_mu, mu_limit_compatibility, quotient_apply, COmegaNFunc, FinMeasure,
};
use hyperc_core::rational::{self, Rational};
use hyperc_core::{ConvergentSeq, L1Functional, L1Vector};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: String) -> Outcome {
    Outcome { pass, summary }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_q(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rational::q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn rand_vector(rng: &mut ChaCha8Rng, max_support: usize) -> L1Vector {
    loop {
        let s = rng.gen_range(1..=max_support);
        let v = L1Vector::new((0..s).map(|_| rand_q(rng, 9, 7)).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

fn rand_functional(rng: &mut ChaCha8Rng, max_support: usize) -> L1Functional {
    rand_vector(rng, max_support).normalize().unwrap()
}

fn rand_seq(rng: &mut ChaCha8Rng, max_prefix: usize) -> ConvergentSeq {
    let len = rng.gen_range(0..=max_prefix);
    ConvergentSeq::new(
        (0..len).map(|_| rand_q(rng, 9, 7)).collect(),
        rand_q(rng, 9, 7),
    )
}

/// A random `z` with `f(z) = 1`.
fn rand_projection_z(rng: &mut ChaCha8Rng, f: &L1Functional) -> ConvergentSeq {
    loop {
        let z = rand_seq(rng, 8);
        let p = f.pair(&z);
        if !p.is_zero() {
            return z.scale(&p.recip());
        }
    }
}

/// A random element of `W_f`, pushed into the unit ball when `ball` is set
/// (half the time onto the unit sphere).
fn rand_member(rng: &mut ChaCha8Rng, f: &L1Functional, ball: bool) -> ConvergentSeq {
    let nonzero: Vec<usize> = (1..=f.support_len())
        .filter(|&j| !f.coeff(j).is_zero())
        .collect();
    let j = nonzero[rng.gen_range(0..nonzero.len())];
    let z = if j == 1 {
        ConvergentSeq::new(vec![Rational::zero(); f.support_len()], f.coeff(1).recip())
    } else {
        ConvergentSeq::basis(j - 1).scale(&f.coeff(j).recip())
    };
    let x = rand_seq(rng, 10);
    let mut y = &x - &z.scale(&f.pair(&x));
    if ball {
        let s = y.sup_norm();
        if !s.is_zero() && (s > Rational::one() || rng.gen_bool(0.5)) {
            y = y.scale(&s.recip());
        }
    }
    debug_assert!(member(f, &y));
    y
}

fn rand_comega(rng: &mut ChaCha8Rng, n: usize) -> COmegaNFunc {
    let blocks = (0..n)
        .map(|k| rand_seq(rng, if k + 1 == n { 60 } else { 8 }))
        .collect();
    COmegaNFunc::from_blocks(blocks, rand_q(rng, 9, 7)).unwrap()
}

fn criterion_1(corpus: &[L1Functional]) -> Outcome {
    let mut r = rng(1);
    let mut instances: Vec<L1Functional> = corpus.to_vec();
    instances.extend((0..100).map(|_| rand_functional(&mut r, 8)));
    let start = Instant::now();
    let config = NumericConfig {
        truncation: 32,
        ..NumericConfig::default()
    };
    let mut worst = 0.0f64;
    let mut bad = 0;
    for f in &instances {
        let e = numeric_projection_constant(f, config);
        let err = (e.value - rational::to_f64(&projection_constant(f))).abs();
        worst = worst.max(err);
        if err > 1e-6 {
            bad += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed < Duration::from_secs(120),
        format!(
            "numeric (N=32) vs closed-form projection constant: {} instances, {bad} outside 1e-6, max |err| = {worst:.2e}, {:.2} s (limit 120 s)",
            instances.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut r = rng(2);
    let mut bad = 0;
    let mut shallow = 0;
    for _ in 0..1000 {
        let f = rand_functional(&mut r, 8);
        let z = rand_projection_z(&mut r, &f);
        let want = projection_norm(&f, &z).unwrap();
        let depth = exact_depth(&f, &z);
        let rows = attained_norm_max(&f, &z, depth).unwrap();
        let signs = extreme_point_norm_oracle(&f, &z, depth).unwrap();
        if rows != want || signs != want {
            bad += 1;
        }
        let literal = f.support_len().max(z.prefix_len()).max(1);
        if extreme_point_norm_oracle(&f, &z, literal).unwrap() < want {
            shallow += 1;
        }
    }
    outcome(
        bad == 0,
        format!(
            "row witnesses and sign patterns equal the norm formula exactly on 1000 random (f, z): {bad} mismatches \
             (depth max(|f|, |z|+1); at depth max(|f|, |z|) {shallow} pairs give only a lower bound)"
        ),
    )
}

fn criterion_3(corpus: &[L1Functional]) -> Outcome {
    let two = rational::int(2);
    let mut bad = Vec::new();
    let (mut norm_one, mut other) = (0, 0);
    for f in corpus {
        if !one_complemented(f).is_empty() {
            norm_one += 1;
            let ok = min_projection(f)
                .and_then(|m| projection_norm(f, &m.projection.z))
                .is_ok_and(|n| n.is_one());
            if !ok {
                bad.push(f.to_string());
            }
        } else {
            other += 1;
            let c = projection_constant(f);
            let is_e1 = f.support_len() == 1;
            let attained = minimizing_projection(f, f.support_len())
                .is_ok_and(|p| projection_norm(f, &p.z).is_ok_and(|n| n == c));
            if !(c > Rational::one() && (c == two) == is_e1 && attained) {
                bad.push(f.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "norm-one branch on {norm_one} corpus f, constant in (1, 2] with 2 iff f = +-e1 on {other} others: {} failures {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion_4(corpus: &[L1Functional]) -> Outcome {
    let mut r = rng(4);
    let mut bad = 0;
    let (mut onto_c, mut onto_c0) = (0, 0);
    for f in corpus {
        match classify(f) {
            HyperplaneClass::IsoC => {
                onto_c += 1;
                for _ in 0..1000 {
                    let x = rand_seq(&mut r, 10);
                    let y = embed_c_into_wf(f, &x).unwrap();
                    let back = project_wf_to_c(f, &y).unwrap();
                    let w = rand_member(&mut r, f, false);
                    let round = project_wf_to_c(f, &w).and_then(|v| embed_c_into_wf(f, &v));
                    if !(member(f, &y)
                        && y.sup_norm() == x.sup_norm()
                        && back == x
                        && round.as_ref() == Ok(&w))
                    {
                        bad += 1;
                    }
                }
            }
            HyperplaneClass::IsoC0 => {
                onto_c0 += 1;
                for _ in 0..1000 {
                    let x = rand_seq(&mut r, 10);
                    let x = &x - &ConvergentSeq::constant(x.limit().clone());
                    let y = iso_c0(f, &x).unwrap();
                    if !(member(f, &y) && y.sup_norm() == x.sup_norm() && y == x) {
                        bad += 1;
                    }
                }
            }
            _ => {}
        }
    }
    outcome(
        bad == 0,
        format!(
            "isometries exact on 1000 random x per f ({onto_c} f onto c, {onto_c0} f onto c0): {bad} failures"
        ),
    )
}

fn criterion_5(corpus: &[L1Functional]) -> Outcome {
    let mut r = rng(5);
    let ys: Vec<L1Vector> = (0..100).map(|_| rand_vector(&mut r, 8)).collect();
    let (mut fs, mut witness_bad, mut bound_bad) = (0, 0, 0);
    for f in corpus
        .iter()
        .filter(|f| classify(f) == HyperplaneClass::DualL1Only)
    {
        fs += 1;
        for y in &ys {
            let n = y.support_len().max(f.support_len());
            let ok = dual_norm_lower_witness(f, y, n).is_ok_and(|w| {
                w.value == y.l1_norm() && member(f, &w.x) && w.x.sup_norm() <= Rational::one()
            });
            if !ok {
                witness_bad += 1;
            }
        }
        for k in 0..1000 {
            let x = rand_member(&mut r, f, true);
            let y = &ys[k % ys.len()];
            if phi_apply(f, y, &x).unwrap().abs() > y.l1_norm() {
                bound_bad += 1;
            }
        }
    }
    outcome(
        witness_bad == 0 && bound_bad == 0,
        format!(
            "dual norm attained exactly for {fs} dual_l1_only f x 100 y ({witness_bad} failures); \
             |phi(y)(x)| <= |y|_1 on 1000 x in the unit ball per f ({bound_bad} violations)"
        ),
    )
}

fn criterion_6(corpus: &[L1Functional]) -> Outcome {
    let mut r = rng(6);
    let with_lead: Vec<&L1Functional> = corpus.iter().filter(|f| !f.coeff(1).is_zero()).collect();
    let mut limit_bad = 0;
    for _ in 0..1000 {
        let f = with_lead[r.gen_range(0..with_lead.len())];
        let x = rand_member(&mut r, f, false);
        let n = x.prefix_len() + r.gen_range(1..=20);
        if !weak_star_convergence_check(f, &x, n).is_ok_and(|d| d.is_zero()) {
            limit_bad += 1;
        }
    }
    let half = rational::half();
    let mut trips = 0;
    let mut trip_bad = 0;
    for f in corpus {
        let eligible = f.coeff(1) >= half && (2..=f.support_len()).all(|j| f.coeff(j).abs() < half);
        if !eligible {
            continue;
        }
        trips += 1;
        let ok = weak_star_limit(f)
            .and_then(|w| predual_from_limit(&w.ehat))
            .is_ok_and(|p| matches!(&p, Predual::Hyperplane { f: g } if g == f));
        if !ok {
            trip_bad += 1;
        }
    }
    outcome(
        limit_bad == 0 && trip_bad == 0,
        format!(
            "weak* check vanishes past the prefix on 1000 (f, x, n) ({limit_bad} failures); \
             predual round trip exact on {trips} corpus f ({trip_bad} failures)"
        ),
    )
}

fn criterion_7(measure_corpus: &[L1Functional]) -> Outcome {
    let mut r = rng(7);
    let (mut fs, mut tv_bad, mut member_bad, mut compat_bad) = (0, 0, 0, 0);
    for f in measure_corpus {
        let n = f.support_len();
        let class = classify(f);
        if !(2..=6).contains(&n)
            || !matches!(class, HyperplaneClass::DualL1Only | HyperplaneClass::IsoC0)
        {
            continue;
        }
        fs += 1;
        for i in 1..=40 {
            if !make_mu(f, i).is_ok_and(|m| m.total_variation().is_one()) {
                tv_bad += 1;
            }
        }
        let mus: Vec<FinMeasure> = (1..=40).map(|i| make_mu(f, i).unwrap()).collect();
        for k in 0..100 {
            let g = rand_comega(&mut r, n);
            let image = quotient_apply(f, &g, 40);
            let in_wf = image
                .as_ref()
                .is_ok_and(|img| img.pairing_with(f).is_some_and(|p| p.is_zero()));
            // Every tenth function also goes through the measures themselves.
            let agrees = k % 10 != 0
                || image.as_ref().is_ok_and(|img| {
                    mus.iter()
                        .zip(&img.values)
                        .all(|(mu, v)| integrate(mu, &g).as_ref() == Ok(v))
                });
            if !(in_wf && agrees) {
                member_bad += 1;
            }
            if !mu_limit_compatibility(f, &g).unwrap_or(false) {
                compat_bad += 1;
            }
        }
    }
    outcome(
        tv_bad + member_bad + compat_bad == 0,
        format!(
            "measures on {fs} f with support 2..6 (denominators <= 8), i = 1..40, 100 functions each: \
             {tv_bad} total-variation, {member_bad} membership, {compat_bad} limit failures"
        ),
    )
}

fn criterion_8(corpus: &[L1Functional]) -> Outcome {
    let failures: Vec<String> = corpus
        .iter()
        .filter(|f| !implication_suite(f).all_pass())
        .map(|f| f.to_string())
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "implication suite on {} corpus f: {} failures {:?}",
            corpus.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn main() {
    let corpus = exhaustive_grid(8, 4);
    let measure_corpus = exhaustive_grid(8, 6);
    let criteria: [Criterion; 8] = [
        (
            "closed form vs optimization",
            Box::new(|| criterion_1(&corpus)),
        ),
        ("formula attainment", Box::new(criterion_2)),
        ("norm-1 branch", Box::new(|| criterion_3(&corpus))),
        ("isometry exactness", Box::new(|| criterion_4(&corpus))),
        ("duality", Box::new(|| criterion_5(&corpus))),
        ("weak* limit", Box::new(|| criterion_6(&corpus))),
        ("measures", Box::new(|| criterion_7(&measure_corpus))),
        ("main theorem suite", Box::new(|| criterion_8(&corpus))),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        println!(
            "{} criterion {} ({title}): {} [{:.1} s]",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.summary,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

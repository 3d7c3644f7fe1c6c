//! Acceptance checks for the square-to-segment bijection. Prints one
//! `[PASS]`/`[FAIL]` line per criterion and exits nonzero if any fails.

mod common;

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cantor_square::cantor_map::{classify_chain, dedekind_family, has_c_preimage, in_bn};
use cantor_square::sb_finite::{build_bijection, verify_bijection, FiniteInjection};
use cantor_square::{
    forward_bijection, interleave_f, inverse_bijection, SquarePoint, UnitRational, UnitValue,
};
use common::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const SAMPLES: usize = 10_000;
const MAX_DEN: u64 = 10_000;
const FORWARD_BUDGET: Duration = Duration::from_secs(30);
const DEDEKIND_SAMPLES: usize = 100;
const MAX_PREFIX: usize = 9;
const SB_PAIRS: usize = 500;
const SB_MAX_SIZE: usize = 64;
const SB_BUDGET: Duration = Duration::from_secs(5);
const ORACLE_POINTS: usize = 1_000;
const ORACLE_DIGITS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(n: u64, d: u64) -> UnitRational {
    UnitRational::from_u64(n, d).unwrap()
}

fn same_point(a: &SquarePoint, b: &SquarePoint) -> bool {
    a == b && a.x.to_rational() == b.x.to_rational() && a.y.to_rational() == b.y.to_rational()
}

fn forward_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1);
    let edges = [r(0, 1), r(1, 2), r(1, 1)];
    let mut points: Vec<(UnitRational, UnitRational)> = edges
        .iter()
        .flat_map(|x| edges.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    points.extend((0..SAMPLES).map(|_| random_point(&mut rng, MAX_DEN)));
    let mut failures = 0;
    for (x, y) in &points {
        let p = point(x, y);
        let back = inverse_bijection(&forward_bijection(&p));
        if !same_point(&back, &p) {
            failures += 1;
            if failures == 1 {
                eprintln!("  forward round trip: ({x}, {y}) came back as {back}");
            }
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{} points, {failures} failures, {elapsed:.2?}", points.len());
    if failures == 0 && elapsed < FORWARD_BUDGET {
        Ok(detail)
    } else {
        Err(format!("{detail} (budget {FORWARD_BUDGET:?})"))
    }
}

fn backward_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2);
    let mut values = vec![r(0, 1), r(1, 1), r(10, 11), r(4, 11), r(1, 200)];
    values.extend((0..SAMPLES).map(|_| random_rational(&mut rng, MAX_DEN)));
    let mut failures = 0;
    for t in &values {
        let tv = value(t);
        let again = forward_bijection(&inverse_bijection(&tv));
        if again != tv || again.to_rational() != *t {
            failures += 1;
            if failures == 1 {
                eprintln!("  backward round trip: {t} came back as {again}");
            }
        }
    }
    let detail = format!("{} values, {failures} failures", values.len());
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn injectivity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut points = HashSet::new();
    while points.len() < SAMPLES {
        points.insert(random_point(&mut rng, MAX_DEN));
    }
    let images: HashSet<UnitValue> = points
        .iter()
        .map(|(x, y)| forward_bijection(&point(x, y)))
        .collect();
    let detail = format!("{} points, {} distinct images", points.len(), images.len());
    if images.len() == points.len() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn agreement_off_the_bottom_edge() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let (mut agree, mut disagree, mut bad) = (0, 0, 0);
    // 28/55 = 0.5(09) is off the chain, so f* moves it
    let fixed = [(r(28, 55), r(0, 1)), (r(28, 55), r(1, 3))];
    let sampled = (0..SAMPLES).map(|_| random_point(&mut rng, MAX_DEN));
    for (x, y) in fixed.into_iter().chain(sampled) {
        let p = point(&x, &y);
        if forward_bijection(&p) == interleave_f(&p) {
            agree += 1;
        } else {
            disagree += 1;
            if !y.is_zero() {
                bad += 1;
                eprintln!("  f* and f differ at ({x}, {y})");
            }
        }
    }
    let detail = format!("{agree} agree, {disagree} differ, {bad} differ with y > 0");
    if bad == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn dedekind_regression() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut failures = 0;
    for i in 0..DEDEKIND_SAMPLES {
        let prefix: Vec<u8> = (0..i % (MAX_PREFIX + 1)).map(|_| rng.gen_range(0..10)).collect();
        let filler = random_filler(&mut rng);
        let z = dedekind_family(&prefix, &filler).map_err(|e| e.to_string())?;
        let preimage_free = has_c_preimage(&z) == Ok(false);
        let round_trip = forward_bijection(&inverse_bijection(&z)) == z;
        if !(preimage_free && round_trip) {
            failures += 1;
            eprintln!("  dedekind {prefix:?} / {filler}: preimage-free {preimage_free}, round trip {round_trip}");
        }
    }
    let detail = format!("{DEDEKIND_SAMPLES} values, {failures} failures");
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn pinned_values() -> Outcome {
    let at = |x: u64, y: u64| forward_bijection(&point(&r(x, 1), &r(y, 1))).to_rational();
    let (a, b) = (at(1, 0), at(1, 1));
    let detail = format!("f*(1, 0) = {a}, f*(1, 1) = {b}");
    if a == r(10, 11) && b == r(1, 1) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Walks `a → g⁻¹(a) → f⁻¹(·) → …` backwards; `a` is on the chain iff the
/// walk stops at an element outside `g(B)`.
fn on_chain_by_ancestry(a: usize, f: &FiniteInjection, g: &FiniteInjection) -> bool {
    let f_inv = f.inverse();
    let g_inv = g.inverse();
    let mut cur = a;
    for _ in 0..=f.domain_size() {
        match g_inv[cur] {
            None => return true,
            Some(b) => match f_inv[b] {
                None => return false,
                Some(prev) => cur = prev,
            },
        }
    }
    false
}

fn finite_schroeder_bernstein() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(7);
    let mut failures = 0;
    for _ in 0..SB_PAIRS {
        let n = rng.gen_range(0..=SB_MAX_SIZE);
        let mut fm: Vec<usize> = (0..n).collect();
        let mut gm: Vec<usize> = (0..n).collect();
        fm.shuffle(&mut rng);
        gm.shuffle(&mut rng);
        let f = FiniteInjection::new(fm, n).map_err(|e| e.to_string())?;
        let g = FiniteInjection::new(gm, n).map_err(|e| e.to_string())?;
        let h = build_bijection(&f, &g).map_err(|e| e.to_string())?;
        let g_inv = g.inverse();
        let matches = (0..n).all(|a| {
            let expected = if on_chain_by_ancestry(a, &f, &g) {
                Some(f.apply(a))
            } else {
                g_inv[a]
            };
            expected == Some(h[a])
        });
        if !(verify_bijection(&h, n, n) && matches) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{SB_PAIRS} pairs, {failures} failures, {elapsed:.2?}");
    if failures == 0 && elapsed < SB_BUDGET {
        Ok(detail)
    } else {
        Err(format!("{detail} (budget {SB_BUDGET:?})"))
    }
}

fn witness_decidability() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut failures = 0;
    let mut largest = 0;
    for _ in 0..SAMPLES {
        let t = value(&random_rational(&mut rng, MAX_DEN));
        let report = classify_chain(&t);
        let size = report.candidates.len();
        largest = largest.max(size);
        let bound = match report.summary.and_then(|s| s.first_nonzero_after_1) {
            Some(j) => ((j - 1) as f64).log2() + 1.0,
            None => 1.0,
        };
        let others_clear = match report.witness.level() {
            Some(n) => report
                .candidates
                .iter()
                .filter(|c| c.level != n)
                .all(|c| !c.member && (c.level == 0 || in_bn(&t, c.level) == Ok(false))),
            None => report.candidates.iter().all(|c| !c.member),
        };
        if size as f64 > bound || !others_clear {
            failures += 1;
            eprintln!("  witness check failed for {t}: {report:?}");
        }
    }
    let detail = format!("{SAMPLES} values, largest candidate set {largest}, {failures} failures");
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn output_digits(t: &UnitValue, n: usize) -> Vec<u8> {
    if t.is_one() {
        return vec![9; n];
    }
    (1..=n).map(|k| t.digit_at(k).unwrap()).collect()
}

fn digit_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut failures = 0;
    for _ in 0..ORACLE_POINTS {
        let (x, y) = random_point(&mut rng, MAX_DEN);
        let interleaves = !y.is_zero() || ancestry_level(&x).is_some();
        let expected = if interleaves {
            interleave_digits(&x, &y, ORACLE_DIGITS)
        } else {
            long_division_digits(&x, ORACLE_DIGITS)
        };
        let got = output_digits(&forward_bijection(&point(&x, &y)), ORACLE_DIGITS);
        if got != expected {
            failures += 1;
            eprintln!("  digits differ at ({x}, {y})");
        }
    }
    let detail = format!("{ORACLE_POINTS} points x {ORACLE_DIGITS} digits, {failures} failures");
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("forward round trip", forward_round_trip),
        ("backward round trip", backward_round_trip),
        ("injectivity", injectivity),
        ("agreement with f off y = 0", agreement_off_the_bottom_edge),
        ("dedekind regression", dedekind_regression),
        ("pinned values", pinned_values),
        ("finite schroeder-bernstein", finite_schroeder_bernstein),
        ("witness decidability", witness_decidability),
        ("digit oracle", digit_oracle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

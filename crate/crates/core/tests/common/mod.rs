//! Independent oracles and samplers shared by the integration tests.
//!
//! Nothing here goes through the factored stream machinery: digits come
//! from plain long division and set membership from walking the
//! Schröder–Bernstein ancestry one step at a time.

#![allow(dead_code)]

use std::collections::HashSet;

use cantor_square::{PeriodicDigits, SquarePoint, UnitRational, UnitValue};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::Rng;

/// First `n` decimal digits of `r` by schoolbook long division; the value 1
/// streams as all 9s, matching how f encodes it.
pub fn long_division_digits(r: &UnitRational, n: usize) -> Vec<u8> {
    if r.is_one() {
        return vec![9; n];
    }
    let den = r.denom().clone();
    let mut rem = r.numer().clone();
    let ten = BigUint::from(10u32);
    (0..n)
        .map(|_| {
            rem = &rem * &ten;
            let d = (&rem / &den).to_u8().unwrap();
            rem = &rem % &den;
            d
        })
        .collect()
}

/// First `n` digits of `0.x₁y₁x₂y₂…` built from two digit streams.
pub fn interleave_digits(x: &UnitRational, y: &UnitRational, n: usize) -> Vec<u8> {
    let half = n.div_ceil(2);
    let xs = long_division_digits(x, half);
    let ys = long_division_digits(y, half);
    xs.iter()
        .zip(&ys)
        .flat_map(|(&a, &b)| [a, b])
        .take(n)
        .collect()
}

/// A brute-force view of an explicit digit stream.
struct Window {
    digits: PeriodicDigits,
}

impl Window {
    /// Collects substream digits by direct indexing and reports
    /// (digits, eventually_nines, all_nines) over a window long enough to
    /// cover the preperiod and two full periods.
    fn substream(&self, start: usize) -> (PeriodicDigits, bool, bool) {
        let m = self.digits.preperiod().len();
        let p = self.digits.period().len();
        let tail_start = m + 1;
        let positions_in = |lo: usize, hi: usize| {
            (lo..=hi).filter(move |k| k >= &start && (k - start).is_multiple_of(2))
        };
        let eventually_nines = positions_in(tail_start, m + 2 * p).all(|k| self.digits.digit(k) == 9);
        let all_nines = eventually_nines && positions_in(1, m).all(|k| self.digits.digit(k) == 9);
        // substream of a stream with preperiod m, period p has preperiod ≤ ⌈m/2⌉
        // and period dividing p, so 2p consecutive entries after the head pin it down
        let head = m.div_ceil(2) + 1;
        let entries: Vec<u8> = (0..head + 2 * p).map(|i| self.digits.digit(start + 2 * i)).collect();
        let (pre, per) = entries.split_at(head);
        let digits = PeriodicDigits::new(pre.to_vec(), per.to_vec()).unwrap();
        (digits, eventually_nines, all_nines)
    }
}

pub enum Ancestry {
    /// Reached `A_0` after this many `g⁻¹ ∘ f⁻¹` steps: `t ∈ B_n`.
    StartsInA0(u32),
    /// Hit a value outside the image of f.
    StartsInB,
    /// Ran into a cycle without ever reaching `A_0`.
    Infinite,
}

/// Follows `t → f⁻¹(t) = (x, 0) → x → …` until the chain reaches `A_0`,
/// leaves the image of f, or repeats.
pub fn ancestry(t: &UnitRational) -> Ancestry {
    let mut cur = t.clone();
    let mut seen = HashSet::new();
    let mut steps = 0;
    loop {
        if cur.is_one() {
            // 1 = f(1, 1) and (1, 1) ∈ A_0
            return Ancestry::StartsInA0(steps);
        }
        if !seen.insert(cur.clone()) {
            return Ancestry::Infinite;
        }
        let e = cantor_square::digits::expand(&cur).unwrap();
        let w = Window {
            digits: e.digits().clone(),
        };
        let (xs, x_ev9, x_all9) = w.substream(1);
        let (ys, y_ev9, y_all9) = w.substream(2);
        if (x_ev9 && !x_all9) || (y_ev9 && !y_all9) {
            return Ancestry::StartsInB;
        }
        let y_zero = !y_all9 && ys.value().is_zero();
        if !y_zero {
            return Ancestry::StartsInA0(steps);
        }
        cur = if x_all9 { UnitRational::one() } else { xs.value() };
        steps += 1;
    }
}

pub fn ancestry_level(t: &UnitRational) -> Option<u32> {
    match ancestry(t) {
        Ancestry::StartsInA0(n) => Some(n),
        _ => None,
    }
}

pub fn random_rational(rng: &mut StdRng, max_den: u64) -> UnitRational {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(0..=d);
    UnitRational::from_u64(n, d).unwrap()
}

pub fn value(r: &UnitRational) -> UnitValue {
    UnitValue::from_rational(r).unwrap()
}

/// Mostly interior points, with a share of edge points so every branch of
/// f* gets traffic.
pub fn random_point(rng: &mut StdRng, max_den: u64) -> (UnitRational, UnitRational) {
    let x = random_rational(rng, max_den);
    let y = match rng.gen_range(0..10) {
        0 => UnitRational::zero(),
        1 => UnitRational::one(),
        _ => random_rational(rng, max_den),
    };
    (x, y)
}

pub fn point(x: &UnitRational, y: &UnitRational) -> SquarePoint {
    SquarePoint::new(value(x), value(y))
}

/// Values built by pushing random x through `x ↦ f(x, 0)` a few times, so
/// deep chain levels appear in samples.
pub fn random_chain_value(rng: &mut StdRng, max_den: u64) -> UnitValue {
    let mut v = value(&random_rational(rng, max_den));
    for _ in 0..rng.gen_range(0..4) {
        v = cantor_square::interleave_f(&SquarePoint::new(v, UnitValue::zero()));
    }
    v
}

/// Random eventually periodic digit stream that does not end in 9s.
pub fn random_filler(rng: &mut StdRng) -> PeriodicDigits {
    loop {
        let pre: Vec<u8> = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..10)).collect();
        let per: Vec<u8> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..10)).collect();
        let s = PeriodicDigits::new(pre, per).unwrap();
        if !s.is_eventually_nines() {
            return s;
        }
    }
}

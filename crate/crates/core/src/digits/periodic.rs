use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// An eventually periodic digit sequence `d_1 d_2 …`, held in normal form:
/// minimal period first, then minimal preperiod.
///
/// Unlike [`DigitExpansion`](super::DigitExpansion) this may end in
/// repeating 9s; substreams pulled out of a proper expansion can.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicDigits {
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl PeriodicDigits {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if let Some(&d) = preperiod.iter().chain(&period).find(|&&d| d > 9) {
            return Err(Error::InvalidDigit(d));
        }
        Ok(Self::normalized(preperiod, period))
    }

    pub fn zero() -> Self {
        PeriodicDigits {
            preperiod: Vec::new(),
            period: vec![0],
        }
    }

    pub fn nines() -> Self {
        PeriodicDigits {
            preperiod: Vec::new(),
            period: vec![9],
        }
    }

    fn normalized(mut preperiod: Vec<u8>, period: Vec<u8>) -> Self {
        let p = period.len();
        let minimal = (1..=p)
            .filter(|d| p.is_multiple_of(*d))
            .find(|&d| (d..p).all(|i| period[i] == period[i - d]))
            .unwrap_or(p);
        let mut period = period[..minimal].to_vec();

        while !preperiod.is_empty() && preperiod.last() == period.last() {
            preperiod.pop();
            period.rotate_right(1);
        }
        PeriodicDigits { preperiod, period }
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    /// The digit at 1-based position `k`.
    pub fn digit(&self, k: usize) -> u8 {
        assert!(k >= 1, "digit positions start at 1");
        let m = self.preperiod.len();
        if k <= m {
            self.preperiod[k - 1]
        } else {
            self.period[(k - 1 - m) % self.period.len()]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.preperiod.is_empty() && self.period == [0]
    }

    pub fn is_all_nines(&self) -> bool {
        self.preperiod.is_empty() && self.period == [9]
    }

    pub fn is_eventually_nines(&self) -> bool {
        self.period == [9]
    }

    /// First position `>= from` holding a nonzero digit.
    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        let from = from.max(1);
        let m = self.preperiod.len();
        if from <= m {
            if let Some(i) = self.preperiod[from - 1..].iter().position(|&d| d != 0) {
                return Some(from + i);
            }
        }
        // one full turn of the period starting at `start` sees every period digit
        let start = from.max(m + 1);
        (start..start + self.period.len()).find(|&k| self.digit(k) != 0)
    }

    /// The subsequence `d_start, d_{start+step}, d_{start+2·step}, …`.
    pub fn subsequence(&self, start: usize, step: usize) -> Self {
        assert!(start >= 1 && step >= 1);
        let m = self.preperiod.len();
        let head = if start > m { 0 } else { (m - start) / step + 1 };
        let cycle = self.period.len() / self.period.len().gcd(&step);
        let digits: Vec<u8> = (0..head + cycle)
            .map(|i| self.digit(start + i * step))
            .collect();
        let (pre, per) = digits.split_at(head);
        Self::normalized(pre.to_vec(), per.to_vec())
    }

    /// Explicit interleaving: `odd` fills positions 1, 3, 5, … and `even`
    /// fills 2, 4, 6, …. Fails if the joint period would exceed `max_period`.
    pub fn interleave(odd: &Self, even: &Self, max_period: usize) -> Result<Self> {
        let head = odd.preperiod.len().max(even.preperiod.len());
        let cycle = odd.period.len().lcm(&even.period.len());
        let needed = cycle.saturating_mul(2);
        if needed > max_period {
            return Err(Error::PeriodLimit {
                needed,
                limit: max_period,
            });
        }
        let mut digits = Vec::with_capacity(2 * (head + cycle));
        for k in 1..=head + cycle {
            digits.push(odd.digit(k));
            digits.push(even.digit(k));
        }
        let (pre, per) = digits.split_at(2 * head);
        Ok(Self::normalized(pre.to_vec(), per.to_vec()))
    }

    /// `(numerator, denominator)` of `Σ d_k / 10^k`, not reduced.
    pub fn value_parts(&self) -> (BigUint, BigUint) {
        self.value_parts_spread(0)
    }

    /// `Σ d_k / B^k` with `B = 10^(2^spread)`, as an unreduced fraction.
    pub(crate) fn value_parts_spread(&self, spread: u32) -> (BigUint, BigUint) {
        let gap = (1usize << spread) - 1;
        let m = self.preperiod.len();
        let p = self.period.len();
        let head = spread_integer(&self.preperiod, gap);
        let cycle = spread_integer(&self.period, gap);
        let block = pow10(p << spread) - BigUint::one();
        let numer = head * &block + cycle;
        let denom = pow10(m << spread) * block;
        (numer, denom)
    }

    /// Exact value; the all-9s stream evaluates to 1.
    pub fn value(&self) -> UnitRational {
        if let Some(r) = self.small_denominator_value() {
            return r;
        }
        let (n, d) = self.value_parts();
        UnitRational::new(n, d).expect("digit streams evaluate into [0,1]")
    }

    /// Reads a candidate fraction off the continued fraction of a short
    /// prefix and keeps it only if long division reproduces these digits.
    fn small_denominator_value(&self) -> Option<UnitRational> {
        const PREFIX: usize = 40;
        if self.is_eventually_nines() {
            return None;
        }
        let scale = pow10(PREFIX);
        let low = spread_integer(&(1..=PREFIX).map(|k| self.digit(k)).collect::<Vec<_>>(), 0);
        let high = &low + 1u32;
        let (mut h0, mut h1) = (BigUint::zero(), BigUint::one());
        let (mut k0, mut k1) = (BigUint::one(), BigUint::zero());
        let (mut num, mut den) = (low.clone(), scale.clone());
        while !den.is_zero() {
            let (a, rem) = num.div_rem(&den);
            (h0, h1) = (h1.clone(), a.clone() * &h1 + &h0);
            (k0, k1) = (k1.clone(), a * &k1 + &k0);
            (num, den) = (den, rem);
            if k1.bits() > 63 {
                return None;
            }
            let above = &h1 * &scale >= &low * &k1;
            let below = &h1 * &scale <= &high * &k1;
            if above && below {
                break;
            }
        }
        let candidate = UnitRational::new(h1, k1).ok()?;
        let (pre, per) =
            super::long_division(candidate.numer(), candidate.denom(), self.period.len() + 1).ok()?;
        (pre == self.preperiod && per == self.period).then_some(candidate)
    }
}

fn pow10(exp: usize) -> BigUint {
    BigUint::from(10u32).pow(u32::try_from(exp).expect("exponent fits in u32"))
}

/// The integer whose decimal digits are `digits` with `gap` zeros after each
/// digit but the last.
fn spread_integer(digits: &[u8], gap: usize) -> BigUint {
    if digits.is_empty() {
        return BigUint::zero();
    }
    // leaves of up to 19 decimal places fit in a u64; pairs of neighbours are
    // then merged level by level, aligned from the least significant end so
    // every level shares one multiplier
    let width = gap + 1;
    let per_leaf = (19 / width).max(1);
    let leaf_scale = if width <= 19 { 10u64.pow(width as u32) } else { 0 };
    let first = digits.len() % per_leaf;
    let mut level: Vec<BigUint> = std::iter::once(&digits[..first])
        .filter(|c| !c.is_empty())
        .chain(digits[first..].chunks(per_leaf))
        .map(|chunk| {
            let v = chunk.iter().fold(0u64, |acc, &d| acc * leaf_scale + u64::from(d));
            BigUint::from(v)
        })
        .collect();
    let mut shift = pow10(per_leaf * width);
    while level.len() > 1 {
        let odd = level.len() % 2;
        let mut next = Vec::with_capacity(level.len() / 2 + odd);
        let mut items = level.into_iter();
        if odd == 1 {
            next.extend(items.next());
        }
        while let (Some(hi), Some(lo)) = (items.next(), items.next()) {
            next.push(hi * &shift + lo);
        }
        level = next;
        if level.len() > 1 {
            shift = &shift * &shift;
        }
    }
    level.pop().expect("at least one leaf")
}

/// Prints the digits after the decimal point, e.g. `05(3)`, or `(0)` for zero.
impl fmt::Display for PeriodicDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.preperiod {
            write!(f, "{d}")?;
        }
        f.write_str("(")?;
        for d in &self.period {
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Parses a bare digit stream such as `05(3)`, `7` or `(90)`.
/// Digits without a parenthesised block are followed by zeros.
pub fn parse_digit_stream(text: &str) -> Result<PeriodicDigits> {
    let s = text.trim();
    let s = s.strip_prefix("0.").unwrap_or(s);
    let bad = |reason| Error::Syntax {
        input: text.to_owned(),
        reason,
    };
    let (pre, rep) = match s.split_once('(') {
        Some((pre, rest)) => (
            pre,
            rest.strip_suffix(')')
                .ok_or_else(|| bad("unterminated repetend"))?,
        ),
        None => (s, "0"),
    };
    if pre.is_empty() && rep.is_empty() {
        return Err(bad("empty digit stream"));
    }
    if rep.is_empty() {
        return Err(bad("empty repetend"));
    }
    let digits = |part: &str| -> Result<Vec<u8>> {
        if part.bytes().all(|b| b.is_ascii_digit()) {
            Ok(part.bytes().map(|b| b - b'0').collect())
        } else {
            Err(bad("expected decimal digits"))
        }
    };
    PeriodicDigits::new(digits(pre)?, digits(rep)?)
}

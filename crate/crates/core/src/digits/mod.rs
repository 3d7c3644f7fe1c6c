//! Proper decimal expansions of values in `[0,1)` and the digit queries the
//! classifiers are built on.

mod periodic;
mod stream;
mod value;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use periodic::{parse_digit_stream, PeriodicDigits};
pub use stream::DigitStream;
pub use value::{ProperValue, UnitValue};

use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// Default cap on the length of any period the library writes out.
pub const DEFAULT_MAX_PERIOD: usize = 1_000_000;

/// The proper (never eventually all 9s) expansion of a value in `[0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitExpansion(PeriodicDigits);

impl DigitExpansion {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        Self::from_periodic(PeriodicDigits::new(preperiod, period)?)
    }

    pub fn from_periodic(digits: PeriodicDigits) -> Result<Self> {
        if digits.is_eventually_nines() {
            return Err(Error::ImproperStream);
        }
        Ok(DigitExpansion(digits))
    }

    pub fn preperiod(&self) -> &[u8] {
        self.0.preperiod()
    }

    pub fn period(&self) -> &[u8] {
        self.0.period()
    }

    pub fn digits(&self) -> &PeriodicDigits {
        &self.0
    }

    pub fn into_digits(self) -> PeriodicDigits {
        self.0
    }

    pub fn digit(&self, k: usize) -> u8 {
        self.0.digit(k)
    }

    pub fn collapse(&self) -> UnitRational {
        self.0.value()
    }
}

/// Repeating-decimal notation: `0.d…d(r…r)`, with the block omitted for
/// terminating values and `0` for zero.
impl fmt::Display for DigitExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terminating = self.period() == [0];
        if terminating && self.preperiod().is_empty() {
            return f.write_str("0");
        }
        f.write_str("0.")?;
        for d in self.preperiod() {
            write!(f, "{d}")?;
        }
        if !terminating {
            f.write_str("(")?;
            for d in self.period() {
                write!(f, "{d}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Long division of `r`, refusing periods longer than `DEFAULT_MAX_PERIOD`.
pub fn expand(r: &UnitRational) -> Result<DigitExpansion> {
    expand_with_limit(r, DEFAULT_MAX_PERIOD)
}

pub fn expand_with_limit(r: &UnitRational, max_period: usize) -> Result<DigitExpansion> {
    if r.is_one() {
        return Err(Error::NoExpansionForOne);
    }
    let (preperiod, period) = long_division(r.numer(), r.denom(), max_period)?;
    DigitExpansion::new(preperiod, period)
}

pub(crate) fn expand_unbounded(r: &UnitRational) -> DigitExpansion {
    expand_with_limit(r, usize::MAX).expect("values below 1 always expand")
}

pub fn collapse(e: &DigitExpansion) -> UnitRational {
    e.collapse()
}

// With den = 2^a·5^b·q and gcd(q, 10) = 1, the remainders are purely
// periodic from step max(a, b) on, so the period closes as soon as the
// remainder returns to the one seen at that step.
fn long_division(
    numer: &BigUint,
    denom: &BigUint,
    max_period: usize,
) -> Result<(Vec<u8>, Vec<u8>)> {
    let twos = denom.trailing_zeros().unwrap_or(0) as usize;
    let mut fives = 0;
    let mut rest = denom.clone();
    let five = BigUint::from(5u32);
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    let head = twos.max(fives);

    if let (Some(n), Some(d)) = (numer.to_u64(), denom.to_u64()) {
        if d < u64::MAX / 10 {
            return divide_small(n, d, head, max_period);
        }
    }

    let ten = BigUint::from(10u32);
    let mut rem = numer.clone();
    let next = |rem: &mut BigUint| -> u8 {
        *rem *= &ten;
        let digit = (&*rem / denom).to_u8().expect("quotient digit");
        *rem %= denom;
        digit
    };
    let preperiod: Vec<u8> = (0..head).map(|_| next(&mut rem)).collect();
    let start = rem.clone();
    let mut period = Vec::new();
    loop {
        period.push(next(&mut rem));
        if rem == start {
            break;
        }
        if period.len() >= max_period {
            return Err(Error::PeriodLimit {
                needed: period.len() + 1,
                limit: max_period,
            });
        }
    }
    Ok((preperiod, period))
}

fn divide_small(numer: u64, denom: u64, head: usize, max_period: usize) -> Result<(Vec<u8>, Vec<u8>)> {
    let mut rem = numer;
    let next = |rem: &mut u64| -> u8 {
        *rem *= 10;
        let digit = (*rem / denom) as u8;
        *rem %= denom;
        digit
    };
    let preperiod: Vec<u8> = (0..head).map(|_| next(&mut rem)).collect();
    let start = rem;
    let mut period = Vec::new();
    loop {
        period.push(next(&mut rem));
        if rem == start {
            break;
        }
        if period.len() >= max_period {
            return Err(Error::PeriodLimit {
                needed: period.len() + 1,
                limit: max_period,
            });
        }
    }
    Ok((preperiod, period))
}

/// The `k`-th digit (1-based) of a value below 1.
pub fn digit_at(v: &UnitValue, k: usize) -> Result<u8> {
    v.digit_at(k)
}

/// Where the nonzero digits of a value sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonzeroSummary {
    pub is_zero: bool,
    pub first_nonzero: Option<usize>,
    pub first_nonzero_after_1: Option<usize>,
    pub even_position_nonzero_exists: bool,
}

impl NonzeroSummary {
    pub fn of_stream(s: &DigitStream) -> Self {
        NonzeroSummary {
            is_zero: s.is_zero(),
            first_nonzero: s.first_nonzero_from(1),
            first_nonzero_after_1: s.first_nonzero_from(2),
            even_position_nonzero_exists: !s.even().is_zero(),
        }
    }
}

pub fn nonzero_positions_summary(v: &UnitValue) -> Result<NonzeroSummary> {
    match v {
        UnitValue::One => Err(Error::NoExpansionForOne),
        UnitValue::Proper(p) => Ok(NonzeroSummary::of_stream(p.stream())),
    }
}

//! Exact rationals in `[0,1]` and their two textual notations.
//!
//! Fraction notation is `p/q` (plus the bare integers `0` and `1`).
//! Repeating-decimal notation is `0.d…d(r…r)`, where the parenthesised
//! block repeats forever; the block is optional for terminating values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::digits::{expand_unbounded, PeriodicDigits};
use crate::error::{Error, Result};

/// A rational number in `[0,1]`, always stored in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitRational {
    numer: BigUint,
    denom: BigUint,
}

impl UnitRational {
    pub fn new(numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numer > denom {
            return Err(Error::OutOfRange(format!("{numer}/{denom}")));
        }
        let g = numer.gcd(&denom);
        Ok(UnitRational {
            numer: numer / &g,
            denom: denom / &g,
        })
    }

    pub fn from_u64(numer: u64, denom: u64) -> Result<Self> {
        Self::new(BigUint::from(numer), BigUint::from(denom))
    }

    pub fn zero() -> Self {
        UnitRational {
            numer: BigUint::zero(),
            denom: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        UnitRational {
            numer: BigUint::one(),
            denom: BigUint::one(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    /// Fraction notation: `p/q`, or `0` / `1` for the endpoints.
    pub fn to_fraction_string(&self) -> String {
        if self.denom.is_one() {
            self.numer.to_string()
        } else {
            format!("{}/{}", self.numer, self.denom)
        }
    }

    /// Repeating-decimal notation, always the proper expansion.
    pub fn to_decimal_string(&self) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        expand_unbounded(self).to_string()
    }
}

impl Ord for UnitRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for UnitRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fraction_string())
    }
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_unit_rational(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    Fraction,
    RepeatingDecimal,
}

pub fn format_unit_rational(r: &UnitRational, notation: Notation) -> String {
    match notation {
        Notation::Fraction => r.to_fraction_string(),
        Notation::RepeatingDecimal => r.to_decimal_string(),
    }
}

pub fn compare(a: &UnitRational, b: &UnitRational) -> Ordering {
    a.cmp(b)
}

fn syntax(input: &str, reason: &'static str) -> Error {
    Error::Syntax {
        input: input.to_owned(),
        reason,
    }
}

fn parse_digits(input: &str, digits: &str) -> Result<Vec<u8>> {
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(input, "expected decimal digits"));
    }
    Ok(digits.bytes().map(|b| b - b'0').collect())
}

fn parse_natural(input: &str, digits: &str) -> Result<BigUint> {
    if digits.is_empty() {
        return Err(syntax(input, "missing integer"));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(input, "expected decimal digits"));
    }
    Ok(BigUint::parse_bytes(digits.as_bytes(), 10).expect("validated digits"))
}

/// Parses either fraction notation or repeating-decimal notation.
pub fn parse_unit_rational(text: &str) -> Result<UnitRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(syntax(text, "empty input"));
    }

    if let Some((p, q)) = s.split_once('/') {
        let numer = parse_natural(text, p.trim())?;
        let denom = parse_natural(text, q.trim())?;
        return UnitRational::new(numer, denom);
    }

    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (s, None),
    };
    let integer = parse_natural(text, int_part)?;

    let Some(frac) = frac_part else {
        return UnitRational::new(integer, BigUint::one());
    };

    let (pre, rep) = match frac.split_once('(') {
        Some((pre, rest)) => {
            let rep = rest
                .strip_suffix(')')
                .ok_or_else(|| syntax(text, "unterminated repetend"))?;
            if rep.is_empty() {
                return Err(syntax(text, "empty repetend"));
            }
            (pre, Some(rep))
        }
        None => {
            if frac.is_empty() {
                return Err(syntax(text, "no digits after the decimal point"));
            }
            (frac, None)
        }
    };

    let preperiod = parse_digits(text, pre)?;
    let period = match rep {
        Some(r) => {
            let digits = parse_digits(text, r)?;
            if digits.iter().all(|&d| d == 9) {
                return Err(Error::NinesRepetend(text.to_owned()));
            }
            digits
        }
        None => vec![0],
    };

    let (numer, denom) = PeriodicDigits::new(preperiod, period)?.value_parts();
    let numer = integer * &denom + numer;
    if numer > denom {
        return Err(Error::OutOfRange(text.to_owned()));
    }
    UnitRational::new(numer, denom)
}

use std::sync::Arc;

use num_bigint::BigUint;

use super::periodic::PeriodicDigits;
use crate::error::Result;
use crate::rational::UnitRational;

/// An eventually periodic digit stream, kept in factored form.
///
/// Interleaving two explicit streams with periods `p` and `q` gives a
/// period of `2·lcm(p, q)`, which is far too large to write out for
/// ordinary inputs. `Interleaved` keeps the two halves instead, and every
/// query the bijection needs (digits, substreams, nonzero search, exact
/// value) is answered from the halves.
#[derive(Clone, Debug)]
pub enum DigitStream {
    Periodic(Arc<PeriodicDigits>),
    /// Odd positions come from the first stream, even positions from the second.
    Interleaved(Arc<DigitStream>, Arc<DigitStream>),
}

impl DigitStream {
    pub fn zero() -> Self {
        PeriodicDigits::zero().into()
    }

    pub fn nines() -> Self {
        PeriodicDigits::nines().into()
    }

    pub fn interleave(odd: DigitStream, even: DigitStream) -> Self {
        DigitStream::Interleaved(Arc::new(odd), Arc::new(even))
    }

    pub fn digit(&self, k: usize) -> u8 {
        assert!(k >= 1, "digit positions start at 1");
        match self {
            DigitStream::Periodic(p) => p.digit(k),
            DigitStream::Interleaved(a, b) => {
                if k % 2 == 1 {
                    a.digit(k.div_ceil(2))
                } else {
                    b.digit(k / 2)
                }
            }
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<u8> {
        (1..=len).map(|k| self.digit(k)).collect()
    }

    /// Digits at positions 1, 3, 5, ….
    pub fn odd(&self) -> DigitStream {
        match self {
            DigitStream::Periodic(p) => p.subsequence(1, 2).into(),
            DigitStream::Interleaved(a, _) => (**a).clone(),
        }
    }

    /// Digits at positions 2, 4, 6, ….
    pub fn even(&self) -> DigitStream {
        match self {
            DigitStream::Periodic(p) => p.subsequence(2, 2).into(),
            DigitStream::Interleaved(_, b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DigitStream::Periodic(p) => p.is_zero(),
            DigitStream::Interleaved(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_all_nines(&self) -> bool {
        match self {
            DigitStream::Periodic(p) => p.is_all_nines(),
            DigitStream::Interleaved(a, b) => a.is_all_nines() && b.is_all_nines(),
        }
    }

    pub fn is_eventually_nines(&self) -> bool {
        match self {
            DigitStream::Periodic(p) => p.is_eventually_nines(),
            DigitStream::Interleaved(a, b) => a.is_eventually_nines() && b.is_eventually_nines(),
        }
    }

    /// Not eventually all 9s.
    pub fn is_proper(&self) -> bool {
        !self.is_eventually_nines()
    }

    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        let from = from.max(1);
        match self {
            DigitStream::Periodic(p) => p.first_nonzero_from(from),
            DigitStream::Interleaved(a, b) => {
                let odd = a.first_nonzero_from((from + 1).div_ceil(2));
                let odd = odd.map(|k| 2 * k - 1);
                let even = b.first_nonzero_from(from.div_ceil(2)).map(|k| 2 * k);
                match (odd, even) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                }
            }
        }
    }

    /// Interleaving depth; 0 for an explicit stream.
    pub fn depth(&self) -> usize {
        match self {
            DigitStream::Periodic(_) => 0,
            DigitStream::Interleaved(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Writes the stream out explicitly, within `max_period` digits of period.
    pub fn to_periodic(&self, max_period: usize) -> Result<PeriodicDigits> {
        match self {
            DigitStream::Periodic(p) => Ok((**p).clone()),
            DigitStream::Interleaved(a, b) => PeriodicDigits::interleave(
                &a.to_periodic(max_period)?,
                &b.to_periodic(max_period)?,
                max_period,
            ),
        }
    }

    /// Exact value `Σ d_k / 10^k`; the all-9s stream evaluates to 1.
    pub fn value(&self) -> UnitRational {
        let (n, d) = self.value_parts(0);
        UnitRational::new(n, d).expect("digit streams evaluate into [0,1]")
    }

    // Σ d_k / B^k with B = 10^(2^spread). For interleaved streams
    // value_B = B · value_{B²}(odd) + value_{B²}(even).
    fn value_parts(&self, spread: u32) -> (BigUint, BigUint) {
        match self {
            DigitStream::Periodic(p) => p.value_parts_spread(spread),
            DigitStream::Interleaved(a, b) => {
                let (an, ad) = a.value_parts(spread + 1);
                let (bn, bd) = b.value_parts(spread + 1);
                let base = BigUint::from(10u32).pow(1u32 << spread);
                (an * base * &bd + bn * &ad, ad * bd)
            }
        }
    }

    /// Digit-for-digit equality, whatever the factoring of either side.
    pub fn same_digits(&self, other: &DigitStream) -> bool {
        match (self, other) {
            (DigitStream::Periodic(a), DigitStream::Periodic(b)) => a == b,
            _ => {
                self.odd().same_digits(&other.odd()) && self.even().same_digits(&other.even())
            }
        }
    }
}

impl From<PeriodicDigits> for DigitStream {
    fn from(p: PeriodicDigits) -> Self {
        DigitStream::Periodic(Arc::new(p))
    }
}

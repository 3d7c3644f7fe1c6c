use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::{expand_with_limit, DigitExpansion, DigitStream, DEFAULT_MAX_PERIOD};
use crate::error::{Error, Result};
use crate::rational::UnitRational;

// Equal streams share this prefix; `Hash` only needs that direction.
const HASH_PREFIX: usize = 24;

/// A point of `[0,1]`: either a value below 1 with its proper expansion,
/// or the endpoint 1, which has no proper expansion and is encoded as the
/// all-9s stream only inside the interleaving map.
#[derive(Clone, Debug)]
pub enum UnitValue {
    Proper(ProperValue),
    One,
}

/// A value in `[0,1)`. The exact rational is computed on first use and
/// cached; outputs of the bijection are born as digit streams.
#[derive(Clone)]
pub struct ProperValue(Arc<Inner>);

struct Inner {
    stream: DigitStream,
    value: OnceLock<UnitRational>,
}

impl ProperValue {
    pub fn stream(&self) -> &DigitStream {
        &self.0.stream
    }

    pub fn value(&self) -> &UnitRational {
        self.0.value.get_or_init(|| self.0.stream.value())
    }
}

impl fmt::Debug for ProperValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.value.get() {
            Some(v) => write!(f, "ProperValue({v})"),
            None => write!(f, "ProperValue(depth {} stream)", self.0.stream.depth()),
        }
    }
}

impl UnitValue {
    pub fn zero() -> Self {
        UnitValue::from_expansion(DigitExpansion(super::PeriodicDigits::zero()))
    }

    pub fn from_rational(r: &UnitRational) -> Result<Self> {
        Self::from_rational_with_limit(r, DEFAULT_MAX_PERIOD)
    }

    pub fn from_rational_with_limit(r: &UnitRational, max_period: usize) -> Result<Self> {
        if r.is_one() {
            return Ok(UnitValue::One);
        }
        let e = expand_with_limit(r, max_period)?;
        Ok(UnitValue::Proper(ProperValue(Arc::new(Inner {
            stream: e.into_digits().into(),
            value: OnceLock::from(r.clone()),
        }))))
    }

    pub fn from_expansion(e: DigitExpansion) -> Self {
        Self::from_proper_stream(e.into_digits().into())
    }

    /// Wraps a stream that must not be eventually all 9s.
    pub fn from_stream(stream: DigitStream) -> Result<Self> {
        if stream.is_eventually_nines() {
            return Err(Error::ImproperStream);
        }
        Ok(Self::from_proper_stream(stream))
    }

    pub(crate) fn from_proper_stream(stream: DigitStream) -> Self {
        debug_assert!(stream.is_proper());
        UnitValue::Proper(ProperValue(Arc::new(Inner {
            stream,
            value: OnceLock::new(),
        })))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_rational(&text.parse()?)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, UnitValue::One)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            UnitValue::One => false,
            UnitValue::Proper(p) => p.stream().is_zero(),
        }
    }

    pub fn stream(&self) -> Option<&DigitStream> {
        match self {
            UnitValue::One => None,
            UnitValue::Proper(p) => Some(p.stream()),
        }
    }

    pub fn to_rational(&self) -> UnitRational {
        match self {
            UnitValue::One => UnitRational::one(),
            UnitValue::Proper(p) => p.value().clone(),
        }
    }

    pub fn digit_at(&self, k: usize) -> Result<u8> {
        if k == 0 {
            return Err(Error::ZeroPosition);
        }
        match self {
            UnitValue::One => Err(Error::NoExpansionForOne),
            UnitValue::Proper(p) => Ok(p.stream().digit(k)),
        }
    }

    /// The explicit proper expansion, if its period fits in `max_period`.
    pub fn expansion(&self, max_period: usize) -> Result<DigitExpansion> {
        match self {
            UnitValue::One => Err(Error::NoExpansionForOne),
            UnitValue::Proper(p) => DigitExpansion::from_periodic(p.stream().to_periodic(max_period)?),
        }
    }

    pub fn to_fraction_string(&self) -> String {
        self.to_rational().to_fraction_string()
    }

    pub fn to_decimal_string(&self, max_period: usize) -> Result<String> {
        match self {
            UnitValue::One => Ok("1".to_owned()),
            UnitValue::Proper(_) => Ok(self.expansion(max_period)?.to_string()),
        }
    }
}

/// Exact equality: digit streams are compared digit for digit, which for
/// proper expansions is the same as comparing values.
impl PartialEq for UnitValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (UnitValue::One, UnitValue::One) => true,
            (UnitValue::Proper(a), UnitValue::Proper(b)) => {
                if Arc::ptr_eq(&a.0, &b.0) {
                    return true;
                }
                if let (Some(x), Some(y)) = (a.0.value.get(), b.0.value.get()) {
                    return x == y;
                }
                a.stream().same_digits(b.stream())
            }
            _ => false,
        }
    }
}

impl Eq for UnitValue {}

impl Hash for UnitValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            UnitValue::One => state.write_u8(1),
            UnitValue::Proper(p) => {
                state.write_u8(0);
                state.write(&p.stream().prefix(HASH_PREFIX));
            }
        }
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fraction_string())
    }
}

impl From<DigitExpansion> for UnitValue {
    fn from(e: DigitExpansion) -> Self {
        UnitValue::from_expansion(e)
    }
}

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed value {input:?}: {reason}")]
    Syntax { input: String, reason: &'static str },

    #[error("value {0} lies outside [0,1]")]
    OutOfRange(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("repetend of all 9s in {0:?} denotes an improper expansion; write the terminating form instead")]
    NinesRepetend(String),

    #[error("1 has no proper expansion in [0,1)")]
    NoExpansionForOne,

    #[error("{0} is not a decimal digit")]
    InvalidDigit(u8),

    #[error("a periodic digit stream needs a non-empty period")]
    EmptyPeriod,

    #[error("digit stream is eventually all 9s")]
    ImproperStream,

    #[error("period of length {needed} exceeds the limit of {limit}")]
    PeriodLimit { needed: usize, limit: usize },

    #[error("the interleaving map is only defined on [0,1)^2; use the extension f for coordinates equal to 1")]
    CoordinateIsOne,

    #[error("digit positions start at 1")]
    ZeroPosition,

    #[error("chain level must be at least 1, got {0}")]
    InvalidLevel(u32),

    #[error("value is not in the image of f: its {0} substream is eventually 9 but not all 9")]
    OutsideImage(&'static str),

    #[error("prefix has {actual} digits but length {expected} was requested")]
    PrefixLength { expected: usize, actual: usize },

    #[error("index {index} maps to {value}, outside a codomain of size {size}")]
    OutOfCodomain {
        index: usize,
        value: usize,
        size: usize,
    },

    #[error("not injective: indices {first} and {duplicate} both map to {value}")]
    NotInjective {
        first: usize,
        duplicate: usize,
        value: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

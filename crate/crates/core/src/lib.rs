//! An exact bijection between the unit square `[0,1]²` and the unit
//! segment `[0,1]`.
//!
//! Interleaving the decimal digits of `x` and `y` gives an injection of the
//! square into the segment that misses many points. Pairing it with the
//! injection `t ↦ (t, 0)` and splitting the square along the
//! Schröder–Bernstein chains yields a bijection `f*` that agrees with digit
//! interleaving everywhere off the bottom edge. All arithmetic is exact:
//! values are rationals, and every set in the construction has a decision
//! procedure.
//!
//! ```
//! use cantor_square::{forward_bijection, inverse_bijection, SquarePoint, UnitValue};
//!
//! let p = SquarePoint::new(UnitValue::parse("1").unwrap(), UnitValue::parse("0").unwrap());
//! let t = forward_bijection(&p);
//! assert_eq!(t.to_fraction_string(), "10/11");
//! assert_eq!(inverse_bijection(&t), p);
//! ```

pub mod cantor_map;
pub mod digits;
mod error;
pub mod rational;
pub mod sb_finite;

pub use cantor_map::{
    deinterleave, forward_bijection, forward_traced, in_union_b, interleave_f, inverse_bijection,
    inverse_traced, Branch, ChainWitness, SquarePoint,
};
pub use digits::{DigitExpansion, DigitStream, PeriodicDigits, UnitValue, DEFAULT_MAX_PERIOD};
pub use error::{Error, Result};
pub use rational::{parse_unit_rational, UnitRational};

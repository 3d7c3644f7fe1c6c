//! Digit interleaving on the unit square and the bijection `f*` built from it.
//!
//! `f` extends the interleaving map `C` to `[0,1]²` by writing a coordinate
//! equal to 1 as the all-9s stream. `g(t) = (t, 0)` goes the other way.
//! Both are injective, and `f*` uses `f` on the chain union `⋃ A_n` and
//! `g⁻¹` (the first coordinate) everywhere else.

mod chain;
mod dedekind;

use std::fmt;

use serde::Serialize;

pub use chain::{
    candidate_levels, classify_chain, classify_s, in_b0, in_bn, in_union_b, CandidateVerdict,
    ChainReport, ChainWitness, Evidence, ExclusionReason, NotInSReason, SClassification,
};
pub use dedekind::dedekind_family;

use crate::digits::{DigitStream, UnitValue};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarePoint {
    pub x: UnitValue,
    pub y: UnitValue,
}

impl SquarePoint {
    pub fn new(x: UnitValue, y: UnitValue) -> Self {
        SquarePoint { x, y }
    }
}

impl fmt::Display for SquarePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn coordinate_stream(v: &UnitValue) -> DigitStream {
    match v {
        UnitValue::One => DigitStream::nines(),
        UnitValue::Proper(p) => p.stream().clone(),
    }
}

fn decode_coordinate(s: DigitStream) -> Option<UnitValue> {
    if s.is_all_nines() {
        Some(UnitValue::One)
    } else if s.is_proper() {
        Some(UnitValue::from_proper_stream(s))
    } else {
        None
    }
}

/// `C(x, y) = 0.x₁y₁x₂y₂…` on `[0,1)²`.
pub fn cantor_c(x: &UnitValue, y: &UnitValue) -> Result<UnitValue> {
    if x.is_one() || y.is_one() {
        return Err(Error::CoordinateIsOne);
    }
    Ok(interleave_f(&SquarePoint::new(x.clone(), y.clone())))
}

/// The extension `f` of `C` to the closed square.
pub fn interleave_f(p: &SquarePoint) -> UnitValue {
    if p.x.is_one() && p.y.is_one() {
        return UnitValue::One;
    }
    // at most one side is all 9s, so the interleaved stream is proper
    UnitValue::from_proper_stream(DigitStream::interleave(
        coordinate_stream(&p.x),
        coordinate_stream(&p.y),
    ))
}

/// Inverse of `f` on its image.
///
/// Fails when a substream of `t` ends in 9s without being all 9s; such a
/// `t` (for instance Dedekind's `0.z₁…z_l 9 z 9 z …` with `l ≥ 2`) has no
/// preimage under `f`.
pub fn deinterleave(t: &UnitValue) -> Result<SquarePoint> {
    let s = match t {
        UnitValue::One => return Ok(SquarePoint::new(UnitValue::One, UnitValue::One)),
        UnitValue::Proper(p) => p.stream(),
    };
    let x = decode_coordinate(s.odd()).ok_or(Error::OutsideImage("odd"))?;
    let y = decode_coordinate(s.even()).ok_or(Error::OutsideImage("even"))?;
    Ok(SquarePoint::new(x, y))
}

/// Whether some `(x, y) ∈ [0,1)²` has `C(x, y) = t`.
pub fn has_c_preimage(t: &UnitValue) -> Result<bool> {
    match t {
        UnitValue::One => Err(Error::CoordinateIsOne),
        UnitValue::Proper(p) => Ok(p.stream().odd().is_proper() && p.stream().even().is_proper()),
    }
}

/// Which piece of the square a point falls in under `f*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Branch {
    /// `y > 0`.
    A0,
    /// `y = 0` and `x ∈ B_n`, so the point lies in `A_{n+1}`.
    Chain { x_level: u32 },
    /// Off the chain union; `f*` returns `x`.
    Complement,
}

impl Branch {
    pub fn from_witness(w: &ChainWitness) -> Self {
        match w.level() {
            Some(0) => Branch::A0,
            Some(n) => Branch::Chain { x_level: n - 1 },
            None => Branch::Complement,
        }
    }

    /// Index `n` of the set `A_n` holding the point, if any.
    pub fn a_level(&self) -> Option<u32> {
        match *self {
            Branch::A0 => Some(0),
            Branch::Chain { x_level } => Some(x_level + 1),
            Branch::Complement => None,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Branch::A0 => f.write_str("A₀"),
            Branch::Chain { x_level } => write!(
                f,
                "A{} (x ∈ B{})",
                subscript(x_level + 1),
                subscript(x_level)
            ),
            Branch::Complement => f.write_str("complement"),
        }
    }
}

pub fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[usize::from(b - b'0')])
        .collect()
}

/// `f*` together with the branch that produced it.
pub fn forward_traced(p: &SquarePoint) -> (UnitValue, Branch) {
    if !p.y.is_zero() {
        return (interleave_f(p), Branch::A0);
    }
    match in_union_b(&p.x).level() {
        Some(n) => (interleave_f(p), Branch::Chain { x_level: n }),
        None => (p.x.clone(), Branch::Complement),
    }
}

/// The bijection `f*: [0,1]² → [0,1]`.
pub fn forward_bijection(p: &SquarePoint) -> UnitValue {
    forward_traced(p).0
}

/// `(f*)⁻¹` together with the chain witness for `t`.
pub fn inverse_traced(t: &UnitValue) -> (SquarePoint, ChainWitness) {
    let witness = in_union_b(t);
    let p = if witness.is_in_union() {
        deinterleave(t).expect("every member of the chain union is an image of f")
    } else {
        SquarePoint::new(t.clone(), UnitValue::zero())
    };
    (p, witness)
}

pub fn inverse_bijection(t: &UnitValue) -> SquarePoint {
    inverse_traced(t).0
}

//! Membership in the chain sets `B_n = f(A_n)`.
//!
//! With `A = [0,1]²`, `B = [0,1]`, `g(t) = (t, 0)`:
//!
//! * `A_0 = [0,1] × (0,1]`, so `B_0 = f(A_0)` is 1 together with every
//!   `t < 1` whose odd and even substreams each decode to a coordinate
//!   (proper, or all 9s for the coordinate 1) and whose even substream is
//!   not zero.
//! * `A_{n+1} = B_n × {0}`, so `t ∈ B_n` for `n ≥ 1` exactly when the
//!   nonzero digits of `t` sit at positions `≡ 1 (mod 2^n)` and the digits
//!   at those positions form a sequence of `S`.
//!
//! `S` holds the all-9s sequence and the digit streams of `B_0 ∖ {1}`.
//! A value can only lie in `B_n` if `2^n` divides `j* − 1`, where `j*` is
//! its first nonzero digit after position 1, so the search is finite.

use serde::Serialize;

use crate::digits::{DigitStream, NonzeroSummary, UnitValue};
use crate::error::{Error, Result};

/// Why a digit sequence fails to lie in `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotInSReason {
    ProperButEvenAllZero,
    ImproperNonNines,
    /// Proper with a nonzero even entry, but its odd or even substream
    /// ends in 9s without being all 9s, so it has no preimage under f.
    SubstreamNotDecodable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "snake_case")]
pub enum SClassification {
    AllNines,
    ProperWithEvenNonzero,
    NotInS(NotInSReason),
}

impl SClassification {
    pub fn is_member(self) -> bool {
        !matches!(self, SClassification::NotInS(_))
    }
}

/// A coordinate stream decodes if it is proper or is the all-9s encoding of 1.
pub(crate) fn decodes(s: &DigitStream) -> bool {
    s.is_all_nines() || s.is_proper()
}

pub fn classify_s(s: &DigitStream) -> SClassification {
    if s.is_all_nines() {
        SClassification::AllNines
    } else if s.is_eventually_nines() {
        SClassification::NotInS(NotInSReason::ImproperNonNines)
    } else if s.even().is_zero() {
        SClassification::NotInS(NotInSReason::ProperButEvenAllZero)
    } else if !decodes(&s.odd()) || !decodes(&s.even()) {
        SClassification::NotInS(NotInSReason::SubstreamNotDecodable)
    } else {
        SClassification::ProperWithEvenNonzero
    }
}

pub fn in_b0(t: &UnitValue) -> bool {
    match t {
        UnitValue::One => true,
        UnitValue::Proper(p) => classify_s(p.stream()) == SClassification::ProperWithEvenNonzero,
    }
}

pub fn in_bn(t: &UnitValue, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidLevel(n));
    }
    Ok(match t {
        UnitValue::One => false,
        UnitValue::Proper(p) => level_sequence(p.stream(), n).is_some_and(|s| classify_s(&s).is_member()),
    })
}

/// `s_k = t_{2^n (k-1) + 1}`, provided every other digit of `t` is zero.
fn level_sequence(t: &DigitStream, n: u32) -> Option<DigitStream> {
    let mut cur = t.clone();
    for _ in 0..n {
        if !cur.even().is_zero() {
            return None;
        }
        cur = cur.odd();
    }
    Some(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// `t = 1`.
    One,
    /// A nonzero even-position digit places `t` in `f([0,1] × (0,1])`.
    EvenDigit { position: usize },
    /// The digits at positions `≡ 1 (mod 2^n)` form this member of `S`.
    Sequence { class: SClassification },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    Zero,
    /// Only the first digit is nonzero; no level can hold it.
    SupportIsFirstDigit,
    /// A nonzero even digit, but `t` is not an image of f.
    NotAnImage,
    /// Every candidate level failed the `S` test.
    NoLevelMatched,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainWitness {
    InB { level: u32, evidence: Evidence },
    NotInUnion { ruled_out_up_to: u32, reason: ExclusionReason },
}

impl ChainWitness {
    pub fn level(&self) -> Option<u32> {
        match *self {
            ChainWitness::InB { level, .. } => Some(level),
            ChainWitness::NotInUnion { .. } => None,
        }
    }

    pub fn is_in_union(&self) -> bool {
        self.level().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub level: u32,
    pub member: bool,
}

/// Everything the decision procedure looked at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub summary: Option<NonzeroSummary>,
    pub candidates: Vec<CandidateVerdict>,
    pub witness: ChainWitness,
}

/// Candidate levels: 0, plus every `n ≥ 1` with `2^n | j* − 1`.
pub fn candidate_levels(summary: &NonzeroSummary) -> Vec<u32> {
    let mut levels = vec![0];
    if let Some(j) = summary.first_nonzero_after_1 {
        let deepest = (j - 1).trailing_zeros();
        levels.extend(1..=deepest);
    }
    levels
}

pub fn classify_chain(t: &UnitValue) -> ChainReport {
    let stream = match t {
        UnitValue::One => {
            return ChainReport {
                summary: None,
                candidates: vec![CandidateVerdict {
                    level: 0,
                    member: true,
                }],
                witness: ChainWitness::InB {
                    level: 0,
                    evidence: Evidence::One,
                },
            };
        }
        UnitValue::Proper(p) => p.stream(),
    };

    let summary = NonzeroSummary::of_stream(stream);
    let candidates: Vec<CandidateVerdict> = candidate_levels(&summary)
        .into_iter()
        .map(|level| CandidateVerdict {
            level,
            member: if level == 0 {
                in_b0(t)
            } else {
                in_bn(t, level).expect("level is positive")
            },
        })
        .collect();

    let witness = match candidates.iter().find(|c| c.member) {
        Some(&CandidateVerdict { level: 0, .. }) => {
            let position = stream
                .even()
                .first_nonzero_from(1)
                .expect("members of B_0 below 1 have a nonzero even digit");
            ChainWitness::InB {
                level: 0,
                evidence: Evidence::EvenDigit {
                    position: 2 * position,
                },
            }
        }
        Some(&CandidateVerdict { level, .. }) => {
            let s = level_sequence(stream, level).expect("member levels satisfy the support condition");
            ChainWitness::InB {
                level,
                evidence: Evidence::Sequence {
                    class: classify_s(&s),
                },
            }
        }
        None => {
            let reason = if summary.is_zero {
                ExclusionReason::Zero
            } else if summary.even_position_nonzero_exists {
                ExclusionReason::NotAnImage
            } else if summary.first_nonzero_after_1.is_none() {
                ExclusionReason::SupportIsFirstDigit
            } else {
                ExclusionReason::NoLevelMatched
            };
            ChainWitness::NotInUnion {
                ruled_out_up_to: candidates.last().map_or(0, |c| c.level),
                reason,
            }
        }
    };

    ChainReport {
        summary: Some(summary),
        candidates,
        witness,
    }
}

/// Decides membership in `⋃ B_n`, naming the level when it holds.
pub fn in_union_b(t: &UnitValue) -> ChainWitness {
    classify_chain(t).witness
}

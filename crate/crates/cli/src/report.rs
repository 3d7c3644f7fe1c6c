use std::fmt::Write as _;

use cantor_square::cantor_map::{Evidence, ExclusionReason, SClassification};
use cantor_square::{ChainWitness, SquarePoint, UnitValue};
use serde::Serialize;
use serde_json::Value;

/// A value in both notations. `decimal` is `None` when the repeating block
/// is longer than the period cap.
#[derive(Clone, Debug, Serialize)]
pub struct ValueOut {
    pub fraction: String,
    pub decimal: Option<String>,
}

impl ValueOut {
    pub fn of(v: &UnitValue, max_period: usize) -> Self {
        ValueOut {
            fraction: v.to_fraction_string(),
            decimal: v.to_decimal_string(max_period).ok(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointOut {
    pub x: ValueOut,
    pub y: ValueOut,
}

impl PointOut {
    pub fn of(p: &SquarePoint, max_period: usize) -> Self {
        PointOut {
            x: ValueOut::of(&p.x, max_period),
            y: ValueOut::of(&p.y, max_period),
        }
    }
}

/// One invocation, as emitted in `--json` mode.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub op: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub witness: Option<ChainWitness>,
    pub branch: Option<String>,
}

/// A record plus the `key: value` lines shown to humans.
pub struct Report {
    pub record: Record,
    pub lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(op: &'static str, inputs: Value) -> Self {
        Report {
            record: Record {
                op,
                inputs,
                result: Value::Null,
                witness: None,
                branch: None,
            },
            lines: vec![("op".into(), op.into())],
        }
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.lines.push((key.into(), value.into()));
    }

    pub fn value_lines(&mut self, key: &str, v: &ValueOut) {
        self.line(key, v.fraction.clone());
        if let Some(d) = &v.decimal {
            self.line(format!("{key} (decimal)"), d.clone());
        }
    }

    pub fn witness(&mut self, w: ChainWitness) {
        self.line("witness", describe_witness(&w));
        self.record.witness = Some(w);
    }

    pub fn branch(&mut self, label: String) {
        self.line("branch", label.clone());
        self.record.branch = Some(label);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string(&self.record).expect("records serialize");
        }
        let mut out = String::new();
        for (k, v) in &self.lines {
            let _ = writeln!(out, "{k}: {v}");
        }
        out.pop();
        out
    }
}

pub fn describe_witness(w: &ChainWitness) -> String {
    match *w {
        ChainWitness::InB { level, evidence } => {
            let why = match evidence {
                Evidence::One => "t = 1".to_string(),
                Evidence::EvenDigit { position } => format!("nonzero digit at position {position}"),
                Evidence::Sequence { class } => {
                    let kind = match class {
                        SClassification::AllNines => "all 9s",
                        SClassification::ProperWithEvenNonzero => "proper with a nonzero even digit",
                        SClassification::NotInS(_) => "outside S",
                    };
                    format!("digits at positions 1 mod 2^{level} are {kind}")
                }
            };
            format!("IN_B({level}), {why}")
        }
        ChainWitness::NotInUnion {
            ruled_out_up_to,
            reason,
        } => {
            let why = match reason {
                ExclusionReason::Zero => "t = 0",
                ExclusionReason::SupportIsFirstDigit => "only the first digit is nonzero",
                ExclusionReason::NotAnImage => "not an image of digit interleaving",
                ExclusionReason::NoLevelMatched => "no candidate level matched",
            };
            format!("NOT_IN_UNION, {why} (levels 0..={ruled_out_up_to} ruled out)")
        }
    }
}

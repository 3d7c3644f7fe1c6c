use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use cantor_square::cantor_map::{
    classify_chain, dedekind_family, has_c_preimage, subscript, Branch,
};
use cantor_square::digits::parse_digit_stream;
use cantor_square::sb_finite::{build_bijection, build_chain, FiniteInjection};
use cantor_square::{
    forward_traced, in_union_b, inverse_traced, parse_unit_rational, SquarePoint, UnitValue,
};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{PointOut, Report, ValueOut};

pub fn parse_value(name: &str, text: &str, max_period: usize) -> Result<UnitValue> {
    let r = parse_unit_rational(text).with_context(|| format!("invalid value for {name}: {text:?}"))?;
    UnitValue::from_rational_with_limit(&r, max_period)
        .with_context(|| format!("invalid value for {name}: {text:?}"))
}

pub fn map(x: &str, y: &str, max_period: usize) -> Result<Report> {
    let p = SquarePoint::new(parse_value("x", x, max_period)?, parse_value("y", y, max_period)?);
    let (t, branch) = forward_traced(&p);
    let out = ValueOut::of(&t, max_period);

    let mut report = Report::new("map", json!({ "x": x, "y": y }));
    report.value_lines("x", &ValueOut::of(&p.x, max_period));
    report.value_lines("y", &ValueOut::of(&p.y, max_period));
    report.value_lines("t", &out);
    report.branch(branch.to_string());
    report.witness(in_union_b(&t));
    report.record.result = json!({ "t": out });
    Ok(report)
}

pub fn invert(t: &str, max_period: usize) -> Result<Report> {
    let tv = parse_value("t", t, max_period)?;
    let (p, witness) = inverse_traced(&tv);
    let out = PointOut::of(&p, max_period);

    let mut report = Report::new("invert", json!({ "t": t }));
    report.value_lines("t", &ValueOut::of(&tv, max_period));
    report.value_lines("x", &out.x);
    report.value_lines("y", &out.y);
    report.branch(Branch::from_witness(&witness).to_string());
    report.witness(witness);
    report.record.result = json!({ "point": out });
    Ok(report)
}

pub fn classify(t: &str, max_period: usize) -> Result<Report> {
    let tv = parse_value("t", t, max_period)?;
    let chain = classify_chain(&tv);

    let mut report = Report::new("classify", json!({ "t": t }));
    report.value_lines("t", &ValueOut::of(&tv, max_period));
    let show = |p: Option<usize>| p.map_or("none".to_string(), |k| k.to_string());
    match &chain.summary {
        Some(s) => {
            report.line("zero", s.is_zero.to_string());
            report.line("first nonzero position", show(s.first_nonzero));
            report.line("first nonzero position after 1", show(s.first_nonzero_after_1));
            report.line("nonzero even-position digit", s.even_position_nonzero_exists.to_string());
        }
        None => report.line("summary", "t = 1 has no proper expansion"),
    }
    let levels: Vec<String> = chain.candidates.iter().map(|c| c.level.to_string()).collect();
    report.line("candidates", levels.join(", "));
    for c in &chain.candidates {
        let verdict = if c.member { "member" } else { "not a member" };
        report.line(format!("B{}", subscript(c.level)), verdict);
    }
    report.witness(chain.witness);
    report.record.result = json!({
        "t": ValueOut::of(&tv, max_period),
        "summary": chain.summary,
        "candidates": chain.candidates,
    });
    Ok(report)
}

pub fn dedekind(length: usize, prefix: &str, filler: &str, max_period: usize) -> Result<Report> {
    let digits: Vec<u8> = prefix
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as u8))
        .collect::<Option<_>>()
        .with_context(|| format!("invalid prefix {prefix:?}: expected decimal digits"))?;
    ensure!(
        digits.len() == length,
        "prefix {prefix:?} has {} digits but --length is {length}",
        digits.len()
    );
    let fill = parse_digit_stream(filler).with_context(|| format!("invalid filler {filler:?}"))?;
    let z = dedekind_family(&digits, &fill).with_context(|| format!("invalid filler {filler:?}"))?;

    let c_preimage = has_c_preimage(&z)?;
    ensure!(!c_preimage, "{z} unexpectedly has a preimage under digit interleaving");
    let (p, witness) = inverse_traced(&z);
    let (back, _) = forward_traced(&p);
    ensure!(back == z, "f* does not map the preimage {p} back to {z}");

    let z_out = ValueOut::of(&z, max_period);
    let p_out = PointOut::of(&p, max_period);
    let mut report = Report::new(
        "dedekind",
        json!({ "length": length, "prefix": prefix, "filler": filler }),
    );
    report.value_lines("z", &z_out);
    report.line("digit interleaving preimage", "none");
    report.value_lines("x", &p_out.x);
    report.value_lines("y", &p_out.y);
    report.branch(Branch::from_witness(&witness).to_string());
    report.witness(witness);
    report.record.result = json!({
        "z": z_out,
        "has_c_preimage": c_preimage,
        "preimage": p_out,
        "verified": true,
    });
    Ok(report)
}

pub fn grid_label(branch: &Branch) -> String {
    match branch.a_level() {
        Some(n) => format!("A{}", subscript(n)),
        None => "complement".to_string(),
    }
}

pub fn grid(resolution: u64, output: &Path, max_resolution: u64) -> Result<Report> {
    ensure!(resolution > 0, "resolution must be positive");
    ensure!(
        resolution <= max_resolution,
        "resolution {resolution} exceeds the cap of {max_resolution}"
    );
    let coord = |i: u64| {
        let r = cantor_square::UnitRational::from_u64(i, resolution).expect("i ≤ resolution");
        UnitValue::from_rational_with_limit(&r, usize::MAX).expect("lattice points expand")
    };
    let rows: Vec<String> = (0..=resolution)
        .into_par_iter()
        .flat_map_iter(|i| (0..=resolution).map(move |j| (i, j)))
        .map(|(i, j)| {
            let p = SquarePoint::new(coord(i), coord(j));
            let (t, branch) = forward_traced(&p);
            format!(
                "{},{},{},{}",
                p.x.to_fraction_string(),
                p.y.to_fraction_string(),
                t.to_fraction_string(),
                grid_label(&branch)
            )
        })
        .collect();

    let file = File::create(output).with_context(|| format!("cannot write {}", output.display()))?;
    let mut w = BufWriter::new(file);
    writeln!(w, "x,y,t,branch")?;
    for row in &rows {
        writeln!(w, "{row}")?;
    }
    w.flush().with_context(|| format!("cannot write {}", output.display()))?;

    let mut report = Report::new(
        "grid",
        json!({ "resolution": resolution, "output": output.display().to_string() }),
    );
    report.line("rows", rows.len().to_string());
    report.line("output", output.display().to_string());
    report.record.result = json!({ "rows": rows.len(), "output": output.display().to_string() });
    Ok(report)
}

fn parse_array(name: &str, text: &str) -> Result<Vec<usize>> {
    serde_json::from_str(text)
        .with_context(|| format!("{name} must be a JSON array of non-negative integers, got {text:?}"))
}

pub fn sb_demo(f: &str, g: &str) -> Result<Report> {
    let fm = parse_array("f", f)?;
    let gm = parse_array("g", g)?;
    let (a, b) = (fm.len(), gm.len());
    let fi = FiniteInjection::new(fm, b).context("f is not an injection A → B")?;
    let gi = FiniteInjection::new(gm, a).context("g is not an injection B → A")?;
    let chain = build_chain(&fi, &gi)?;
    let h = build_bijection(&fi, &gi)?;
    if h.len() != a {
        bail!("bijection has the wrong size");
    }

    let a0: Vec<usize> = (0..a).filter(|&i| chain.a_levels[i] == Some(0)).collect();
    let list = |v: &[usize]| {
        let items: Vec<String> = v.iter().map(usize::to_string).collect();
        format!("[{}]", items.join(", "))
    };
    let mut report = Report::new("sb-demo", json!({ "f": f, "g": g }));
    report.line("A₀", list(&a0));
    report.line("chain union in A", list(&chain.a_chain_union()));
    report.line("chain union in B", list(&chain.b_chain_union()));
    report.line("rounds", chain.rounds.to_string());
    report.line("h", list(&h));
    report.line("verified", "true");
    report.record.result = json!({ "h": h, "a0": a0, "chain": chain, "verified": true });
    Ok(report)
}

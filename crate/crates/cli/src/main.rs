mod commands;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use cantor_square::DEFAULT_MAX_PERIOD;
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use report::Report;

/// Exact bijection between the unit square and the unit segment.
#[derive(Parser, Debug)]
#[command(name = "cantor-square", version, about)]
struct Cli {
    /// Emit one JSON object per invocation.
    #[arg(long, global = true)]
    json: bool,

    /// Run every line of this file as a separate invocation.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Longest repeating block to expand or print.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PERIOD, value_name = "DIGITS")]
    max_period: usize,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f*(x, y) with the branch it came from.
    Map { x: String, y: String },
    /// The point of the square sent to t, with its chain witness.
    Invert { t: String },
    /// Full chain classification of t.
    Classify { t: String },
    /// Build 0.z₁…z_l 9 s₁ 9 s₂ … and show it has no interleaving preimage.
    Dedekind {
        #[arg(short = 'l', long)]
        length: usize,
        #[arg(long, default_value = "")]
        prefix: String,
        /// Eventually periodic digits such as 0, (3) or 12(45).
        #[arg(long)]
        filler: String,
    },
    /// Write f* on the lattice {i/n} × {j/n} as CSV.
    Grid {
        resolution: u64,
        #[arg(long, value_name = "PATH")]
        output: PathBuf,
        #[arg(long, default_value_t = 1000)]
        max_resolution: u64,
    },
    /// Finite Schröder–Bernstein on two injections given as JSON arrays.
    SbDemo { f: String, g: String },
}

/// One line of a batch file.
#[derive(Parser, Debug)]
#[command(name = "cantor-square", no_binary_name = true)]
struct Line {
    #[command(subcommand)]
    command: Command,
}

fn run(command: &Command, max_period: usize) -> Result<Report> {
    match command {
        Command::Map { x, y } => commands::map(x, y, max_period),
        Command::Invert { t } => commands::invert(t, max_period),
        Command::Classify { t } => commands::classify(t, max_period),
        Command::Dedekind {
            length,
            prefix,
            filler,
        } => commands::dedekind(*length, prefix, filler, max_period),
        Command::Grid {
            resolution,
            output,
            max_resolution,
        } => commands::grid(*resolution, output, *max_resolution),
        Command::SbDemo { f, g } => commands::sb_demo(f, g),
    }
}

fn run_batch(path: &PathBuf, json: bool, max_period: usize) -> Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let outcomes: Vec<Result<String>> = lines
        .par_iter()
        .map(|&(n, l)| {
            let parsed = Line::try_parse_from(l.split_whitespace())
                .map_err(|e| anyhow::anyhow!("{}", e.render().to_string().trim_end()))
                .with_context(|| format!("line {n}"))?;
            let report = run(&parsed.command, max_period).with_context(|| format!("line {n}"))?;
            Ok(report.render(json))
        })
        .collect();

    let mut ok = true;
    let mut first = true;
    for outcome in outcomes {
        match outcome {
            Ok(out) => {
                if !json && !first {
                    println!();
                }
                first = false;
                println!("{out}");
            }
            Err(e) => {
                ok = false;
                eprintln!("error: {e:#}");
            }
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match (&cli.file, &cli.command) {
        (Some(_), Some(_)) => Err(anyhow::anyhow!("--file cannot be combined with a subcommand")),
        (Some(path), None) => run_batch(path, cli.json, cli.max_period),
        (None, Some(command)) => run(command, cli.max_period).map(|report| {
            println!("{}", report.render(cli.json));
            true
        }),
        (None, None) => Err(anyhow::anyhow!("no subcommand given; see --help")),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

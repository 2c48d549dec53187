//! Command-line front end shared by the `minset` binary and the tests.

pub mod bench;
pub mod io;
pub mod random;
pub mod render;

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::datamodel::{DataSet, LiteralSet};
use crate::decompose::minsets;
use crate::design::suggest_extensions;
use crate::error::{Error, Result};
use crate::oracle::{oracle_minsets, MinSetKind, OracleMethod};
use crate::uniqueness::certify;
use bench::{run_bench, BenchConfig};
use io::{parse_input, Input};
use render::MinSetsDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "minset", version, about = "Minimal wiring diagrams from input-output data")]
pub struct Cli {
    /// Number of states for CSV input (default: inferred from the values).
    #[arg(long, global = true)]
    pub states: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unsigned and signed min-sets of a data set.
    Minsets {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Uniqueness certificate for an input set.
    Certify {
        file: PathBuf,
        /// Largest input set for which output assignments are enumerated.
        #[arg(long, env = "MINSET_MAX_TYPE_POINTS", default_value_t = crate::uniqueness::DEFAULT_MAX_POINTS)]
        max_type_points: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extra experiments that make the min-sets unique.
    Suggest {
        file: PathBuf,
        /// Largest number of points to add.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the decomposition against exhaustive ground truth.
    Oracle {
        file: PathBuf,
        /// Largest model space enumerated before falling back to feasibility checks.
        #[arg(long, env = "MINSET_ORACLE_CAP", default_value_t = 1 << 24)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the extended-ideal pipeline against the baseline on random data (JSON).
    Bench {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 10)]
        vsize: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, env = "MINSET_BASELINE_CAP", default_value_t = crate::decompose::BASELINE_CAP)]
        baseline_cap: u64,
        /// Drop wall-clock fields so that output is reproducible.
        #[arg(long)]
        no_timings: bool,
    },
}

/// What a command prints and the exit status it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub notices: Vec<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, notices: Vec::new(), code: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn require_data(input: Input) -> Result<DataSet> {
    match input {
        Input::Data(d) => Ok(d),
        Input::Inputs(_) => Err(Error::Format("this command needs an output for every row".into())),
    }
}

/// Pipeline against oracle for one kind of min-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindCheck {
    pub pass: bool,
    pub method: OracleMethod,
    pub pipeline: Vec<LiteralSet>,
    pub oracle: Vec<LiteralSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub unsigned: KindCheck,
    pub signed: KindCheck,
    /// The pipeline reports signed consistency exactly when some unate function fits.
    pub consistency_agrees: bool,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.unsigned.pass && self.signed.pass && self.consistency_agrees
    }
}

pub fn compare_with_oracle(data: &DataSet, cap: u128) -> Result<OracleReport> {
    let report = minsets(data);
    let check = |kind, pipeline: Vec<LiteralSet>| -> Result<KindCheck> {
        let answer = oracle_minsets(data, kind, cap)?;
        Ok(KindCheck { pass: answer.minsets == pipeline, method: answer.method, pipeline, oracle: answer.minsets })
    };
    let unsigned = check(MinSetKind::Unsigned, report.unsigned_minsets)?;
    let signed = check(MinSetKind::Signed, report.signed_minsets)?;
    let consistency_agrees = report.signed_consistent == !signed.oracle.is_empty();
    Ok(OracleReport { unsigned, signed, consistency_agrees })
}

fn oracle_text(r: &OracleReport) -> String {
    let mut out = String::new();
    for (name, c) in [("unsigned", &r.unsigned), ("signed", &r.signed)] {
        let method = match c.method {
            OracleMethod::Enumeration => "model space enumerated",
            OracleMethod::Feasibility => "feasibility of every candidate set",
        };
        writeln!(out, "{name}: {} ({method})", if c.pass { "PASS" } else { "FAIL" }).unwrap();
        if !c.pass {
            let list = |v: &[LiteralSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(out, "  only from decomposition: {}", list(&diff(&c.pipeline, &c.oracle))).unwrap();
            writeln!(out, "  only from oracle:        {}", list(&diff(&c.oracle, &c.pipeline))).unwrap();
        }
    }
    if !r.consistency_agrees {
        out.push_str("signed consistency: FAIL\n");
    }
    out
}

fn diff(a: &[LiteralSet], b: &[LiteralSet]) -> Vec<LiteralSet> {
    a.iter().filter(|s| !b.contains(s)).copied().collect()
}

fn unsupported(format: Format) -> Error {
    Error::Validation(format!("{format:?} output is not available for this command").to_lowercase())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Minsets { file, format } => {
            let data = require_data(parse_input(file, cli.states)?)?;
            let doc = MinSetsDocument::new(&data);
            Ok(Outcome::ok(match format {
                Format::Text => render::minsets_text(&doc),
                Format::Json => json(&doc),
                Format::Dot => render::minsets_dot(&doc.report),
            }))
        }
        Command::Certify { file, max_type_points, format } => {
            let input = parse_input(file, cli.states)?;
            let mut notices = Vec::new();
            if matches!(input, Input::Data(_)) {
                notices.push("outputs are ignored when certifying an input set".to_string());
            }
            let cert = certify(&input.input_set(), *max_type_points);
            let stdout = match format {
                Format::Text => render::certificate_text(&cert),
                Format::Json => json(&cert),
                Format::Dot => return Err(unsupported(*format)),
            };
            Ok(Outcome { stdout, notices, code: 0 })
        }
        Command::Suggest { file, k, format } => {
            let report = suggest_extensions(&parse_input(file, cli.states)?.input_set(), *k)?;
            Ok(Outcome::ok(match format {
                Format::Text => render::design_text(&report),
                Format::Json => json(&report),
                Format::Dot => return Err(unsupported(*format)),
            }))
        }
        Command::Oracle { file, cap, format } => {
            let data = require_data(parse_input(file, cli.states)?)?;
            let report = compare_with_oracle(&data, *cap as u128)?;
            let stdout = match format {
                Format::Text => oracle_text(&report),
                Format::Json => json(&report),
                Format::Dot => return Err(unsupported(*format)),
            };
            Ok(Outcome { stdout, notices: Vec::new(), code: if report.pass() { 0 } else { 4 } })
        }
        Command::Bench { n, q, vsize, trials, seed, baseline_cap, no_timings } => {
            let cfg = BenchConfig { n: *n, q: *q, vsize: *vsize, trials: *trials, seed: *seed, baseline_cap: *baseline_cap };
            let report = run_bench(cfg)?;
            let mut notices = Vec::new();
            if report.baseline_refused > 0 {
                notices.push(format!("baseline refused {} of {} trials", report.baseline_refused, trials));
            }
            let code = if report.all_agree { 0 } else { 4 };
            let shown = if *no_timings { report.without_timings() } else { report };
            Ok(Outcome { stdout: json(&shown), notices, code })
        }
    }
}

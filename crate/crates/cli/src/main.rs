//! `polyharmonic` command-line tool: sequence values, tables and
//! verification sweeps, all in exact rational arithmetic.

mod output;
mod range;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyharmonic::arith::int;
use polyharmonic::bernoulli::{
    bernoulli_number, bernoulli_polynomial, poly_bernoulli_number, poly_bernoulli_polynomial,
};
use polyharmonic::harmonic::{
    gen_hyperharmonic, harmonic_generalized, hyper_sum, hyperharmonic, HyperSumStrategy,
};
use polyharmonic::stirling::{stirling1_r, stirling2_r};
use polyharmonic::verify::{self, CheckResult, Ranges, SweepReport};
use polyharmonic::{Error, ExactRational};

use output::{emit, Format, OutputRecord};
use range::{IndexRange, RangeOverride};

#[derive(Parser, Debug)]
#[command(
    name = "polyharmonic",
    version,
    about = "Exact hyperharmonic and poly-Bernoulli computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one value of a sequence per n.
    Compute {
        #[arg(value_enum)]
        seq: Sequence,
        #[command(flatten)]
        params: SeqParams,
        /// Index range `a..b` (inclusive) or a single index.
        #[arg(long, allow_hyphen_values = true)]
        n: IndexRange,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a registered check (or `all`) over its sweep ranges.
    Verify {
        check: String,
        /// Override a sweep range, e.g. `--range n=0..10`. Repeatable.
        #[arg(long = "range", value_name = "NAME=A..B", allow_hyphen_values = true)]
        ranges: Vec<RangeOverride>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print a Stirling triangle or a row of Bernoulli-type numbers.
    Table {
        #[arg(value_enum)]
        name: TableName,
        /// Stirling offset r.
        #[arg(long, default_value_t = 0)]
        r: u32,
        /// Range of orders p for the poly-Bernoulli table.
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        p: IndexRange,
        #[arg(long, allow_hyphen_values = true)]
        n: IndexRange,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// List the registered checks.
    Checks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sequence {
    Harmonic,
    Hyperharmonic,
    GenHyperharmonic,
    HyperSum,
    Bernoulli,
    PolyBernoulli,
    Stirling1,
    Stirling2,
    PolyBernoulliPoly,
    BernoulliPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    Stirling1,
    Stirling2,
    Bernoulli,
    PolyBernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Default)]
struct SeqParams {
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<i64>,
}

/// Usage problems detected after argument parsing.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            seq,
            params,
            n,
            format,
        } => compute(seq, &params, &n).and_then(|recs| write_records(&recs, format)),
        Command::Table {
            name,
            r,
            p,
            n,
            format,
        } => table(name, r, &p, &n).and_then(|recs| write_records(&recs, format)),
        Command::Verify {
            check,
            ranges,
            format,
        } => return run_verify(&check, &ranges, format),
        Command::Checks => {
            let mut out = io::stdout().lock();
            for def in verify::registry() {
                let _ = writeln!(out, "{:<20} {}", def.name, def.statement);
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_records(records: &[OutputRecord], format: Format) -> Result<(), UsageError> {
    emit(records, format, io::stdout().lock()).map_err(|e| usage(format!("write failed: {e}")))
}

fn to_u32(name: &str, v: i64) -> Result<u32, UsageError> {
    u32::try_from(v).map_err(|_| usage(format!("--{name} must be a non-negative integer, got {v}")))
}

fn indices(n: &IndexRange) -> Result<Vec<u32>, UsageError> {
    n.0.clone().map(|v| to_u32("n", v)).collect()
}

/// Parameters a sequence accepts, with defaults; anything else is rejected.
fn accepted(seq: Sequence) -> &'static [(&'static str, Option<i64>)] {
    match seq {
        Sequence::Harmonic => &[("p", Some(1))],
        Sequence::Hyperharmonic => &[("r", None)],
        Sequence::GenHyperharmonic => &[("p", Some(1)), ("r", None)],
        Sequence::HyperSum => &[("p", None), ("q", Some(0))],
        Sequence::Bernoulli => &[],
        Sequence::PolyBernoulli => &[("p", None)],
        Sequence::Stirling1 | Sequence::Stirling2 => &[("k", None), ("r", Some(0))],
        Sequence::PolyBernoulliPoly => &[("p", None), ("x", Some(0))],
        Sequence::BernoulliPoly => &[("x", Some(0))],
    }
}

fn resolve(seq: Sequence, given: &SeqParams) -> Result<BTreeMap<&'static str, i64>, UsageError> {
    let supplied = [
        ("p", given.p),
        ("q", given.q),
        ("r", given.r),
        ("k", given.k),
        ("x", given.x),
    ];
    let spec = accepted(seq);
    let seq_name = seq
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let mut out = BTreeMap::new();
    for (name, value) in supplied {
        match (spec.iter().find(|(k, _)| *k == name), value) {
            (None, Some(_)) => {
                return Err(usage(format!("{seq_name} does not take --{name}")));
            }
            (Some(&(k, default)), v) => {
                let v = v
                    .or(default)
                    .ok_or_else(|| usage(format!("{seq_name} requires --{k}")))?;
                out.insert(k, v);
            }
            (None, None) => {}
        }
    }
    Ok(out)
}

fn compute(
    seq: Sequence,
    given: &SeqParams,
    n: &IndexRange,
) -> Result<Vec<OutputRecord>, UsageError> {
    let params = resolve(seq, given)?;
    let seq_name = seq
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let get = |k: &str| params[k];
    let mut records = Vec::new();
    for idx in indices(n)? {
        let value: ExactRational = match seq {
            Sequence::Harmonic => harmonic_generalized(idx, get("p")),
            Sequence::Hyperharmonic => hyperharmonic(idx, to_u32("r", get("r"))?)?,
            Sequence::GenHyperharmonic => gen_hyperharmonic(idx, get("p"), to_u32("r", get("r"))?),
            Sequence::HyperSum => hyper_sum(
                to_u32("p", get("p"))?,
                to_u32("q", get("q"))?,
                idx,
                HyperSumStrategy::Recursive,
            ),
            Sequence::Bernoulli => bernoulli_number(idx),
            Sequence::PolyBernoulli => poly_bernoulli_number(idx, get("p")),
            Sequence::Stirling1 => int(stirling1_r(
                idx,
                to_u32("k", get("k"))?,
                to_u32("r", get("r"))?,
            )),
            Sequence::Stirling2 => int(stirling2_r(
                idx,
                to_u32("k", get("k"))?,
                to_u32("r", get("r"))?,
            )),
            Sequence::PolyBernoulliPoly => {
                poly_bernoulli_polynomial(idx, get("p")).eval(&int(get("x")))
            }
            Sequence::BernoulliPoly => bernoulli_polynomial(idx).eval(&int(get("x"))),
        };
        let mut rec_params: Vec<(&str, i64)> = vec![("n", idx as i64)];
        rec_params.extend(params.iter().map(|(k, v)| (*k, *v)));
        records.push(OutputRecord::new(&seq_name, &rec_params, &value));
    }
    Ok(records)
}

fn table(
    name: TableName,
    r: u32,
    p: &IndexRange,
    n: &IndexRange,
) -> Result<Vec<OutputRecord>, UsageError> {
    let mut records = Vec::new();
    for idx in indices(n)? {
        match name {
            TableName::Stirling1 | TableName::Stirling2 => {
                let label = if name == TableName::Stirling1 {
                    "stirling1"
                } else {
                    "stirling2"
                };
                for k in 0..=idx {
                    let v = if name == TableName::Stirling1 {
                        stirling1_r(idx, k, r)
                    } else {
                        stirling2_r(idx, k, r)
                    };
                    records.push(OutputRecord::new(
                        label,
                        &[("n", idx as i64), ("k", k as i64), ("r", r as i64)],
                        &int(v),
                    ));
                }
            }
            TableName::Bernoulli => {
                records.push(OutputRecord::new(
                    "bernoulli",
                    &[("n", idx as i64)],
                    &bernoulli_number(idx),
                ));
            }
            TableName::PolyBernoulli => {
                for order in p.0.clone() {
                    records.push(OutputRecord::new(
                        "poly-bernoulli",
                        &[("n", idx as i64), ("p", order)],
                        &poly_bernoulli_number(idx, order),
                    ));
                }
            }
        }
    }
    Ok(records)
}

#[derive(Serialize)]
struct FailureJson {
    params: BTreeMap<String, i64>,
    lhs: String,
    rhs: String,
    modulus: Option<u64>,
    note: Option<String>,
}

#[derive(Serialize)]
struct ReportJson {
    check: String,
    passed: bool,
    total: usize,
    skipped: usize,
    elapsed_ms: u128,
    failures: Vec<FailureJson>,
}

impl From<&SweepReport> for ReportJson {
    fn from(rep: &SweepReport) -> Self {
        ReportJson {
            check: rep.check_name.clone(),
            passed: rep.passed(),
            total: rep.total,
            skipped: rep.skipped,
            elapsed_ms: rep.elapsed.as_millis(),
            failures: rep
                .failures
                .iter()
                .map(|f| FailureJson {
                    params: f.params.clone(),
                    lhs: f.lhs.to_string(),
                    rhs: f.rhs.to_string(),
                    modulus: f.modulus,
                    note: f.note.clone(),
                })
                .collect(),
        }
    }
}

fn describe_failure(f: &CheckResult) -> String {
    let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let relation = match f.modulus {
        Some(m) => format!("lhs = {}, rhs = {} (mod {m})", f.lhs, f.rhs),
        None => format!("lhs = {}, rhs = {}", f.lhs, f.rhs),
    };
    match &f.note {
        Some(note) => format!("  FAIL {}: {relation}; {note}", params.join(" ")),
        None => format!("  FAIL {}: {relation}", params.join(" ")),
    }
}

fn sweep_ranges(check: &str, overrides: &[RangeOverride]) -> Result<Ranges, Error> {
    let def = verify::find_check(check)?;
    let mut ranges = def.default_ranges();
    for o in overrides {
        if ranges.contains_key(&o.name) {
            ranges.insert(o.name.clone(), o.range.0.clone());
        }
    }
    Ok(ranges)
}

fn run_verify(check: &str, overrides: &[RangeOverride], format: ReportFormat) -> ExitCode {
    let names: Vec<&str> = if check == "all" {
        verify::check_names()
    } else {
        vec![check]
    };
    let selected: Vec<&str> = names
        .iter()
        .copied()
        .filter(|n| verify::find_check(n).is_ok())
        .collect();
    if selected.is_empty() {
        eprintln!("error: {}", Error::UnknownCheck(check.to_string()));
        return ExitCode::from(2);
    }
    for o in overrides {
        let known = selected.iter().any(|n| {
            verify::find_check(n)
                .map(|d| d.params.iter().any(|s| s.name == o.name))
                .unwrap_or(false)
        });
        if !known {
            eprintln!(
                "error: no selected check has a parameter named {:?}",
                o.name
            );
            return ExitCode::from(2);
        }
    }

    let mut reports = Vec::new();
    for name in &selected {
        let report = sweep_ranges(name, overrides).and_then(|r| verify::run_sweep(name, &r));
        match report {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }

    let mut out = io::stdout().lock();
    let written = match format {
        ReportFormat::Json => {
            let body: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
            serde_json::to_writer_pretty(&mut out, &body)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out))
        }
        ReportFormat::Text => reports.iter().try_for_each(|rep| {
            writeln!(
                out,
                "{} {:<20} {:>7} instances {:>6} skipped {:>4} failures {:>9.3}s",
                if rep.passed() { "PASS" } else { "FAIL" },
                rep.check_name,
                rep.total,
                rep.skipped,
                rep.failures.len(),
                rep.elapsed.as_secs_f64()
            )?;
            rep.failures
                .iter()
                .try_for_each(|f| writeln!(out, "{}", describe_failure(f)))
        }),
    };
    if let Err(e) = written {
        eprintln!("error: write failed: {e}");
        return ExitCode::from(2);
    }
    if reports.iter().all(SweepReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

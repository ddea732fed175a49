//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a table cell
//! disagrees, a periodicity check fails, a conjecture is refuted), 2 on
//! usage errors and refused requests.

pub mod cache;
pub mod export;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::combinat::{enumerate_omega, Partition};
use crate::functor_eval::SimpleCharacters;
use crate::g0::{
    expected_table_cell, Analysis, ConjectureStatus, G0ClassP, G0Error, StabilityStatus, TableCell,
};
use crate::steenrod::{ambient_size, dimension_rows, hit_quotient};

use cache::FileCache;
use export::{factors_of, Format, Report, Table};

/// Largest `Sⁿ(F₂^k)` basis handled without `--force`.
pub const AMBIENT_LIMIT: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "hitstab",
    version,
    about = "Mod-2 hit problem indecomposables and their composition factors"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    /// Directory for the simple-character cache.
    #[arg(long, env = "HITSTAB_CACHE", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Do not read or write the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Highest rank k at which kernels are evaluated directly.
    #[arg(long, default_value_t = 6, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rank: u64,
    /// Highest polynomial degree accepted without --force.
    #[arg(long, default_value_t = 12, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_degree: u64,
    /// Output format; a plain summary when omitted.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Run even when the size guardrails would refuse.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// dim Qⁿ(F₂^k) and its filtration levels
    HitDims { n: usize, k: usize },
    /// Composition factors of every 𝔔ⁿ_d with n ≤ N
    QaTable { max_n: usize },
    /// Composition factors of 𝔔ⁿ_d
    Factors { n: usize, d: usize },
    /// Compare [𝔔ⁿ_d]•1^{e−d} with [𝔔^{n+e−d}_e]
    Periodicity { n: usize, d: usize, e: usize },
    /// Status of the transport of [Qⁿ/Qⁿ[d−1]] to degree n+e−d
    Conjecture { n: usize, d: usize, e: usize },
    /// Character and dimension of the simple functor L_λ
    Simple { lambda: Partition, k: usize },
    /// ω-sequences of weight d and degree n
    Omega { d: usize, n: usize },
}

/// Resolved configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub max_rank: usize,
    pub max_degree: usize,
    pub output_format: Option<Format>,
    pub force: bool,
}

impl Config {
    pub fn from_args(args: &ConfigArgs) -> Self {
        let cache_dir = if args.no_cache {
            None
        } else {
            args.cache_dir.clone().or_else(default_cache_dir)
        };
        Self {
            cache_dir,
            max_rank: args.max_rank as usize,
            max_degree: args.max_degree as usize,
            output_format: args.format,
            force: args.force,
        }
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .map(|base| base.join("hitstab"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Refused(String),
    Compute(G0Error),
}

impl From<G0Error> for Failure {
    fn from(e: G0Error) -> Self {
        Failure::Compute(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, &Config::from_args(&cli.config)),
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let text = err.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
    }
}

/// Entry point for the binary: runs with the process arguments, prints the
/// output and returns the exit code.
pub fn main_from_env() -> i32 {
    let out = run_args(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

/// Runs one command under `config`.
pub fn run(command: &Command, config: &Config) -> Outcome {
    let mut stderr = String::new();
    let simples = match &config.cache_dir {
        Some(dir) => match FileCache::open(dir) {
            Ok(cache) => SimpleCharacters::with_store(Box::new(cache)),
            Err(err) => {
                stderr.push_str(&format!(
                    "warning: cache at {} unavailable ({err}); computing in memory\n",
                    dir.display()
                ));
                SimpleCharacters::new()
            }
        },
        None => SimpleCharacters::new(),
    };
    let analysis = Analysis::new(simples);
    match execute(command, config, &analysis) {
        Ok((report, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout: report.render(config.output_format),
            stderr,
        },
        Err(Failure::Refused(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: stderr + &format!("refused: {msg}\n"),
        },
        Err(Failure::Compute(err)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: stderr + &format!("error: {err}\n"),
        },
    }
}

fn check_degree(config: &Config, degree: usize) -> Result<(), Failure> {
    if degree > config.max_degree && !config.force {
        return Err(Failure::Refused(format!(
            "degree {degree} exceeds --max-degree {}; raise it or pass --force",
            config.max_degree
        )));
    }
    Ok(())
}

fn check_ambient(config: &Config, n: usize, k: usize) -> Result<(), Failure> {
    let size = ambient_size(n, k);
    if size > AMBIENT_LIMIT && !config.force {
        return Err(Failure::Refused(format!(
            "S^{n}(F_2^{k}) has {size} monomials, above the limit of {AMBIENT_LIMIT}; \
             a dense relation matrix would need about {} MiB; pass --force to continue",
            size * size / 8 / (1 << 20)
        )));
    }
    Ok(())
}

fn execute(
    command: &Command,
    config: &Config,
    analysis: &Analysis,
) -> Result<(Report, bool), Failure> {
    match command {
        Command::HitDims { n, k } => hit_dims(config, *n, *k),
        Command::QaTable { max_n } => qa_table(config, analysis, *max_n),
        Command::Factors { n, d } => factors(config, analysis, *n, *d),
        Command::Periodicity { n, d, e } => periodicity(config, analysis, *n, *d, *e),
        Command::Conjecture { n, d, e } => conjecture(config, analysis, *n, *d, *e),
        Command::Simple { lambda, k } => simple(config, analysis, lambda, *k),
        Command::Omega { d, n } => Ok((omega(*d, *n), true)),
    }
}

fn hit_dims(config: &Config, n: usize, k: usize) -> Result<(Report, bool), Failure> {
    check_ambient(config, n, k)?;
    let dim = hit_quotient(n, k).dim;
    let rows = dimension_rows(n, k);
    let mut report = Report::new(json!({"n": n, "k": k}), "OK");
    report.table = Table::new(&["n", "d", "k", "dim_qa", "dim_Qd", "dim_K"]);
    report.text.push(format!("dim Q^{n}(F_2^{k}) = {dim}"));
    for row in &rows {
        report.table.push(
            [row.n, row.d, row.k, row.dim_qa, row.dim_qd, row.dim_k]
                .iter()
                .map(|x| x.to_string())
                .collect(),
        );
        if row.dim_qa > 0 || row.dim_qd > 0 {
            report.text.push(format!(
                "  d={}: dim Qa^{n}_{} = {}, dim Q^{n}_{} = {}, dim K^{n}_{} = {}",
                row.d, row.d, row.dim_qa, row.d, row.dim_qd, row.d, row.dim_k
            ));
        }
    }
    report.evidence = json!({"dim": dim, "levels": rows});
    Ok((report, true))
}

/// Grid with one row per d (descending) and one column per n.
pub fn table_markdown(cells: &[(usize, usize, G0ClassP)], max_n: usize) -> String {
    let mut table = Table::new(&[]);
    table.header.push("d \\ n".into());
    table.header.extend((1..=max_n).map(|n| n.to_string()));
    for d in (1..=max_n).rev() {
        let mut row = vec![d.to_string()];
        for n in 1..=max_n {
            let cell = cells
                .iter()
                .find(|(a, b, _)| *a == n && *b == d)
                .filter(|(_, _, c)| !c.is_zero())
                .map(|(_, _, c)| c.to_string())
                .unwrap_or_default();
            row.push(cell);
        }
        table.push(row);
    }
    export::to_markdown(&table)
}

/// The expected `n ≤ 8` table rendered as the `qa-table 8` Markdown output.
pub fn expected_table_markdown() -> String {
    let cells: Vec<_> = (1..=8)
        .flat_map(|n| (1..=n).map(move |d| (n, d, expected_table_cell(n, d))))
        .collect();
    table_markdown(&cells, 8)
}

fn qa_table(config: &Config, analysis: &Analysis, max_n: usize) -> Result<(Report, bool), Failure> {
    check_degree(config, max_n)?;
    let cells: Vec<TableCell> = analysis.reproduce_table(max_n)?;
    let mismatches: Vec<&TableCell> = cells.iter().filter(|c| !c.matches()).collect();
    let ok = mismatches.is_empty();
    let mut report = Report::new(json!({"max_n": max_n}), if ok { "OK" } else { "MISMATCH" });
    report.table = Table::new(&["n", "d", "partition", "multiplicity"]);
    let mut evidence = Vec::new();
    for cell in &cells {
        for (lambda, m) in cell.class.factors() {
            report.table.push(vec![
                cell.n.to_string(),
                cell.d.to_string(),
                lambda.to_string(),
                m.to_string(),
            ]);
        }
        if !cell.class.is_zero() {
            report
                .text
                .push(format!("Qa^{}_{} = {}", cell.n, cell.d, cell.class));
            evidence.push(json!({
                "n": cell.n,
                "d": cell.d,
                "factors": factors_of(&cell.class),
                "matches_expected": cell.expected.as_ref().map(|e| *e == cell.class),
            }));
        }
    }
    for cell in &mismatches {
        report.text.push(format!(
            "MISMATCH Qa^{}_{}: computed {}, expected {}",
            cell.n,
            cell.d,
            cell.class,
            cell.expected.as_ref().expect("only checked cells mismatch")
        ));
    }
    report.evidence = json!({"cells": evidence});
    let triples: Vec<_> = cells.iter().map(|c| (c.n, c.d, c.class.clone())).collect();
    report.markdown = Some(table_markdown(&triples, max_n));
    Ok((report, ok))
}

fn factors(
    config: &Config,
    analysis: &Analysis,
    n: usize,
    d: usize,
) -> Result<(Report, bool), Failure> {
    check_degree(config, n)?;
    let class = analysis.qa_class(n, d)?;
    let chi = crate::steenrod::qa_character(n, d);
    let mut report = Report::new(json!({"n": n, "d": d}), "OK");
    report.factors = factors_of(&class);
    report.table = Table::new(&["partition", "multiplicity"]);
    for f in &report.factors {
        report
            .table
            .push(vec![f.partition.clone(), f.multiplicity.to_string()]);
    }
    report.text.push(format!("[Qa^{n}_{d}] = {class}"));
    for (lambda, m) in class.factors() {
        let restricted = if lambda.is_p_restricted(2) {
            ""
        } else {
            "  (not 2-restricted)"
        };
        report
            .text
            .push(format!("  L{} x {m}{restricted}", lambda.pretty()));
    }
    let dims: Vec<_> = (1..=config.max_rank)
        .map(|k| json!({"k": k, "dim": chi.dim_at(k) as u64}))
        .collect();
    report.evidence = json!({"character": chi.to_string(), "dims": dims});
    Ok((report, true))
}

fn periodicity(
    config: &Config,
    analysis: &Analysis,
    n: usize,
    d: usize,
    e: usize,
) -> Result<(Report, bool), Failure> {
    check_degree(config, n.max((n + e).saturating_sub(d)))?;
    let r = analysis.periodicity_check(n, d, e)?;
    let mut report = Report::new(json!({"n": n, "d": d, "e": e}), r.status.to_string());
    report
        .text
        .push(format!("periodicity ({n},{d},{e}): {}", r.status));
    if let Some(h) = &r.hypotheses {
        report.text.push(format!(
            "  stable {} strictly {} congruent mod {}: {}",
            h.stable, h.strictly_stable, h.modulus, h.congruent
        ));
    }
    if let (Some(s), Some(t)) = (&r.source, &r.target) {
        report.text.push(format!("  [Qa^{n}_{d}] = {s}"));
        report.text.push(format!("  [Qa^{}_{e}] = {t}", n + e - d));
        report.factors = factors_of(s);
    }
    report.table = Table::new(&["target", "source", "transported", "computed"]);
    for row in &r.rows {
        report.table.push(vec![
            row.target.to_string(),
            row.source
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_else(|| "-".into()),
            row.transported.to_string(),
            row.computed.to_string(),
        ]);
        if row.transported != row.computed {
            report.text.push(format!(
                "  L{}: transported {} computed {}",
                row.target.pretty(),
                row.transported,
                row.computed
            ));
        }
    }
    report.evidence = serde_json::to_value(&r).expect("reports serialize");
    Ok((report, r.status != StabilityStatus::Failed))
}

fn conjecture(
    config: &Config,
    analysis: &Analysis,
    n: usize,
    d: usize,
    e: usize,
) -> Result<(Report, bool), Failure> {
    check_degree(config, n.max((n + e).saturating_sub(d)))?;
    let r = analysis.conjecture_report(n, d, e, config.max_rank)?;
    let mut report = Report::new(
        json!({"n": n, "d": d, "e": e, "max_rank": config.max_rank}),
        r.status.to_string(),
    );
    report
        .text
        .push(format!("conjecture ({n},{d},{e}): {}", r.status));
    report.table = Table::new(&[
        "m",
        "level",
        "criterion",
        "certified",
        "target_m",
        "target_level",
        "target_criterion",
        "target_certified",
        "periodicity",
    ]);
    for level in &r.levels {
        let (s, t) = (&level.source, &level.target);
        report.text.push(format!(
            "  Q^{}_{} {} {} | Q^{}_{} {} {} | periodicity {}",
            s.m,
            s.level,
            s.criterion,
            if s.certified {
                "certified"
            } else {
                "uncertified"
            },
            t.m,
            t.level,
            t.criterion,
            if t.certified {
                "certified"
            } else {
                "uncertified"
            },
            level.periodicity
        ));
        report.table.push(vec![
            s.m.to_string(),
            s.level.to_string(),
            s.criterion.to_string(),
            s.certified.to_string(),
            t.m.to_string(),
            t.level.to_string(),
            t.criterion.to_string(),
            t.certified.to_string(),
            level.periodicity.to_string(),
        ]);
    }
    if let Some(w) = &r.witness {
        report.text.push(format!(
            "  witness: multiplicity of L{} is {} after transport but {} computed",
            w.partition.pretty(),
            w.transported,
            w.computed
        ));
    }
    for note in &r.notes {
        report.text.push(format!("  note: {note}"));
    }
    report.evidence = serde_json::to_value(&r).expect("reports serialize");
    Ok((report, r.status != ConjectureStatus::Refuted))
}

fn simple(
    config: &Config,
    analysis: &Analysis,
    lambda: &Partition,
    k: usize,
) -> Result<(Report, bool), Failure> {
    check_degree(config, lambda.size())?;
    let chi = analysis.simples().get(lambda).map_err(G0Error::from)?;
    let dim = chi.dim_at(k);
    let mut report = Report::new(json!({"lambda": lambda.to_string(), "k": k}), "OK");
    report.factors = vec![export::Factor {
        partition: lambda.to_string(),
        multiplicity: 1,
    }];
    report.table = Table::new(&["mu", "coefficient"]);
    for (mu, c) in chi.terms() {
        report.table.push(vec![mu.to_string(), c.to_string()]);
    }
    let steinberg: Vec<String> = lambda
        .p_adic_decompose(2)
        .iter()
        .map(|p| p.to_string())
        .collect();
    report
        .text
        .push(format!("dim L{}(F_2^{k}) = {dim}", lambda.pretty()));
    report.text.push(format!("character: {chi}"));
    report.evidence = json!({
        "dim": dim as u64,
        "character": chi.terms().map(|(mu, c)| json!({"mu": mu.to_string(), "coeff": c})).collect::<Vec<_>>(),
        "steinberg": steinberg,
    });
    Ok((report, true))
}

fn omega(d: usize, n: usize) -> Report {
    let seqs = enumerate_omega(d, n, 2);
    let mut report = Report::new(json!({"d": d, "n": n}), "OK");
    report.table = Table::new(&["omega"]);
    for w in &seqs {
        report.table.push(vec![w.to_string()]);
    }
    report.text.push(
        seqs.iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.evidence =
        json!({"sequences": seqs.iter().map(|w| w.entries().to_vec()).collect::<Vec<_>>()});
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> Outcome {
        let mut full = vec!["hitstab", "--no-cache"];
        full.extend_from_slice(args);
        run_args(full)
    }

    #[test]
    fn hit_dims_example() {
        let out = run_cli(&["hit-dims", "3", "2"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("dim Q^3(F_2^2) = 3\n"));
        let csv = run_cli(&["hit-dims", "3", "2", "--format", "csv"]);
        assert!(csv.stdout.starts_with("n,d,k,dim_qa,dim_Qd,dim_K\n"));
        assert!(csv.stdout.contains("3,2,2,3,3,0"));
    }

    #[test]
    fn factors_example() {
        let out = run_cli(&["factors", "8", "4", "--format", "json"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["factors"].as_array().unwrap().len(), 4);
        assert_eq!(v["status"], "OK");
    }

    #[test]
    fn omega_example() {
        let out = run_cli(&["omega", "4", "8"]);
        assert_eq!(out.stdout, "[0,4] [2,1,1]\n");
    }

    #[test]
    fn simple_example() {
        let out = run_cli(&["simple", "2,1", "3"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("dim L(2,1)(F_2^3) = 8"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_cli(&["frobnicate"]).code, 2);
        assert_eq!(run_cli(&["hit-dims", "3"]).code, 2);
        assert_eq!(run_cli(&["simple", "1,2", "3"]).code, 2);
        assert_eq!(run_cli(&["--max-rank", "0", "omega", "1", "1"]).code, 2);
    }

    #[test]
    fn guardrails() {
        let out = run_cli(&["hit-dims", "40", "12"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("monomials"));
        assert_eq!(run_cli(&["qa-table", "20"]).code, 2);
    }

    #[test]
    fn failed_periodicity_exits_with_one() {
        assert_eq!(run_cli(&["periodicity", "7", "5", "9"]).code, 0);
        assert_eq!(run_cli(&["periodicity", "6", "5", "6"]).code, 1);
        let na = run_cli(&["periodicity", "7", "5", "6"]);
        assert_eq!(na.code, 0);
        assert!(na.stdout.contains("NOT_APPLICABLE"));
    }

    #[test]
    fn exports_are_deterministic() {
        let a = run_cli(&["factors", "7", "5", "--format", "json"]);
        let b = run_cli(&["factors", "7", "5", "--format", "json"]);
        assert_eq!(a, b);
    }
}

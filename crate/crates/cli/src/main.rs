//! `umbral`: Laguerre expansions, number tables and identity audits.
//!
//! Exit codes: 0 when everything evaluated matched, 1 when an audit found a
//! mismatch (or a diff found a divergence), 2 on usage errors.

mod emit;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use umbral_core::audit::{self, AuditDocument, RunInfo, VerificationReport};
use umbral_core::families::{self, BinomialConvention, FamilyTag};
use umbral_core::rational::{self, Rational};
use umbral_core::Polynomial;

#[derive(Parser, Debug)]
#[command(name = "umbral", version, about = "Exact Laguerre expansions and identity audits")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Plain,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Monomial,
    Laguerre,
    Bernoulli,
    Euler,
    FrobeniusEuler,
    FallingFactorial,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Laguerre,
    FallingFactorial,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Stirling2,
    BernoulliNumbers,
    EulerNumbers,
    FrobeniusNumbers,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a family polynomial in a basis.
    Expand {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Laguerre)]
        basis: BasisArg,
        /// Lambda for the Frobenius-Euler family, as `p/q` or an integer.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Print a Stirling triangle or a number sequence.
    Table {
        #[arg(long, value_enum)]
        what: TableKind,
        /// Last row (inclusive).
        #[arg(long)]
        rows: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Audit registered identities.
    Audit {
        /// Comma separated identity ids, or `all`.
        #[arg(long = "identity", default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Comma separated lambda values; defaults to thirteen built-in values.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Comma separated binomial conventions: `generalized`, `zero-neg`.
        #[arg(long, default_value = "generalized")]
        binomial: String,
        /// Identities whose mismatches do not affect the exit code.
        #[arg(long, default_value = "")]
        expect_mismatch: String,
    },
    /// Compare two identity variants point by point.
    Diff {
        /// Identity whose reports form the left column.
        #[arg(long)]
        a: String,
        /// Identity whose reports form the right column.
        #[arg(long)]
        b: String,
        /// Read reports from an audit JSON document instead of evaluating.
        #[arg(long)]
        from: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, default_value = "generalized")]
        binomial: String,
    },
}

/// A usage error: reported on stderr with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Usage> {
    match &cli.command {
        Command::Expand { family, n, basis, lambda } => {
            let lambda = lambda.as_deref().map(parse_lambda).transpose()?;
            let tag = family_tag(*family, lambda.clone())?;
            let poly = tag.polynomial(*n)?;
            let coeffs = expand(&poly, *basis);
            print!("{}", emit::expansion(cli.format, &tag, *n, *basis, lambda.as_ref(), &coeffs));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { what, rows, lambda } => {
            let lambda = lambda.as_deref().map(parse_lambda).transpose()?;
            let table = table(*what, *rows, lambda.as_ref())?;
            print!("{}", emit::table(cli.format, *what, lambda.as_ref(), &table));
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit { identity, n_max, lambda, binomial, expect_mismatch } => {
            let ids = parse_ids(identity)?;
            let expected = if expect_mismatch.trim().is_empty() { Vec::new() } else { parse_ids(expect_mismatch)? };
            let lambdas = parse_lambdas(lambda.as_deref())?;
            let conventions = parse_conventions(binomial)?;
            let doc = run_audit(&ids, *n_max, lambdas, &conventions)?;
            print!("{}", emit::audit(cli.format, &doc));
            let failed = doc.reports.iter().any(|r| !r.is_match() && !expected.iter().any(|id| *id == r.identity));
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Diff { a, b, from, n_max, lambda, binomial } => {
            let (reports_a, reports_b) = match from {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let doc = AuditDocument::from_json(&text)?;
                    let pick = |id: &str| -> Vec<VerificationReport> {
                        doc.reports.iter().filter(|r| r.identity == id).cloned().collect()
                    };
                    (pick(a), pick(b))
                }
                None => {
                    let lambdas = parse_lambdas(lambda.as_deref())?;
                    let conventions = parse_conventions(binomial)?;
                    let eval = |id: &str| audit::audit_range(&[id], *n_max, &lambdas, &conventions);
                    (eval(a)?, eval(b)?)
                }
            };
            if reports_a.is_empty() || reports_b.is_empty() {
                return Err(Usage("no reports for one of the identities".into()));
            }
            let diff = audit::diff_report(&reports_a, &reports_b)?;
            print!("{}", emit::diff(cli.format, &diff));
            Ok(if diff.divergences().next().is_some() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}

fn parse_lambda(text: &str) -> Result<Rational, Usage> {
    let value = rational::parse_rational(text)?;
    if value == rational::int(1) {
        return Err(Usage("lambda must differ from 1".into()));
    }
    Ok(value)
}

fn parse_lambdas(text: Option<&str>) -> Result<Vec<Rational>, Usage> {
    match text {
        None => Ok(audit::default_lambdas()),
        Some(text) => {
            let values = text.split(',').map(parse_lambda).collect::<Result<Vec<_>, _>>()?;
            Ok(values)
        }
    }
}

fn parse_ids(text: &str) -> Result<Vec<&'static str>, Usage> {
    if text.trim() == "all" {
        return Ok(audit::ids().collect());
    }
    text.split(',')
        .map(|id| {
            audit::lookup(id.trim()).map(|d| d.id).ok_or_else(|| Usage(format!("unknown identity `{}`", id.trim())))
        })
        .collect()
}

fn parse_conventions(text: &str) -> Result<Vec<BinomialConvention>, Usage> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let conv = BinomialConvention::parse(part)
            .ok_or_else(|| Usage(format!("unknown binomial convention `{}`", part.trim())))?;
        if !out.contains(&conv) {
            out.push(conv);
        }
    }
    Ok(out)
}

fn family_tag(family: Family, lambda: Option<Rational>) -> Result<FamilyTag, Usage> {
    if family != Family::FrobeniusEuler && lambda.is_some() {
        return Err(Usage("--lambda only applies to the frobenius-euler family".into()));
    }
    Ok(match family {
        Family::Monomial => FamilyTag::Monomial,
        Family::Laguerre => FamilyTag::Laguerre,
        Family::Bernoulli => FamilyTag::Bernoulli,
        Family::Euler => FamilyTag::Euler,
        Family::FallingFactorial => FamilyTag::FallingFactorial,
        Family::FrobeniusEuler => {
            let lambda = lambda.ok_or_else(|| Usage("frobenius-euler needs --lambda".into()))?;
            FamilyTag::frobenius_euler(lambda)?
        }
    })
}

fn expand(poly: &Polynomial, basis: BasisArg) -> Vec<Rational> {
    match basis {
        BasisArg::Monomial => poly.coeffs().to_vec(),
        BasisArg::Laguerre => families::laguerre_expand(poly).coeffs,
        BasisArg::FallingFactorial => families::falling_factorial_expand(poly).coeffs,
    }
}

fn table(what: TableKind, rows: usize, lambda: Option<&Rational>) -> Result<Vec<Vec<Rational>>, Usage> {
    if what != TableKind::FrobeniusNumbers && lambda.is_some() {
        return Err(Usage("--lambda only applies to frobenius-numbers".into()));
    }
    Ok(match what {
        TableKind::Stirling2 => (0..=rows).map(|n| (0..=n).map(|k| families::stirling2(n, k)).collect()).collect(),
        TableKind::BernoulliNumbers => vec![(0..=rows).map(families::bernoulli_number).collect()],
        TableKind::EulerNumbers => vec![(0..=rows).map(families::euler_number).collect()],
        TableKind::FrobeniusNumbers => {
            let lambda = lambda.ok_or_else(|| Usage("frobenius-numbers needs --lambda".into()))?;
            vec![(0..=rows).map(|k| families::frobenius_number(k, lambda)).collect::<Result<_, _>>()?]
        }
    })
}

fn run_audit(
    ids: &[&str],
    n_max: usize,
    lambdas: Vec<Rational>,
    conventions: &[BinomialConvention],
) -> Result<AuditDocument, Usage> {
    let reports = audit::audit_range(ids, n_max, &lambdas, conventions)?;
    let uses_lambda = ids.iter().any(|id| audit::lookup(id).is_some_and(|d| d.uses_lambda));
    let run = RunInfo {
        n_max,
        lambda: if uses_lambda { lambdas } else { Vec::new() },
        convention: conventions.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(","),
    };
    Ok(AuditDocument::new(run, reports))
}

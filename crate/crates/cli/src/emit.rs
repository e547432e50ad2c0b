//! Renderers for the four output formats. Rationals are always `p/q` strings.

use std::fmt::Write as _;

use serde_json::{json, Value};
use umbral_core::audit::{AuditDocument, Comparison, ReportDiff, VerificationReport};
use umbral_core::families::FamilyTag;
use umbral_core::rational::Rational;

use crate::{BasisArg, Format, TableKind};

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn json_doc(value: Value) -> String {
    let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
    out.push('\n');
    out
}

fn csv_doc(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

fn basis_name(basis: BasisArg) -> &'static str {
    match basis {
        BasisArg::Monomial => "monomial",
        BasisArg::Laguerre => "laguerre",
        BasisArg::FallingFactorial => "falling-factorial",
    }
}

pub fn expansion(
    format: Format,
    family: &FamilyTag,
    n: usize,
    basis: BasisArg,
    lambda: Option<&Rational>,
    coeffs: &[Rational],
) -> String {
    let indexed = || coeffs.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]);
    match format {
        Format::Json => {
            let mut doc = json!({
                "family": family.name(),
                "n": n,
                "basis": basis_name(basis),
                "coefficients": strings(coeffs),
            });
            if let Some(l) = lambda {
                doc["lambda"] = json!(l.to_string());
            }
            json_doc(doc)
        }
        Format::Csv => csv_doc(&["k", "coefficient"], indexed()),
        Format::Md => md_table(&["k", "coefficient"], indexed()),
        Format::Plain => format!("{}\n", strings(coeffs).join(" ")),
    }
}

fn table_name(what: TableKind) -> &'static str {
    match what {
        TableKind::Stirling2 => "stirling2",
        TableKind::BernoulliNumbers => "bernoulli-numbers",
        TableKind::EulerNumbers => "euler-numbers",
        TableKind::FrobeniusNumbers => "frobenius-numbers",
    }
}

/// `rows` is the Stirling triangle, or a single row for number sequences.
pub fn table(format: Format, what: TableKind, lambda: Option<&Rational>, rows: &[Vec<Rational>]) -> String {
    let triangle = what == TableKind::Stirling2;
    let cells = || -> Vec<Vec<String>> {
        if triangle {
            rows.iter()
                .enumerate()
                .flat_map(|(n, row)| {
                    row.iter().enumerate().map(move |(k, v)| vec![n.to_string(), k.to_string(), v.to_string()])
                })
                .collect()
        } else {
            rows[0].iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect()
        }
    };
    let header: &[&str] = if triangle { &["n", "k", "value"] } else { &["n", "value"] };
    match format {
        Format::Json => {
            let mut doc = json!({ "table": table_name(what) });
            if triangle {
                doc["rows"] = json!(rows.iter().map(|r| strings(r)).collect::<Vec<_>>());
            } else {
                doc["values"] = json!(strings(&rows[0]));
            }
            if let Some(l) = lambda {
                doc["lambda"] = json!(l.to_string());
            }
            json_doc(doc)
        }
        Format::Csv => csv_doc(header, cells()),
        Format::Md => md_table(header, cells()),
        Format::Plain => {
            let mut out = String::new();
            for row in rows {
                let _ = writeln!(out, "{}", strings(row).join(" "));
            }
            out
        }
    }
}

/// Identity cell for CSV and tables: `id`, or `id@k=K` for k-parameterised rows.
fn identity_cell(r: &VerificationReport) -> String {
    match r.k {
        Some(k) => format!("{}@k={k}", r.identity),
        None => r.identity.clone(),
    }
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn report_row(r: &VerificationReport) -> Vec<String> {
    let fd = r.first_diff.as_ref();
    vec![
        identity_cell(r),
        r.n.to_string(),
        opt(r.lambda.as_ref()),
        opt(r.convention),
        r.status.to_string(),
        opt(fd.map(|d| d.index)),
        opt(fd.map(|d| &d.lhs)),
        opt(fd.map(|d| &d.rhs)),
    ]
}

pub const CSV_HEADER: [&str; 8] =
    ["identity", "n", "lambda", "convention", "status", "first_diff_index", "first_diff_lhs", "first_diff_rhs"];

pub fn audit(format: Format, doc: &AuditDocument) -> String {
    let matched = doc.reports.iter().filter(|r| r.is_match()).count();
    let summary = format!("{matched}/{} reports match", doc.reports.len());
    match format {
        Format::Json => {
            let mut out = doc.to_json();
            out.push('\n');
            out
        }
        Format::Csv => csv_doc(&CSV_HEADER, doc.reports.iter().map(report_row)),
        Format::Md => {
            let mut out = md_table(&CSV_HEADER, doc.reports.iter().map(report_row));
            if !doc.lambda_certified.is_empty() {
                out.push('\n');
                out.push_str(&md_table(
                    &["identity", "n", "convention", "lambdas", "certified"],
                    doc.lambda_certified.iter().map(|c| {
                        vec![
                            match c.k {
                                Some(k) => format!("{}@k={k}", c.identity),
                                None => c.identity.clone(),
                            },
                            c.n.to_string(),
                            opt(c.convention),
                            c.lambdas.to_string(),
                            c.certified.to_string(),
                        ]
                    }),
                ));
            }
            let _ = writeln!(out, "\n{summary}");
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &doc.reports {
                let _ = write!(out, "{} n={}", identity_cell(r), r.n);
                if let Some(l) = &r.lambda {
                    let _ = write!(out, " lambda={l}");
                }
                if let Some(c) = r.convention {
                    let _ = write!(out, " binomial={c}");
                }
                let _ = write!(out, ": {}", r.status);
                if let Some(d) = &r.first_diff {
                    let _ = write!(out, " ({} coefficient {}: {} vs {})", compared(r), d.index, d.lhs, d.rhs);
                }
                out.push('\n');
            }
            for c in doc.lambda_certified.iter().filter(|c| c.certified) {
                let _ = write!(out, "certified in lambda: {} n={}", c.identity, c.n);
                if let Some(k) = c.k {
                    let _ = write!(out, " k={k}");
                }
                if let Some(conv) = c.convention {
                    let _ = write!(out, " binomial={conv}");
                }
                let _ = writeln!(out, " ({} values)", c.lambdas);
            }
            let _ = writeln!(out, "{summary}");
            out
        }
    }
}

fn compared(r: &VerificationReport) -> &'static str {
    match r.basis {
        Comparison::Monomial => "monomial",
        Comparison::Laguerre => "laguerre",
        Comparison::Number => "value",
        Comparison::Vector => "entry",
    }
}

pub fn diff(format: Format, diff: &ReportDiff) -> String {
    let header = ["n", "k", "lambda", "convention", diff.identity_a.as_str(), diff.identity_b.as_str(), "diverges"];
    let rows = || {
        diff.rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                opt(r.k),
                opt(r.lambda.as_ref()),
                opt(r.convention_a.or(r.convention_b)),
                r.status_a.to_string(),
                r.status_b.to_string(),
                r.diverges().to_string(),
            ]
        })
    };
    match format {
        Format::Json => json_doc(json!({
            "a": diff.identity_a,
            "b": diff.identity_b,
            "rows": diff.rows.iter().map(|r| {
                let mut row = json!({
                    "n": r.n,
                    "status_a": r.status_a.as_str(),
                    "status_b": r.status_b.as_str(),
                    "diverges": r.diverges(),
                });
                if let Some(k) = r.k {
                    row["k"] = json!(k);
                }
                if let Some(l) = &r.lambda {
                    row["lambda"] = json!(l.to_string());
                }
                if let Some(c) = r.convention_a.or(r.convention_b) {
                    row["convention"] = json!(c.as_str());
                }
                row
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_doc(&header, rows()),
        Format::Md => md_table(&header, rows()),
        Format::Plain => {
            let mut out = String::new();
            for row in rows() {
                let _ = writeln!(out, "{}", row.join(" "));
            }
            let _ = writeln!(
                out,
                "{} of {} points diverge between {} and {}",
                diff.divergences().count(),
                diff.rows.len(),
                diff.identity_a,
                diff.identity_b
            );
            out
        }
    }
}

//! Verification reports, their JSON document form, and report diffs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::BinomialConvention;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What the `lhs`/`rhs` vectors of a report hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// Monomial coefficients.
    Monomial,
    /// Laguerre coefficients; the left side went through the oracle.
    Laguerre,
    /// A single number.
    Number,
    /// An arbitrary vector of values.
    Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstDiff {
    pub index: usize,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

/// Outcome of evaluating one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "rational::serde_str::option")]
    pub lambda: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<BinomialConvention>,
    pub status: Status,
    pub basis: Comparison,
    #[serde(with = "rational::serde_str::vec")]
    pub lhs: Vec<Rational>,
    #[serde(with = "rational::serde_str::vec")]
    pub rhs: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_diff: Option<FirstDiff>,
}

impl VerificationReport {
    /// Builds a report from two equal-length vectors, deriving status and
    /// first difference.
    pub(crate) fn compare(
        identity: &str,
        params: &super::Params,
        basis: Comparison,
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
    ) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        let first_diff = first_difference(&lhs, &rhs);
        VerificationReport {
            identity: identity.to_string(),
            n: params.n,
            k: params.k,
            lambda: params.lambda.clone(),
            convention: params.convention,
            status: if first_diff.is_none() { Status::Match } else { Status::Mismatch },
            basis,
            lhs,
            rhs,
            first_diff,
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }

    /// Checks the internal invariants: equal lengths, status agreeing with
    /// the vectors, and `first_diff` pointing at the first differing entry.
    pub fn validate(&self) -> Result<()> {
        if self.lhs.len() != self.rhs.len() {
            return Err(Error::Decode(format!("{}: lhs and rhs lengths differ", self.identity)));
        }
        if self.basis == Comparison::Number && self.lhs.len() != 1 {
            return Err(Error::Decode(format!("{}: number comparison needs one value", self.identity)));
        }
        let expected = first_difference(&self.lhs, &self.rhs);
        let status = if expected.is_none() { Status::Match } else { Status::Mismatch };
        if status != self.status || expected != self.first_diff {
            return Err(Error::Decode(format!(
                "{} at n={}: status or first_diff inconsistent with lhs/rhs",
                self.identity, self.n
            )));
        }
        if self.lambda.as_ref().is_some_and(|l| *l == Rational::from_integer(1.into())) {
            return Err(Error::Decode(format!("{}: lambda = 1", self.identity)));
        }
        Ok(())
    }
}

fn first_difference(lhs: &[Rational], rhs: &[Rational]) -> Option<FirstDiff> {
    lhs.iter().zip(rhs).position(|(a, b)| a != b).map(|index| FirstDiff {
        index,
        lhs: lhs[index].clone(),
        rhs: rhs[index].clone(),
    })
}

/// `(identity, n, k, convention)` point that matched at enough distinct
/// lambda values to hold identically in lambda.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaCertification {
    pub identity: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<BinomialConvention>,
    /// Number of distinct lambda values evaluated.
    pub lambdas: usize,
    pub all_match: bool,
    /// `all_match` and `lambdas >= n + 1`.
    pub certified: bool,
}

/// Groups lambda-parameterised reports by everything except lambda.
///
/// Both sides of each registered lambda identity are polynomials of degree at
/// most `n` in `1/(lambda - 1)`, so agreement at `n + 1` distinct lambdas
/// proves the identity for all `lambda != 1`.
pub fn lambda_certifications(reports: &[VerificationReport]) -> Vec<LambdaCertification> {
    let mut out: Vec<LambdaCertification> = Vec::new();
    let mut seen: Vec<Vec<&Rational>> = Vec::new();
    for r in reports {
        let Some(lambda) = &r.lambda else { continue };
        let slot = out
            .iter()
            .position(|c| c.identity == r.identity && c.n == r.n && c.k == r.k && c.convention == r.convention);
        let slot = slot.unwrap_or_else(|| {
            out.push(LambdaCertification {
                identity: r.identity.clone(),
                n: r.n,
                k: r.k,
                convention: r.convention,
                lambdas: 0,
                all_match: true,
                certified: false,
            });
            seen.push(Vec::new());
            out.len() - 1
        });
        if !seen[slot].contains(&lambda) {
            seen[slot].push(lambda);
        }
        out[slot].all_match &= r.is_match();
    }
    for (cert, lambdas) in out.iter_mut().zip(&seen) {
        cert.lambdas = lambdas.len();
        cert.certified = cert.all_match && cert.lambdas > cert.n;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub n_max: usize,
    #[serde(with = "rational::serde_str::vec")]
    pub lambda: Vec<Rational>,
    pub convention: String,
}

/// The JSON document emitted by an audit run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditDocument {
    pub run: RunInfo,
    pub reports: Vec<VerificationReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda_certified: Vec<LambdaCertification>,
}

impl AuditDocument {
    pub fn new(run: RunInfo, reports: Vec<VerificationReport>) -> Self {
        let lambda_certified = lambda_certifications(&reports);
        AuditDocument { run, reports, lambda_certified }
    }

    pub fn all_match(&self) -> bool {
        self.reports.iter().all(VerificationReport::is_match)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }

    /// Parses and validates a document produced by [`AuditDocument::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AuditDocument = serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
        for report in &doc.reports {
            report.validate()?;
        }
        Ok(doc)
    }
}

/// One row of a [`diff_report`] comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffRow {
    pub n: usize,
    pub k: Option<usize>,
    pub lambda: Option<Rational>,
    pub convention_a: Option<BinomialConvention>,
    pub convention_b: Option<BinomialConvention>,
    pub status_a: Status,
    pub status_b: Status,
    pub first_diff_a: Option<FirstDiff>,
    pub first_diff_b: Option<FirstDiff>,
}

impl DiffRow {
    pub fn diverges(&self) -> bool {
        self.status_a != self.status_b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDiff {
    pub identity_a: String,
    pub identity_b: String,
    pub rows: Vec<DiffRow>,
}

impl ReportDiff {
    pub fn divergences(&self) -> impl Iterator<Item = &DiffRow> {
        self.rows.iter().filter(|r| r.diverges())
    }
}

type DiffKey = (usize, Option<usize>, Option<Rational>);

fn key(r: &VerificationReport) -> DiffKey {
    (r.n, r.k, r.lambda.clone())
}

/// Pairs two report sets point by point (same `n`, `k`, `lambda`).
///
/// When both sides carry a binomial convention, rows pair by convention too;
/// otherwise each report of one side pairs with every report of the other at
/// the same point.
pub fn diff_report(a: &[VerificationReport], b: &[VerificationReport]) -> Result<ReportDiff> {
    let keys = |set: &[VerificationReport]| set.iter().map(key).collect::<std::collections::BTreeSet<_>>();
    let (keys_a, keys_b) = (keys(a), keys(b));
    if keys_a != keys_b {
        let missing: Vec<String> = keys_a
            .symmetric_difference(&keys_b)
            .map(|(n, k, l)| {
                let mut s = format!("n={n}");
                if let Some(k) = k {
                    s.push_str(&format!(" k={k}"));
                }
                if let Some(l) = l {
                    s.push_str(&format!(" lambda={l}"));
                }
                s
            })
            .collect();
        return Err(Error::CoverageMismatch(missing.join(", ")));
    }
    let mut rows = Vec::new();
    for ra in a {
        for rb in b.iter().filter(|rb| key(rb) == key(ra)) {
            if let (Some(ca), Some(cb)) = (ra.convention, rb.convention) {
                if ca != cb {
                    continue;
                }
            }
            rows.push(DiffRow {
                n: ra.n,
                k: ra.k,
                lambda: ra.lambda.clone(),
                convention_a: ra.convention,
                convention_b: rb.convention,
                status_a: ra.status,
                status_b: rb.status,
                first_diff_a: ra.first_diff.clone(),
                first_diff_b: rb.first_diff.clone(),
            });
        }
    }
    let name = |set: &[VerificationReport]| set.first().map(|r| r.identity.clone()).unwrap_or_default();
    Ok(ReportDiff { identity_a: name(a), identity_b: name(b), rows })
}

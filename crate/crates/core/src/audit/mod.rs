//! Identity auditing.
//!
//! Each registered identity has a left and a right [`Side`]. Evaluation
//! brings both sides into a common basis and compares them exactly:
//!
//! * polynomial vs polynomial: monomial coefficients;
//! * polynomial vs Laguerre coefficients: the polynomial is expanded with
//!   [`families::laguerre_expand`], so the left side is always the oracle;
//! * number vs number and vector vs vector: entrywise.

mod registry;
mod report;

use num_traits::{One, Zero};
use rayon::prelude::*;

pub use registry::{
    find_laguerre_pair, ids, laguerre_pair_candidates, lookup, IdentityDescriptor, Params, Side, REGISTRY,
};
pub use report::{
    diff_report, lambda_certifications, AuditDocument, Comparison, DiffRow, FirstDiff, LambdaCertification, ReportDiff,
    RunInfo, Status, VerificationReport,
};

use crate::error::{Error, Result};
use crate::families::{self, BinomialConvention};
use crate::rational::{self, Rational};

/// Thirteen distinct lambda values, enough to certify lambda identities
/// through `n = 12`.
pub fn default_lambdas() -> Vec<Rational> {
    [(-1, 1), (2, 1), (1, 2), (5, 3), (3, 1), (7, 2), (9, 1), (-2, 1), (1, 3), (4, 1), (-1, 2), (5, 1), (11, 7)]
        .into_iter()
        .map(|(p, q)| rational::frac(p, q))
        .collect()
}

fn bad_params(id: &str, reason: impl Into<String>) -> Error {
    Error::BadParams { id: id.to_string(), reason: reason.into() }
}

fn validate(desc: &IdentityDescriptor, params: &Params) -> Result<()> {
    let id = desc.id;
    match (desc.uses_k, params.k) {
        (true, None) => return Err(bad_params(id, "k is required")),
        (false, Some(_)) => return Err(bad_params(id, "k is not a parameter")),
        (true, Some(k)) if k > params.n => return Err(bad_params(id, "k must not exceed n")),
        _ => {}
    }
    match (desc.uses_lambda, &params.lambda) {
        (true, None) => return Err(bad_params(id, "lambda is required")),
        (false, Some(_)) => return Err(bad_params(id, "lambda is not a parameter")),
        (true, Some(l)) if l.is_one() => return Err(bad_params(id, "lambda must differ from 1")),
        _ => {}
    }
    match (desc.uses_convention, params.convention) {
        (true, None) => Err(bad_params(id, "binomial convention is required")),
        (false, Some(_)) => Err(bad_params(id, "binomial convention is not a parameter")),
        _ => Ok(()),
    }
}

fn padded(mut v: Vec<Rational>, len: usize) -> Vec<Rational> {
    v.resize(len, Rational::zero());
    v
}

/// Evaluates one identity at one parameter point.
pub fn evaluate_identity(id: &str, params: &Params) -> Result<VerificationReport> {
    let desc = lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    validate(desc, params)?;
    let lhs = (desc.lhs)(params)?;
    let rhs = (desc.rhs)(params)?;
    let (basis, lhs, rhs) = match (lhs, rhs) {
        (Side::Polynomial(l), Side::Polynomial(r)) => {
            let len = l.coeffs().len().max(r.coeffs().len()).max(1);
            (Comparison::Monomial, l.padded(len), r.padded(len))
        }
        (Side::Polynomial(l), Side::Laguerre(r)) => {
            let l = families::laguerre_expand(&l).coeffs;
            let len = l.len().max(r.len()).max(1);
            (Comparison::Laguerre, padded(l, len), padded(r, len))
        }
        (Side::Number(l), Side::Number(r)) => (Comparison::Number, vec![l], vec![r]),
        (Side::Vector(l), Side::Vector(r)) if l.len() == r.len() => (Comparison::Vector, l, r),
        _ => return Err(bad_params(id, "registered sides are not comparable")),
    };
    Ok(VerificationReport::compare(id, params, basis, lhs, rhs))
}

/// Parameter points for `id` in the documented order: `n`, then `k`, then
/// lambda in input order, then convention in input order.
fn parameter_points(
    desc: &IdentityDescriptor,
    n_max: usize,
    lambdas: &[Rational],
    conventions: &[BinomialConvention],
) -> Result<Vec<Params>> {
    if desc.uses_lambda && lambdas.is_empty() {
        return Err(bad_params(desc.id, "at least one lambda value is required"));
    }
    if desc.uses_convention && conventions.is_empty() {
        return Err(bad_params(desc.id, "at least one binomial convention is required"));
    }
    let lambda_axis: Vec<Option<Rational>> =
        if desc.uses_lambda { lambdas.iter().cloned().map(Some).collect() } else { vec![None] };
    let convention_axis: Vec<Option<BinomialConvention>> =
        if desc.uses_convention { conventions.iter().copied().map(Some).collect() } else { vec![None] };
    let mut points = Vec::new();
    for n in 0..=n_max {
        let k_axis: Vec<Option<usize>> = if desc.uses_k { (0..=n).map(Some).collect() } else { vec![None] };
        for k in &k_axis {
            for lambda in &lambda_axis {
                for convention in &convention_axis {
                    points.push(Params { n, k: *k, lambda: lambda.clone(), convention: *convention });
                }
            }
        }
    }
    Ok(points)
}

/// Evaluates every identity in `ids` over `0..=n_max` and the given lambda
/// and convention sets. Evaluation is parallel; the result order is
/// `(id in input order, n, k, lambda in input order, convention)`.
pub fn audit_range(
    ids: &[&str],
    n_max: usize,
    lambdas: &[Rational],
    conventions: &[BinomialConvention],
) -> Result<Vec<VerificationReport>> {
    if lambdas.iter().any(One::is_one) {
        return Err(Error::LambdaIsOne);
    }
    let mut tasks = Vec::new();
    for id in ids {
        let desc = lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        for params in parameter_points(desc, n_max, lambdas, conventions)? {
            tasks.push((desc.id, params));
        }
    }
    tasks.par_iter().map(|(id, params)| evaluate_identity(id, params)).collect()
}

//! Every registered identity, with one builder per side.
//!
//! Builders transcribe each printed formula as stated, including forms that
//! turn out not to hold. Nothing here decides truth; [`super::evaluate_identity`]
//! compares the two sides exactly.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{self, BinomialConvention};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::series::PowerSeries;
use crate::umbral::{self, ShefferPair};

/// Parameters of a single evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params {
    pub n: usize,
    pub k: Option<usize>,
    pub lambda: Option<Rational>,
    pub convention: Option<BinomialConvention>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n, ..Params::default() }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_lambda(mut self, lambda: Rational) -> Self {
        self.lambda = Some(lambda);
        self
    }

    pub fn with_convention(mut self, convention: BinomialConvention) -> Self {
        self.convention = Some(convention);
        self
    }

    // Accessors used by builders; `evaluate_identity` validates presence first.
    fn k(&self) -> usize {
        self.k.expect("validated")
    }

    fn lambda(&self) -> &Rational {
        self.lambda.as_ref().expect("validated")
    }

    fn convention(&self) -> BinomialConvention {
        self.convention.expect("validated")
    }
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    /// A polynomial in the monomial basis.
    Polynomial(Polynomial),
    /// Coefficients with respect to `L_0, L_1, ...`.
    Laguerre(Vec<Rational>),
    Number(Rational),
    /// A plain vector of values, compared entrywise.
    Vector(Vec<Rational>),
}

pub type Builder = fn(&Params) -> Result<Side>;

/// Static description of a registered identity.
#[derive(Debug, Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    pub uses_k: bool,
    pub uses_lambda: bool,
    pub uses_convention: bool,
    pub lhs: Builder,
    pub rhs: Builder,
}

const fn plain(id: &'static str, summary: &'static str, lhs: Builder, rhs: Builder) -> IdentityDescriptor {
    IdentityDescriptor { id, summary, uses_k: false, uses_lambda: false, uses_convention: false, lhs, rhs }
}

const fn with_k(mut d: IdentityDescriptor) -> IdentityDescriptor {
    d.uses_k = true;
    d
}

const fn with_lambda(mut d: IdentityDescriptor) -> IdentityDescriptor {
    d.uses_lambda = true;
    d
}

const fn with_convention(mut d: IdentityDescriptor) -> IdentityDescriptor {
    d.uses_convention = true;
    d
}

/// Registry order is the default audit order.
pub static REGISTRY: &[IdentityDescriptor] = &[
    plain("eq9-ode", "x L_n'' + (1 - x) L_n' + n L_n = 0", ode_residual, zero_poly),
    plain("eq10-rodrigues", "Rodrigues formula reproduces L_n", rodrigues, laguerre_n),
    plain("eq11-orth", "row n of the Gram matrix of L_0..L_n is e_n", gram_row, unit_row),
    plain("eq26", "x^n = n! sum_k (-1)^k C(n,k) L_k", monomial_n, monomial_laguerre_coeffs),
    plain("eq28", "sum_k S(n,k) (x)_k = x^n", stirling_expansion, monomial_n),
    plain("eq19-lowering", "f(t) s_n = n s_{n-1} for s_n = n! L_n", lowering_lhs, lowering_rhs),
    plain("eq30-laguerre-pair", "<g f^k | n! L_n> = n! delta for (1-t, t/(1-t))", pair_eq30, factorial_unit_row),
    plain("eq63-laguerre-pair", "<g f^k | n! L_n> = n! delta for (1-t, t/(t-1))", pair_eq63, factorial_unit_row),
    plain(
        "laguerre-pair-scaled",
        "<g f^k | n! L_n> = n! delta for (1/(1-t), t/(t-1))",
        pair_scaled,
        factorial_unit_row,
    ),
    plain("eq33-umbral", "(n! L_n o k! L_k)(x) = x^n", umbral_normalized, monomial_n),
    plain("eq39", "E_n = sum_j (-1/2)^j j! S(n,j)", euler_number_gf, euler_number_stirling),
    plain("eq48", "B_n = sum_j sum_l (-1)^l C(j,l) S(n+l,l)/C(n+l,l)", bernoulli_number_gf, bernoulli_number_stirling),
    with_lambda(plain(
        "eq57",
        "H_n(lambda) = sum_j j! S(n,j)/(lambda-1)^j",
        frobenius_number_gf,
        frobenius_number_stirling,
    )),
    with_k(plain("thm1", "L_k = (-1)^k S(n,k) (x)_k / (n! C(n,k))", thm1_lhs, thm1_rhs)),
    plain("thm2-literal", "(L_n o L)(x)/n! = sum_k (-1)^k C(n,k) L_k", thm2_literal, thm2_rhs),
    plain("thm2-normalized", "(n! L_n o k! L_k)(x)/n! = sum_k (-1)^k C(n,k) L_k", thm2_normalized, thm2_rhs),
    plain("thm3-printed", "E_n(x) Laguerre coefficients, printed triple sum", euler_n, thm3_printed),
    plain("thm3-eq35", "E_n(x) Laguerre coefficients, E numbers from the Stirling form", euler_n, thm3_eq35),
    plain("thm4", "B_n(x) Laguerre coefficients, printed quadruple sum", bernoulli_n, thm4_printed),
    with_lambda(plain("thm5", "H_n(x|lambda) Laguerre coefficients, printed triple sum", frobenius_n, thm5_printed)),
    with_convention(plain("thm6-printed", "E_n(x) Laguerre coefficients via C(k-l-2, l)", euler_n, thm6_printed)),
    plain("thm6-eq35", "E_n(x) Laguerre coefficients via C(k+l, l) and E numbers", euler_n, thm6_eq35),
    with_convention(with_k(plain(
        "cor-post-thm6",
        "sum_l C(k-l-2,l) E_{n-k-l}/(k!(n-k-l)!) equals the Stirling double sum",
        corollary_lhs,
        corollary_rhs,
    ))),
    with_convention(plain("thm7-printed", "B_n(x) Laguerre coefficients via C(k-l-2, l)", bernoulli_n, thm7_printed)),
    plain("thm7-eq50", "B_n(x) Laguerre coefficients via C(k+l, l) and B numbers", bernoulli_n, thm7_eq50),
    with_convention(with_lambda(plain(
        "hfinal-printed",
        "H_n(x|lambda) Laguerre coefficients via C(k-l-2, l)",
        frobenius_n,
        hfinal_printed,
    ))),
    with_lambda(plain(
        "hfinal-eq59",
        "H_n(x|lambda) Laguerre coefficients via C(k+l, l) and H numbers",
        frobenius_n,
        hfinal_eq59,
    )),
];

pub fn lookup(id: &str) -> Option<&'static IdentityDescriptor> {
    REGISTRY.iter().find(|d| d.id == id)
}

pub fn ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|d| d.id)
}

fn fact(n: usize) -> Rational {
    rational::factorial_q(n)
}

fn binom(n: usize, k: usize) -> Rational {
    rational::binomial_q(n, k)
}

fn unit(len: usize, at: usize, value: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[at] = value;
    v
}

fn zero_poly(_: &Params) -> Result<Side> {
    Ok(Side::Polynomial(Polynomial::zero()))
}

fn monomial_n(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(Polynomial::monomial(p.n)))
}

fn laguerre_n(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::laguerre(p.n)))
}

fn euler_n(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::euler(p.n)))
}

fn bernoulli_n(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::bernoulli(p.n)))
}

fn frobenius_n(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::frobenius_euler(p.n, p.lambda())?))
}

fn ode_residual(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::laguerre_ode_residual(p.n)))
}

fn rodrigues(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::laguerre_rodrigues(p.n)))
}

fn gram_row(p: &Params) -> Result<Side> {
    let ln = families::laguerre(p.n);
    Ok(Side::Vector((0..=p.n).map(|m| families::laguerre_inner_product(&ln, &families::laguerre(m))).collect()))
}

fn unit_row(p: &Params) -> Result<Side> {
    Ok(Side::Vector(unit(p.n + 1, p.n, Rational::one())))
}

fn factorial_unit_row(p: &Params) -> Result<Side> {
    Ok(Side::Vector(unit(p.n + 1, p.n, fact(p.n))))
}

fn monomial_laguerre_coeffs(p: &Params) -> Result<Side> {
    Ok(Side::Laguerre(families::monomial_to_laguerre(p.n).coeffs))
}

fn stirling_expansion(p: &Params) -> Result<Side> {
    let coeffs: Vec<_> = (0..=p.n).map(|k| families::stirling2(p.n, k)).collect();
    Ok(Side::Polynomial(families::falling_factorial_combination(&coeffs)))
}

/// `-t - t^2 - ...` or `t + t^2 + ...`.
fn all_ones_after_constant(sign: i64, precision: usize) -> PowerSeries {
    PowerSeries::from_fn(precision, |k| if k == 0 { Rational::zero() } else { rational::int(sign) })
}

fn one_minus_t(precision: usize) -> PowerSeries {
    PowerSeries::from_ints(&[1, -1], precision)
}

/// The three candidate Laguerre pairs: `(1 - t, t/(1 - t))`,
/// `(1 - t, t/(t - 1))` and `(1/(1 - t), t/(t - 1))`.
pub fn laguerre_pair_candidates(precision: usize) -> [(&'static str, ShefferPair); 3] {
    let precision = precision.max(1);
    let pair = |g, f| ShefferPair::new(g, f).expect("valid pair");
    [
        ("eq30-laguerre-pair", pair(one_minus_t(precision), all_ones_after_constant(1, precision))),
        ("eq63-laguerre-pair", pair(one_minus_t(precision), all_ones_after_constant(-1, precision))),
        ("laguerre-pair-scaled", families::laguerre_scaled_pair(precision)),
    ]
}

/// The first candidate pair whose Sheffer sequence through degree `n` is
/// `k! L_k`, decided by [`umbral::sheffer_check`].
pub fn find_laguerre_pair(n: usize) -> Result<Option<ShefferPair>> {
    let seq: Vec<_> = (0..=n).map(families::laguerre_scaled).collect();
    for (_, pair) in laguerre_pair_candidates(n) {
        if umbral::sheffer_check(&pair, &seq)?.holds() {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

fn orthogonality_row(pair: &ShefferPair, n: usize) -> Result<Side> {
    let s = families::laguerre_scaled(n);
    let mut row = Vec::with_capacity(n + 1);
    let mut current = pair.g().clone();
    for _ in 0..=n {
        row.push(umbral::functional_apply(&current, &s)?);
        current = current.multiply(pair.f());
    }
    Ok(Side::Vector(row))
}

fn candidate_row(index: usize, p: &Params) -> Result<Side> {
    let candidates = laguerre_pair_candidates(p.n);
    orthogonality_row(&candidates[index].1, p.n)
}

fn pair_eq30(p: &Params) -> Result<Side> {
    candidate_row(0, p)
}

fn pair_eq63(p: &Params) -> Result<Side> {
    candidate_row(1, p)
}

fn pair_scaled(p: &Params) -> Result<Side> {
    candidate_row(2, p)
}

fn lowering_lhs(p: &Params) -> Result<Side> {
    let pair = find_laguerre_pair(p.n)?.ok_or_else(|| Error::BadParams {
        id: "eq19-lowering".into(),
        reason: "no candidate pair generates n! L_n".into(),
    })?;
    Ok(Side::Polynomial(umbral::operator_apply(pair.f(), &families::laguerre_scaled(p.n))?))
}

fn lowering_rhs(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(match p.n {
        0 => Polynomial::zero(),
        n => families::laguerre_scaled(n - 1).scale(&rational::int(n as i64)),
    }))
}

fn umbral_normalized(p: &Params) -> Result<Side> {
    let basis: Vec<_> = (0..=p.n).map(families::laguerre_scaled).collect();
    Ok(Side::Polynomial(umbral::umbral_compose(&families::laguerre_scaled(p.n), &basis)?))
}

fn euler_number_gf(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::euler_number(p.n)))
}

fn euler_number_stirling(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::euler_number_closed_form(p.n)))
}

fn bernoulli_number_gf(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::bernoulli_number(p.n)))
}

fn bernoulli_number_stirling(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::bernoulli_number_closed_form(p.n)))
}

fn frobenius_number_gf(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::frobenius_number(p.n, p.lambda())?))
}

fn frobenius_number_stirling(p: &Params) -> Result<Side> {
    Ok(Side::Number(families::frobenius_number_closed_form(p.n, p.lambda())?))
}

fn thm1_lhs(p: &Params) -> Result<Side> {
    Ok(Side::Polynomial(families::laguerre(p.k())))
}

fn thm1_rhs(p: &Params) -> Result<Side> {
    let (n, k) = (p.n, p.k());
    let scale = rational::sign(k) * families::stirling2(n, k) / (fact(n) * binom(n, k));
    Ok(Side::Polynomial(families::falling_factorial(k).scale(&scale)))
}

fn thm2_rhs(p: &Params) -> Result<Side> {
    Ok(Side::Laguerre((0..=p.n).map(|k| rational::sign(k) * binom(p.n, k)).collect()))
}

fn thm2_literal(p: &Params) -> Result<Side> {
    let basis: Vec<_> = (0..=p.n).map(families::laguerre).collect();
    let composed = umbral::umbral_compose(&families::laguerre(p.n), &basis)?;
    Ok(Side::Polynomial(composed.scale(&fact(p.n).recip())))
}

fn thm2_normalized(p: &Params) -> Result<Side> {
    let Side::Polynomial(composed) = umbral_normalized(p)? else { unreachable!() };
    Ok(Side::Polynomial(composed.scale(&fact(p.n).recip())))
}

/// `n! * sum_{k=0}^n coefficient(k)` laid out as a Laguerre coefficient vector.
fn laguerre_coeffs(n: usize, coefficient: impl Fn(usize) -> Result<Rational>) -> Result<Side> {
    let n_fact = fact(n);
    let coeffs = (0..=n).map(|k| Ok(&n_fact * coefficient(k)?)).collect::<Result<_>>()?;
    Ok(Side::Laguerre(coeffs))
}

fn thm3_printed(p: &Params) -> Result<Side> {
    let n = p.n;
    laguerre_coeffs(n, |k| {
        let mut acc = Rational::zero();
        for l in 0..=n - k {
            let m = n - k - l;
            for j in 0..=m {
                acc += rational::sign(k + l) * binom(k + l, l) * fact(j) * families::stirling2(m, j)
                    / (rational::pow(&rational::int(2), j as i64) * fact(m));
            }
        }
        Ok(acc)
    })
}

/// `n! sum_l (-1)^k C(k+l, l) a_{n-k-l} / (n-k-l)!` for an Appell number sequence `a`.
fn appell_laguerre_coeffs(n: usize, number: impl Fn(usize) -> Result<Rational>) -> Result<Side> {
    let numbers = (0..=n).map(&number).collect::<Result<Vec<_>>>()?;
    laguerre_coeffs(n, |k| {
        Ok((0..=n - k).map(|l| rational::sign(k) * binom(k + l, l) * &numbers[n - k - l] / fact(n - k - l)).sum())
    })
}

fn thm3_eq35(p: &Params) -> Result<Side> {
    appell_laguerre_coeffs(p.n, |m| Ok(families::euler_number_closed_form(m)))
}

fn thm6_eq35(p: &Params) -> Result<Side> {
    appell_laguerre_coeffs(p.n, |m| Ok(families::euler_number(m)))
}

fn thm7_eq50(p: &Params) -> Result<Side> {
    appell_laguerre_coeffs(p.n, |m| Ok(families::bernoulli_number(m)))
}

fn hfinal_eq59(p: &Params) -> Result<Side> {
    appell_laguerre_coeffs(p.n, |m| families::frobenius_number(m, p.lambda()))
}

fn thm4_printed(p: &Params) -> Result<Side> {
    let n = p.n;
    laguerre_coeffs(n, |k| {
        let mut acc = Rational::zero();
        for l in 0..=n - k {
            let r = n - k - l;
            for j in 0..=r {
                for m in 0..=j {
                    acc += rational::sign(m + k) * binom(j, m) * families::stirling2(r + m, m)
                        / (fact(r) * binom(r + m, m));
                }
            }
        }
        Ok(acc)
    })
}

fn thm5_printed(p: &Params) -> Result<Side> {
    let n = p.n;
    let base = p.lambda() - Rational::one();
    laguerre_coeffs(n, |k| {
        let mut acc = Rational::zero();
        for l in 0..=n - k {
            let r = n - k - l;
            for j in 0..=r {
                acc += binom(k + l, l) * rational::sign(k) * fact(j) * families::stirling2(r, j)
                    / (fact(r) * rational::pow(&base, j as i64));
            }
        }
        Ok(acc)
    })
}

/// `n! sum_l C(k-l-2, l) (-1)^k a_{n-k-l} / (k! (n-k-l)!)` under the chosen
/// binomial convention.
fn shifted_binomial_coeffs(p: &Params, number: impl Fn(usize) -> Result<Rational>) -> Result<Side> {
    let n = p.n;
    let conv = p.convention();
    let numbers = (0..=n).map(&number).collect::<Result<Vec<_>>>()?;
    laguerre_coeffs(n, |k| {
        Ok((0..=n - k)
            .map(|l| {
                conv.binomial(k as i64 - l as i64 - 2, l) * rational::sign(k) * &numbers[n - k - l]
                    / (fact(k) * fact(n - k - l))
            })
            .sum())
    })
}

fn thm6_printed(p: &Params) -> Result<Side> {
    shifted_binomial_coeffs(p, |m| Ok(families::euler_number(m)))
}

fn thm7_printed(p: &Params) -> Result<Side> {
    shifted_binomial_coeffs(p, |m| Ok(families::bernoulli_number(m)))
}

fn hfinal_printed(p: &Params) -> Result<Side> {
    shifted_binomial_coeffs(p, |m| families::frobenius_number(m, p.lambda()))
}

fn corollary_lhs(p: &Params) -> Result<Side> {
    let (n, k, conv) = (p.n, p.k(), p.convention());
    Ok(Side::Number(
        (0..=n - k)
            .map(|l| {
                conv.binomial(k as i64 - l as i64 - 2, l) * families::euler_number(n - k - l)
                    / (fact(k) * fact(n - k - l))
            })
            .sum(),
    ))
}

fn corollary_rhs(p: &Params) -> Result<Side> {
    let (n, k) = (p.n, p.k());
    let mut acc = Rational::zero();
    for l in 0..=n - k {
        let r = n - k - l;
        for j in 0..=r {
            acc += rational::sign(l) * binom(k + l, l) * fact(j) * families::stirling2(r, j)
                / (rational::pow(&rational::int(2), j as i64) * fact(r));
        }
    }
    Ok(Side::Number(acc))
}

//! The umbral algebra: power series acting on polynomials.
//!
//! A series `f(t) = sum_k f_k t^k` acts as the linear functional
//! `<f | x^n> = n! f_n` and as the operator `f p = sum_k f_k p^{(k)}`.
//! Sheffer sequences are indexed in the `n!`-normalised convention,
//! `<g f^k | s_n> = n! delta(n, k)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::series::PowerSeries;

/// Basis in which a coefficient vector is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Monomial,
    Laguerre,
    /// `k! L_k(x)`.
    LaguerreScaled,
    FallingFactorial,
    /// The Sheffer sequence of some target pair.
    Sheffer,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Laguerre => "laguerre",
            Basis::LaguerreScaled => "laguerre-scaled",
            Basis::FallingFactorial => "falling-factorial",
            Basis::Sheffer => "sheffer",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Coefficients of a polynomial with respect to a basis sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coeffs: Vec<Rational>,
}

impl BasisExpansion {
    pub fn new(basis: Basis, coeffs: Vec<Rational>) -> Self {
        BasisExpansion { basis, coeffs }
    }

    /// `sum_k coeffs[k] * basis[k]`, given the basis polynomials.
    pub fn reconstruct(&self, basis: &[Polynomial]) -> Polynomial {
        Polynomial::combine(&self.coeffs, basis)
    }
}

/// `<f(t) | p(x)> = sum_n p_n n! f_n`.
pub fn functional_apply(f: &PowerSeries, p: &Polynomial) -> Result<Rational> {
    let Some(deg) = p.degree() else {
        return Ok(Rational::zero());
    };
    if f.precision() < deg {
        return Err(Error::InsufficientPrecision { required: deg, available: f.precision() });
    }
    let mut fact = Rational::one();
    let mut acc = Rational::zero();
    for (n, a) in p.coeffs().iter().enumerate() {
        if n > 0 {
            fact *= rational::int(n as i64);
        }
        if !a.is_zero() {
            acc += a * &fact * &f.coeffs()[n];
        }
    }
    Ok(acc)
}

/// `f(t) p(x) = sum_k f_k p^{(k)}(x)`, i.e. `t` acts as `d/dx`.
pub fn operator_apply(f: &PowerSeries, p: &Polynomial) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if f.precision() < deg {
        return Err(Error::InsufficientPrecision { required: deg, available: f.precision() });
    }
    let mut acc = Polynomial::zero();
    let mut derivative = p.clone();
    for fk in &f.coeffs()[..=deg] {
        if !fk.is_zero() {
            acc = &acc + &derivative.scale(fk);
        }
        derivative = derivative.derivative();
    }
    Ok(acc)
}

/// An invertible series `g` and a delta series `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShefferPair {
    g: PowerSeries,
    f: PowerSeries,
}

impl ShefferPair {
    pub fn new(g: PowerSeries, f: PowerSeries) -> Result<Self> {
        if !g.is_invertible() {
            return Err(Error::InvalidPair("g must have order 0"));
        }
        if !f.is_delta() {
            return Err(Error::InvalidPair("f must have order 1"));
        }
        Ok(ShefferPair { g, f })
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    pub fn precision(&self) -> usize {
        self.g.precision().min(self.f.precision())
    }

    /// `(1, t)`, whose sequence is `x^n`.
    pub fn monomial(precision: usize) -> Self {
        ShefferPair { g: PowerSeries::one(precision), f: PowerSeries::t(precision) }
    }

    /// Series `g f^k` for `k = 0..=k_max`.
    fn functionals(&self, k_max: usize) -> Vec<PowerSeries> {
        let mut out = Vec::with_capacity(k_max + 1);
        let mut current = self.g.clone();
        for _ in 0..=k_max {
            let next = current.multiply(&self.f);
            out.push(current);
            current = next;
        }
        out
    }

    fn require(&self, n: usize) -> Result<()> {
        if self.precision() < n {
            return Err(Error::InsufficientPrecision { required: n, available: self.precision() });
        }
        Ok(())
    }
}

/// `s_0 .. s_{n_max}` for the pair, by solving `<g f^k | s_n> = n! delta(n, k)`.
///
/// Writing `s_n = sum_j c_j x^j`, the system matrix `M[k][j] = <g f^k | x^j>`
/// vanishes for `j < k` because `g f^k` has order `k`, so each `s_n` comes
/// from one back substitution with diagonal `k! g_0 f_1^k`.
pub fn sheffer_polynomials(pair: &ShefferPair, n_max: usize) -> Result<Vec<Polynomial>> {
    pair.require(n_max)?;
    let functionals = pair.functionals(n_max);
    // m[k][j] for j >= k
    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
    for (k, series) in functionals.iter().enumerate() {
        let mut row = vec![Rational::zero(); n_max + 1];
        let mut fact = rational::factorial_q(k);
        for (j, cell) in row.iter_mut().enumerate().skip(k) {
            if j > k {
                fact *= rational::int(j as i64);
            }
            *cell = &series.coeffs()[j] * &fact;
        }
        m.push(row);
    }
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = rational::factorial_q(n) / &m[n][n];
        for k in (0..n).rev() {
            let mut acc = Rational::zero();
            for j in k + 1..=n {
                acc += &m[k][j] * &c[j];
            }
            c[k] = -acc / &m[k][k];
        }
        out.push(Polynomial::new(c));
    }
    Ok(out)
}

/// `s_0 .. s_{n_max}` read off `e^{y fbar(t)} / g(fbar(t)) = sum_k s_k(y) t^k / k!`.
///
/// Independent of the triangular solve; used to cross-check it.
pub fn sheffer_polynomials_by_generating_function(pair: &ShefferPair, n_max: usize) -> Result<Vec<Polynomial>> {
    pair.require(n_max)?;
    // f must keep its t coefficient even for n_max = 0.
    let prec = n_max.max(1);
    let g = pair.g.truncate(prec);
    let f = pair.f.truncate(prec);
    let fbar = f.reversion()?;
    let weight = PowerSeries::compose(&g, &fbar)?.invert()?;
    // weight * fbar^m for m = 0..=n_max
    let mut columns = Vec::with_capacity(n_max + 1);
    let mut current = weight;
    for _ in 0..=n_max {
        let next = current.multiply(&fbar);
        columns.push(current);
        current = next;
    }
    let mut out = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let k_fact = rational::factorial_q(k);
        let coeffs = (0..=k).map(|m| &columns[m].coeffs()[k] * &k_fact / rational::factorial_q(m)).collect();
        out.push(Polynomial::new(coeffs));
    }
    Ok(out)
}

/// Outcome of [`sheffer_check`]; `witness` holds the first `(n, k, value)`
/// with `<g f^k | s_n> != n! delta(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShefferCheck {
    pub witness: Option<(usize, usize, Rational)>,
}

impl ShefferCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks the orthogonality relations for every `n, k < seq.len()`,
/// scanning `n` in the outer loop and `k` in the inner loop.
pub fn sheffer_check(pair: &ShefferPair, seq: &[Polynomial]) -> Result<ShefferCheck> {
    if seq.is_empty() {
        return Ok(ShefferCheck { witness: None });
    }
    let top = seq.len() - 1;
    let max_degree = seq.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    pair.require(max_degree.max(top))?;
    let functionals = pair.functionals(top);
    for (n, s) in seq.iter().enumerate() {
        for (k, series) in functionals.iter().enumerate() {
            let value = functional_apply(series, s)?;
            let expected = if n == k { rational::factorial_q(n) } else { Rational::zero() };
            if value != expected {
                return Ok(ShefferCheck { witness: Some((n, k, value)) });
            }
        }
    }
    Ok(ShefferCheck { witness: None })
}

/// Coefficients `C_{n,k}` with `s_n = sum_k C_{n,k} r_k`, where
/// `s ~ source = (g, f)` and `r ~ target = (h, l)`:
/// `C_{n,k} = <h(fbar) / g(fbar) * l(fbar)^k | x^n> / k!`.
pub fn connection_coefficients(source: &ShefferPair, target: &ShefferPair, n: usize) -> Result<BasisExpansion> {
    source.require(n)?;
    target.require(n)?;
    // f must keep its t coefficient even for n = 0.
    let prec = n.max(1);
    let fbar = source.f.truncate(prec).reversion()?;
    let h = PowerSeries::compose(&target.g.truncate(prec), &fbar)?;
    let g = PowerSeries::compose(&source.g.truncate(prec), &fbar)?;
    let l = PowerSeries::compose(&target.f.truncate(prec), &fbar)?;
    let mut current = h.divide(&g)?;
    let x_n = Polynomial::monomial(n);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(functional_apply(&current, &x_n)? / rational::factorial_q(k));
        current = current.multiply(&l);
    }
    Ok(BasisExpansion::new(Basis::Sheffer, coeffs))
}

/// Umbral composition `(q o p)(x) = sum_k q_k p_k(x)` with `q_k` the monomial
/// coefficients of `q`.
pub fn umbral_compose(q: &Polynomial, p: &[Polynomial]) -> Result<Polynomial> {
    if let Some(deg) = q.degree() {
        if p.len() <= deg {
            return Err(Error::MissingBasisElement { index: deg, available: p.len() });
        }
    }
    Ok(Polynomial::combine(q.coeffs(), p))
}

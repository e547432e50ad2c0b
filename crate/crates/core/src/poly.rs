//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// Dense polynomial; `coeffs()[k]` is the coefficient of `x^k`.
///
/// The highest stored coefficient is always nonzero, so the zero polynomial
/// has no coefficients and [`Polynomial::degree`] returns `None` for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        Self::term(Rational::one(), n)
    }

    /// `c * x^n`.
    pub fn term(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// The linear polynomial `x + shift`.
    pub fn x_plus(shift: Rational) -> Self {
        Self::new(vec![shift, Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// Panics if the polynomial has more than `len` coefficients.
    pub fn padded(&self, len: usize) -> Vec<Rational> {
        assert!(self.coeffs.len() <= len, "polynomial does not fit in {len} coefficients");
        let mut out = self.coeffs.clone();
        out.resize(len, Rational::zero());
        out
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, a)| a * rational::int(k as i64)).collect())
    }

    /// `k`-th derivative.
    pub fn derivative_n(&self, k: usize) -> Self {
        if k >= self.coeffs.len() {
            return Self::zero();
        }
        // d^k/dx^k x^j = (j)_k x^(j-k)
        Self::new(
            self.coeffs.iter().enumerate().skip(k).map(|(j, a)| a * Rational::from_integer(falling(j, k))).collect(),
        )
    }

    /// Evaluates by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &Rational) -> Self {
        let linear = Self::x_plus(shift.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| &(&acc * &linear) + &Self::constant(a.clone()))
    }

    /// `p(alpha * x)`.
    pub fn dilate(&self, alpha: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= alpha;
        }
        Self::new(coeffs)
    }

    /// Multiplication by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Linear combination `sum_k weights[k] * basis[k]`.
    pub fn combine(weights: &[Rational], basis: &[Polynomial]) -> Self {
        assert!(weights.len() <= basis.len(), "not enough basis polynomials");
        weights.iter().zip(basis).filter(|(w, _)| !w.is_zero()).fold(Self::zero(), |acc, (w, b)| &acc + &b.scale(w))
    }
}

/// Falling factorial `(j)_k` on integers.
fn falling(j: usize, k: usize) -> num_bigint::BigInt {
    (0..k).fold(num_bigint::BigInt::one(), |acc, i| acc * num_bigint::BigInt::from(j - i))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})x")?,
                _ => write!(f, "({a})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn normalises_trailing_zeros() {
        let p = Polynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Polynomial::new(vec![int(0)]).degree(), None);
        assert!(Polynomial::zero().is_zero());
    }

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_ints(&[1, 1]);
        let q = Polynomial::from_ints(&[1, -1]);
        assert_eq!(&p * &q, Polynomial::from_ints(&[1, 0, -1]));
        assert_eq!(&p - &p, Polynomial::zero());
        assert_eq!(&p + &q, Polynomial::from_ints(&[2]));
        assert_eq!(&p * &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn derivatives() {
        let p = Polynomial::from_ints(&[0, 0, 0, 1]);
        assert_eq!(p.derivative(), Polynomial::from_ints(&[0, 0, 3]));
        assert_eq!(p.derivative_n(2), Polynomial::from_ints(&[0, 6]));
        assert_eq!(p.derivative_n(4), Polynomial::zero());
        assert_eq!(Polynomial::zero().derivative(), Polynomial::zero());
    }

    #[test]
    fn shift_and_dilate() {
        let p = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(p.shift(&int(1)), Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(p.dilate(&frac(1, 2)), Polynomial::new(vec![int(0), int(0), frac(1, 4)]));
        assert_eq!(p.eval(&int(-3)), int(9));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::new(vec![frac(1, 6), int(-1), int(1)]).to_string(), "1/6 + (-1)x + (1)x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}

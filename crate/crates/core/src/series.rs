//! Truncated formal power series in `t`.
//!
//! Coefficients are the plain coefficients of `t^k` (no `k!` scaling). A
//! series of precision `N` stores exactly `N + 1` coefficients and is known
//! through `t^N`. Binary operations return precision `min` of their inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series of the given precision from leading coefficients;
    /// missing coefficients are zero and extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], precision: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect(), precision)
    }

    /// Builds a series from a coefficient function `k -> [t^k]`.
    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries { coeffs: (0..=precision).map(f).collect() }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rational::one(), precision)
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    /// The series `t`.
    pub fn t(precision: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], precision)
    }

    /// `e^{y t}`.
    pub fn exp_scaled(y: &Rational, precision: usize) -> Self {
        let mut term = Rational::one();
        Self::from_fn(precision, |k| {
            if k > 0 {
                term = &term * y / rational::int(k as i64);
            }
            term.clone()
        })
    }

    pub fn exp(precision: usize) -> Self {
        Self::exp_scaled(&Rational::one(), precision)
    }

    /// `log(1 + t)`.
    pub fn log1p(precision: usize) -> Self {
        Self::from_fn(precision, |k| match k {
            0 => Rational::zero(),
            _ => rational::sign(k + 1) / rational::int(k as i64),
        })
    }

    /// `1 / (1 - c t)`.
    pub fn geometric(c: &Rational, precision: usize) -> Self {
        let mut term = Rational::one();
        Self::from_fn(precision, |k| {
            if k > 0 {
                term = &term * c;
            }
            term.clone()
        })
    }

    /// `(e^t - 1)/t`, the series with `[t^k] = 1/(k+1)!`.
    pub fn exp_minus_one_over_t(precision: usize) -> Self {
        Self::from_fn(precision, |k| rational::factorial_q(k + 1).recip())
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[t^k]`, or `None` beyond the known precision.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    /// Lowers the precision. Panics when asked to raise it.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision(), "cannot raise precision by truncation");
        PowerSeries { coeffs: self.coeffs[..=precision].to_vec() }
    }

    /// Order: index of the first nonzero coefficient, `None` for the zero series.
    ///
    /// A series that vanishes through its precision is reported as the zero
    /// series.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_delta(&self) -> bool {
        self.order() == Some(1)
    }

    pub fn is_invertible(&self) -> bool {
        self.order() == Some(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `t^k`; the precision is unchanged.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.precision();
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { Rational::zero() })
    }

    /// Division by `t^k`. Fails with [`Error::NotInvertible`] if any of the
    /// first `k` coefficients is nonzero; the precision drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs[..k.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotInvertible);
        }
        let n = self
            .precision()
            .checked_sub(k)
            .ok_or(Error::InsufficientPrecision { required: k, available: self.precision() })?;
        Ok(PowerSeries { coeffs: self.coeffs[k..=k + n].to_vec() })
    }

    /// Truncated product (schoolbook convolution).
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one(self.precision());
        for _ in 0..exp {
            result = result.multiply(self);
        }
        result
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let n = self.precision();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self / other` as `self * other^{-1}`.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self.multiply(&other.invert()?))
    }

    /// `outer(inner(t))`, requiring `inner` to have zero constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerNotDelta);
        }
        let n = outer.precision().min(inner.precision());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for a in outer.coeffs[..=n].iter().rev() {
            acc = acc.multiply(&inner);
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }

    /// Compositional inverse of a delta series.
    ///
    /// Coefficients are fixed one degree at a time: if `g` inverts `f`
    /// through `t^{k-1}`, the residual of `f(g(t))` at `t^k` equals
    /// `f_1 * correction`, so subtracting `residual / f_1` from `g_k` makes
    /// the composition exact through `t^k`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NotDelta);
        }
        let n = self.precision();
        let f1_inv = self.coeffs[1].recip();
        let mut g = Self::new(vec![Rational::zero(), f1_inv.clone()], n);
        for k in 2..=n {
            let fg = Self::compose(&self.truncate(k), &g.truncate(k))?;
            let residual = &fg.coeffs[k];
            if !residual.is_zero() {
                g.coeffs[k] -= residual * &f1_inv;
            }
        }
        Ok(g)
    }

    /// Dilation `f(alpha t)`.
    pub fn dilate(&self, alpha: &Rational) -> Self {
        let mut power = Rational::one();
        Self::from_fn(self.precision(), |k| {
            let c = &self.coeffs[k] * &power;
            power *= alpha;
            c
        })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.precision().min(rhs.precision());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.precision().min(rhs.precision());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.multiply(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({a})t^{k}")?;
        }
        write!(f, " + O(t^{})", self.precision() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    const N: usize = 10;

    #[test]
    fn difference_of_squares() {
        let a = PowerSeries::from_ints(&[1, 1], N);
        let b = PowerSeries::from_ints(&[1, -1], N);
        let p = a.multiply(&b);
        assert_eq!(p, PowerSeries::from_ints(&[1, 0, -1], N));
        assert_eq!(p.precision(), N);
    }

    #[test]
    fn geometric_telescopes() {
        let g = PowerSeries::geometric(&int(1), N);
        let p = g.multiply(&PowerSeries::from_ints(&[1, -1], N));
        assert_eq!(p, PowerSeries::one(N));
    }

    #[test]
    fn square_of_t_over_t_minus_one() {
        // t/(t-1) = -t - t^2 - ...; its square is t^2 + 2t^3 + 3t^4 + ...
        let f = PowerSeries::from_fn(N, |k| if k == 0 { int(0) } else { int(-1) });
        let sq = f.multiply(&f);
        let expected = PowerSeries::from_fn(N, |k| if k < 2 { int(0) } else { int(k as i64 - 1) });
        assert_eq!(sq, expected);
    }

    #[test]
    fn product_precision_is_minimum() {
        let a = PowerSeries::one(3);
        let b = PowerSeries::one(7);
        assert_eq!(a.multiply(&b).precision(), 3);
        assert_eq!((&a + &b).precision(), 3);
    }

    #[test]
    fn inverts_one_minus_t() {
        let inv = PowerSeries::from_ints(&[1, -1], N).invert().unwrap();
        assert_eq!(inv, PowerSeries::geometric(&int(1), N));
    }

    #[test]
    fn inverts_exp_minus_one_over_t() {
        let inv = PowerSeries::exp_minus_one_over_t(N).invert().unwrap();
        // t/(e^t - 1) = 1 - t/2 + t^2/12 - t^4/720 + ...
        assert_eq!(inv.coeffs()[..5], [int(1), frac(-1, 2), frac(1, 12), int(0), frac(-1, 720)]);
    }

    #[test]
    fn inverts_half_exp_plus_one() {
        let s = (&PowerSeries::exp(N) + &PowerSeries::one(N)).scale(&frac(1, 2));
        let inv = s.invert().unwrap();
        // 2/(e^t + 1) = 1 - t/2 + t^3/24 - t^5/240 + ...
        assert_eq!(inv.coeffs()[..6], [int(1), frac(-1, 2), int(0), frac(1, 24), int(0), frac(-1, 240)]);
    }

    #[test]
    fn invert_requires_constant_term() {
        assert_eq!(PowerSeries::t(N).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn compose_examples() {
        let t_over_t_minus_one = PowerSeries::from_fn(N, |k| if k == 0 { int(0) } else { int(-1) });
        let geo = PowerSeries::geometric(&int(1), N);
        let c = PowerSeries::compose(&geo, &t_over_t_minus_one).unwrap();
        assert_eq!(c, PowerSeries::from_ints(&[1, -1], N));

        let e = PowerSeries::exp(N);
        assert_eq!(PowerSeries::compose(&e, &PowerSeries::t(N)).unwrap(), e);
        let round = PowerSeries::compose(&e, &PowerSeries::log1p(N)).unwrap();
        assert_eq!(round, PowerSeries::from_ints(&[1, 1], N));

        assert_eq!(PowerSeries::compose(&e, &e), Err(Error::InnerNotDelta));
    }

    #[test]
    fn reversion_examples() {
        let f = PowerSeries::from_fn(N, |k| if k == 0 { int(0) } else { int(-1) });
        assert_eq!(f.reversion().unwrap(), f);
        assert_eq!(PowerSeries::t(N).reversion().unwrap(), PowerSeries::t(N));
        let em1 = &PowerSeries::exp(N) - &PowerSeries::one(N);
        assert_eq!(em1.reversion().unwrap(), PowerSeries::log1p(N));
        assert_eq!(PowerSeries::one(N).reversion(), Err(Error::NotDelta));
        assert_eq!(PowerSeries::from_ints(&[0, 0, 1], N).reversion(), Err(Error::NotDelta));
    }

    #[test]
    fn order_examples() {
        assert_eq!(PowerSeries::from_ints(&[0, 0, 1, 1], N).order(), Some(2));
        let em1 = &PowerSeries::exp(N) - &PowerSeries::one(N);
        assert_eq!(em1.order(), Some(1));
        assert!(em1.is_delta());
        let s = (&PowerSeries::exp(N) + &PowerSeries::one(N)).scale(&frac(1, 2));
        let inv = s.invert().unwrap();
        assert_eq!(inv.order(), Some(0));
        assert!(inv.is_invertible());
        assert_eq!(PowerSeries::zero(N).order(), None);
    }

    #[test]
    fn shifts() {
        let s = PowerSeries::from_ints(&[0, 0, 1, 2], 5);
        assert_eq!(s.shift_down(2).unwrap(), PowerSeries::from_ints(&[1, 2], 3));
        assert!(s.shift_down(3).is_err());
        assert_eq!(PowerSeries::one(4).shift_up(2), PowerSeries::from_ints(&[0, 0, 1], 4));
    }
}

//! Truncated exponential generating functions.
//!
//! An [`ExpSeries`] of order `N` stores `c_0…c_N` and stands for
//! `f(x) = Σ c_n xⁿ/n! + O(x^{N+1})`. Storing the divided-power coefficients
//! keeps Bell and Stirling entries integral, and turns `exp`/`log` into
//! recurrences that never divide.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A commutative ring usable as an EGF coefficient.
pub trait Coefficient:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplication by an integer.
    fn scale(&self, k: &BigInt) -> Self;
}

impl Coefficient for Rational {
    fn scale(&self, k: &BigInt) -> Self {
        self * Rational::from_integer(k.clone())
    }
}

impl Coefficient for BigInt {
    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }
}

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

/// Pascal triangle rows `0..=n`.
pub(crate) fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|k| {
                let left = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    BigInt::zero()
                };
                let right = prev.get(k).cloned().unwrap_or_else(BigInt::zero);
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Truncated EGF with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> ExpSeries<C> {
    /// Series from `c_0…c_N`; at least one coefficient is required.
    pub fn from_coefficients(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least the constant coefficient".into(),
            ));
        }
        Ok(ExpSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        ExpSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { C::zero() })
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(C::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The identity function `x`.
    pub fn x(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { C::one() } else { C::zero() })
    }

    /// `eˣ`: every coefficient is one.
    pub fn exp_x(order: usize) -> Self {
        Self::from_fn(order, |_| C::one())
    }

    /// `eˣ − 1`
    pub fn exp_x_minus_one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { C::zero() } else { C::one() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<C> {
        self.coeffs
    }

    /// `c_n`; errors past the truncation order.
    pub fn coefficient(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::Range {
            index: n,
            order: self.order(),
        })
    }

    /// Lowers the truncation order; asking for a higher order is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Range {
                index: order,
                order: self.order(),
            });
        }
        Ok(ExpSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Multiplies every coefficient by the constant `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        ExpSeries {
            coeffs: self.coeffs.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> ExpSeries<D> {
        ExpSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `exp(f)` for `c_0(f) = 0`, via
    /// `c_n(eᶠ) = Σ_{k=1}^{n} C(n−1,k−1) c_k(f) c_{n−k}(eᶠ)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let order = self.order();
        let binom = pascal(order);
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                acc = acc + (fk.clone() * out[n - k].clone()).scale(&binom[n - 1][k - 1]);
            }
            out.push(acc);
        }
        Ok(ExpSeries { coeffs: out })
    }

    /// `log(f)` for `c_0(f) = 1`; inverts [`ExpSeries::exp`] by solving the
    /// same recurrence for the inner series.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(
                "log needs a series with constant term 1".into(),
            ));
        }
        let order = self.order();
        let binom = pascal(order);
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(C::zero());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                let gk: &C = &out[k];
                if gk.is_zero() {
                    continue;
                }
                acc = acc - (gk.clone() * self.coeffs[n - k].clone()).scale(&binom[n - 1][k - 1]);
            }
            out.push(acc);
        }
        Ok(ExpSeries { coeffs: out })
    }
}

impl<C: Coefficient> Add for &ExpSeries<C> {
    type Output = ExpSeries<C>;
    fn add(self, rhs: Self) -> ExpSeries<C> {
        ExpSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<C: Coefficient> Sub for &ExpSeries<C> {
    type Output = ExpSeries<C>;
    fn sub(self, rhs: Self) -> ExpSeries<C> {
        ExpSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<C: Coefficient> Mul for &ExpSeries<C> {
    type Output = ExpSeries<C>;
    /// Binomial convolution `c_n(fg) = Σ_k C(n,k) c_k(f) c_{n−k}(g)`.
    fn mul(self, rhs: Self) -> ExpSeries<C> {
        let order = self.order().min(rhs.order());
        let binom = pascal(order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = C::zero();
                for (k, a) in self.coeffs[..=n].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + (a.clone() * rhs.coeffs[n - k].clone()).scale(&binom[n][k]);
                }
                acc
            })
            .collect();
        ExpSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, bell_polynomial};
    use crate::poly::YPolynomial;

    type S = ExpSeries<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ints(s: &S) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn addition_examples() {
        let sum = &S::exp_x_minus_one(6) + &S::one(6);
        assert_eq!(sum, S::exp_x(6));
        let f = S::exp_x(5);
        assert_eq!(&f + &S::zero(5), f);
        assert_eq!(
            ints(&(&S::exp_x_minus_one(4) + &S::exp_x_minus_one(4))),
            [0, 2, 2, 2, 2]
        );
    }

    #[test]
    fn addition_takes_minimum_order() {
        let sum = &S::exp_x(3) + &S::exp_x(7);
        assert_eq!(sum.order(), 3);
    }

    #[test]
    fn multiplication_examples() {
        // e^x e^x = e^{2x}: coefficients 2^n
        assert_eq!(
            ints(&(&S::exp_x(8) * &S::exp_x(8))),
            [1, 2, 4, 8, 16, 32, 64, 128, 256]
        );
        let f = S::exp_x_minus_one(5);
        assert_eq!(&f * &S::one(5), f);
        assert_eq!(ints(&(&S::x(4) * &S::x(4))), [0, 0, 2, 0, 0]);
    }

    #[test]
    fn exp_examples() {
        let bells = S::exp_x_minus_one(6).exp().unwrap();
        assert_eq!(ints(&bells), [1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(S::zero(4).exp().unwrap(), S::one(4));
        assert!(matches!(S::exp_x(3).exp(), Err(Error::Domain(_))));
    }

    #[test]
    fn exp_of_y_times_expm1_gives_bell_polynomials() {
        let order = 8;
        let y: YPolynomial<Rational> = YPolynomial::monomial(r(1), 1);
        let f = ExpSeries::<YPolynomial<Rational>>::exp_x_minus_one(order).scale_by(&y);
        let g = f.exp().unwrap();
        for n in 0..=order {
            assert_eq!(
                g.coefficient(n).unwrap(),
                &YPolynomial::from(&bell_polynomial(n))
            );
        }
    }

    #[test]
    fn log_examples() {
        let order = 10;
        let bells = S::exp_x_minus_one(order).exp().unwrap();
        assert_eq!(bells.log().unwrap(), S::exp_x_minus_one(order));
        assert_eq!(S::one(5).log().unwrap(), S::zero(5));
        assert_eq!(S::exp_x(5).log().unwrap(), S::x(5));
        assert!(matches!(S::exp_x_minus_one(3).log(), Err(Error::Domain(_))));
    }

    #[test]
    fn coefficient_access() {
        let bells = S::exp_x_minus_one(6).exp().unwrap();
        assert_eq!(bells.coefficient(5).unwrap(), &r(52));
        assert_eq!(S::one(4).coefficient(3).unwrap(), &r(0));
        assert_eq!(
            S::one(2).coefficient(3),
            Err(Error::Range { index: 3, order: 2 })
        );
        for n in 0..=6 {
            assert_eq!(
                bells.coefficient(n).unwrap().to_integer(),
                BigInt::from(bell(n))
            );
        }
    }

    #[test]
    fn empty_series_is_rejected() {
        assert!(S::from_coefficients(vec![]).is_err());
        assert!(S::exp_x(3).truncate(4).is_err());
        assert_eq!(S::exp_x(5).truncate(2).unwrap(), S::exp_x(2));
    }
}

//! Univariate polynomials in a single formal indeterminate.
//!
//! Used for Bell polynomials `B_n(y)` (natural coefficients) and for
//! series coefficients in `ybar = |z|^2` (rational coefficients).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::series::{Coefficient, Rational};

/// Dense polynomial `Σ c_k y^k`, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> YPolynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·y^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `y^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Powers `k` carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> YPolynomial<U> {
        YPolynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Zero + Mul<Output = T>> YPolynomial<T> {
    /// Horner evaluation at `y`.
    pub fn evaluate(&self, y: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * y.clone() + c.clone())
    }
}

impl<T: Clone + Zero> Zero for YPolynomial<T> {
    fn zero() -> Self {
        YPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Zero + One + PartialEq> One for YPolynomial<T> {
    fn one() -> Self {
        YPolynomial {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Clone + Zero> Add for YPolynomial<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Neg for YPolynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        YPolynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Sub for YPolynomial<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Mul for YPolynomial<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl Coefficient for YPolynomial<Rational> {
    fn scale(&self, k: &BigInt) -> Self {
        self.map(|c| c * Rational::from_integer(k.clone()))
    }
}

impl From<&YPolynomial<BigUint>> for YPolynomial<Rational> {
    fn from(p: &YPolynomial<BigUint>) -> Self {
        p.map(|c| Rational::from_integer(BigInt::from(c.clone())))
    }
}

/// Sign-aware coefficient rendering shared by the text formats.
pub trait CoeffFmt {
    fn is_negative(&self) -> bool;
    fn is_unit_magnitude(&self) -> bool;
    fn magnitude_string(&self) -> String;
}

impl CoeffFmt for BigUint {
    fn is_negative(&self) -> bool {
        false
    }
    fn is_unit_magnitude(&self) -> bool {
        self.is_one()
    }
    fn magnitude_string(&self) -> String {
        self.to_string()
    }
}

impl CoeffFmt for BigInt {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit_magnitude(&self) -> bool {
        self.abs().is_one()
    }
    fn magnitude_string(&self) -> String {
        self.abs().to_string()
    }
}

impl CoeffFmt for Rational {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit_magnitude(&self) -> bool {
        self.abs().is_one()
    }
    fn magnitude_string(&self) -> String {
        self.abs().to_string()
    }
}

/// Joins `(coefficient, basis-text)` pairs as `t1 + t2 - t3`.
///
/// An empty basis text marks the constant term; coefficients of magnitude one
/// are elided in front of a non-empty basis. `sep` goes between coefficient
/// and basis.
pub(crate) fn render_terms<'a, C: CoeffFmt + 'a>(
    terms: impl IntoIterator<Item = (&'a C, String)>,
    sep: &str,
) -> String {
    let mut out = String::new();
    for (i, (c, basis)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if basis.is_empty() {
            out.push_str(&c.magnitude_string());
        } else if c.is_unit_magnitude() {
            out.push_str(&basis);
        } else {
            out.push_str(&c.magnitude_string());
            out.push_str(sep);
            out.push_str(&basis);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn power_text(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl<T: Clone + Zero + CoeffFmt> YPolynomial<T> {
    /// Renders ascending in powers of `var`, e.g. `ybar + 3 ybar^2 + ybar^3`.
    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c, power_text(var, k))),
            " ",
        )
    }
}

impl<T: Clone + Zero + CoeffFmt> fmt::Display for YPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: &[u32]) -> YPolynomial<BigUint> {
        YPolynomial::new(v.iter().map(|&x| BigUint::from(x)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = nat(&[1, 2, 0, 0]);
        assert_eq!(p.coefficients().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(nat(&[0, 0]).is_zero());
        assert_eq!(nat(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = nat(&[1, 1]);
        assert_eq!(p.clone() * p.clone(), nat(&[1, 2, 1]));
        assert_eq!(p.clone() + nat(&[0, 0, 3]), nat(&[1, 1, 3]));
        assert_eq!(
            nat(&[0, 1, 3, 1]).evaluate(&BigUint::from(1u32)),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(
            nat(&[0, 1, 3, 1]).render("ybar"),
            "ybar + 3 ybar^2 + ybar^3"
        );
        assert_eq!(nat(&[1]).to_string(), "1");
        assert_eq!(nat(&[]).to_string(), "0");
        let q: YPolynomial<Rational> = YPolynomial::new(vec![
            Rational::new(1.into(), 2.into()),
            Rational::from_integer((-1).into()),
        ]);
        assert_eq!(q.to_string(), "1/2 - y");
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::normal::NormalForm;
use super::word::BosonWord;
use crate::poly::{power_text, render_terms, YPolynomial};
use crate::series::{Coefficient, ExpSeries, Rational};
use crate::{Error, Result};

/// Polynomial in `z̄` and `z` with rational coefficients, keyed by
/// `(power of z̄, power of z)`.
///
/// Balanced values (every key has equal powers) are polynomials in
/// `ybar = |z|²`; see [`CoherentValue::as_ybar`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoherentValue {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl CoherentValue {
    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    fn add_term(&mut self, key: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.terms.keys().all(|&(r, s)| r == s)
    }

    /// The same value as a polynomial in `ybar`, when balanced.
    pub fn as_ybar(&self) -> Option<YPolynomial<Rational>> {
        if !self.is_balanced() {
            return None;
        }
        let degree = self.terms.keys().map(|&(r, _)| r).max();
        let mut coeffs = vec![Rational::zero(); degree.map_or(0, |d| d + 1)];
        for (&(r, _), c) in &self.terms {
            coeffs[r] = c.clone();
        }
        Some(YPolynomial::new(coeffs))
    }

    pub fn from_ybar(p: &YPolynomial<Rational>) -> Self {
        let mut out = CoherentValue::default();
        for (k, c) in p.coefficients().iter().enumerate() {
            out.add_term((k, k), c.clone());
        }
        out
    }

    /// Value at a real `z` (so `z̄ = z`).
    pub fn evaluate_real(&self, z: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(r, s), c)| {
                acc + c * num_traits::pow(z.clone(), r + s)
            })
    }

    /// Value at a given `ybar = |z|²`; `None` for unbalanced values.
    pub fn evaluate_ybar(&self, ybar: &Rational) -> Option<Rational> {
        self.as_ybar().map(|p| p.evaluate(ybar))
    }

    /// `ybar` polynomial text when balanced, otherwise `zbar^r z^s` terms.
    pub fn render(&self) -> String {
        if let Some(p) = self.as_ybar() {
            return p.render("ybar");
        }
        render_terms(
            self.terms.iter().map(|(&(r, s), c)| {
                let basis = [power_text("zbar", r), power_text("z", s)]
                    .into_iter()
                    .filter(|t| !t.is_empty())
                    .collect::<Vec<_>>()
                    .join(" ");
                (c, basis)
            }),
            " ",
        )
    }

    /// Balanced: coefficient list in powers of `ybar`; otherwise a list of
    /// `{"zbar", "z", "coeff"}` objects. Rationals render as `"p/q"`.
    pub fn to_json(&self) -> Value {
        match self.as_ybar() {
            Some(p) => Value::Array(
                p.coefficients()
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect(),
            ),
            None => Value::Array(
                self.terms
                    .iter()
                    .map(|(&(r, s), c)| json!({"zbar": r, "z": s, "coeff": c.to_string()}))
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for CoherentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for CoherentValue {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Neg for CoherentValue {
    type Output = Self;
    fn neg(self) -> Self {
        CoherentValue {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for CoherentValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CoherentValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = CoherentValue::default();
        for (&(r1, s1), c1) in &self.terms {
            for (&(r2, s2), c2) in &rhs.terms {
                out.add_term((r1 + r2, s1 + s2), c1 * c2);
            }
        }
        out
    }
}

impl Zero for CoherentValue {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for CoherentValue {
    fn one() -> Self {
        let mut out = Self::default();
        out.add_term((0, 0), Rational::one());
        out
    }
}

impl Coefficient for CoherentValue {
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = CoherentValue::default();
        for (&key, c) in &self.terms {
            out.add_term(key, c * Rational::from_integer(k.clone()));
        }
        out
    }
}

/// `⟨z|N|z⟩` for a normally ordered `N`: each `(a†)^r a^s` becomes `z̄^r z^s`,
/// since `a|z⟩ = z|z⟩` and `⟨z|a† = z̄⟨z|` with `⟨z|z⟩ = 1`.
pub fn coherent_expectation(nf: &NormalForm) -> CoherentValue {
    let mut out = CoherentValue::default();
    for (&key, c) in nf.terms() {
        out.add_term(key, Rational::from_integer(c.clone()));
    }
    out
}

/// `F(x,z) = ⟨z|exp(xw)|z⟩` to the given order: `c_n = ⟨z|wⁿ|z⟩`.
///
/// The normal form of `wⁿ` is extended from that of `wⁿ⁻¹` by one more copy
/// of the word, so each power is rewritten once.
pub fn egf_expectation(word: &BosonWord, order: usize) -> ExpSeries<CoherentValue> {
    let mut power = NormalForm::identity();
    ExpSeries::from_fn(order, |n| {
        if n > 0 {
            power = power.mul_word(word);
        }
        coherent_expectation(&power)
    })
}

/// [`egf_expectation`] for balanced words, with coefficients in `ybar`.
pub fn egf_expectation_ybar(
    word: &BosonWord,
    order: usize,
) -> Result<ExpSeries<YPolynomial<Rational>>> {
    if !word.is_balanced() {
        return Err(Error::Domain(format!(
            "word '{word}' is unbalanced; its expectation is not a polynomial in ybar"
        )));
    }
    Ok(egf_expectation(word, order).map(|c| {
        c.as_ybar()
            .expect("balanced words give balanced normal forms")
    }))
}

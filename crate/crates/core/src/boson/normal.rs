use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::word::{BosonWord, Letter};
use crate::combinatorics::StirlingTable;
use crate::poly::{power_text, render_terms};

/// Finite sum `Σ c_{r,s} (a†)^r a^s` with every creator left of every
/// annihilator. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Serialize)]
struct JsonTerm {
    r: usize,
    s: usize,
    coeff: String,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity operator `{(0,0): 1}`.
    pub fn identity() -> Self {
        Self::term(0, 0, BigInt::one())
    }

    /// `c (a†)^r a^s`
    pub fn term(r: usize, s: usize, c: BigInt) -> Self {
        let mut nf = Self::zero();
        nf.add_term(r, s, c);
        nf
    }

    /// Terms keyed by `(r, s)`, ascending.
    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, r: usize, s: usize) -> BigInt {
        self.terms
            .get(&(r, s))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, r: usize, s: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((r, s)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(r, s));
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&(r, s), c) in &other.terms {
            out.add_term(r, s, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(r, s), c) in &self.terms {
            out.add_term(r, s, c * k);
        }
        out
    }

    /// Right multiplication by one letter, restoring normal order.
    ///
    /// Appending `a` keeps order. Appending `a†` to `(a†)^r a^s` moves it
    /// left past each of the `s` annihilators with `a·a† → a†·a + 1`; every
    /// step leaves a contraction `(a†)^r a^{s−1}`, giving
    /// `(a†)^{r+1} a^s + s (a†)^r a^{s−1}`.
    pub fn mul_letter(&self, letter: Letter) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(r, s), c) in &self.terms {
            match letter {
                Letter::Annihilator => out.add_term(r, s + 1, c.clone()),
                Letter::Creator => {
                    out.add_term(r + 1, s, c.clone());
                    if s > 0 {
                        out.add_term(r, s - 1, c * BigInt::from(s));
                    }
                }
            }
        }
        out
    }

    pub fn mul_word(&self, word: &BosonWord) -> NormalForm {
        word.letters()
            .iter()
            .fold(self.clone(), |nf, &l| nf.mul_letter(l))
    }

    /// Canonical text: terms descending in `(r, s)`, `c` for `a†`, e.g.
    /// `c^2 a^2 + c a`.
    pub fn render(&self) -> String {
        render_terms(
            self.terms.iter().rev().map(|(&(r, s), c)| {
                let basis = [power_text("c", r), power_text("a", s)]
                    .into_iter()
                    .filter(|t| !t.is_empty())
                    .collect::<Vec<_>>()
                    .join(" ");
                (c, basis)
            }),
            " ",
        )
    }

    /// JSON list of `{"r","s","coeff"}` in the same order as [`NormalForm::render`],
    /// coefficients as decimal strings.
    pub fn to_json(&self) -> String {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(&(r, s), c)| JsonTerm {
                r,
                s,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_string(&terms).expect("plain structs serialize")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Normal form of a single word, by rewriting.
pub fn normal_order(word: &BosonWord) -> NormalForm {
    NormalForm::identity().mul_word(word)
}

/// Normal form of a formal integer combination of words.
pub fn normal_order_sum(sum: &[(BigInt, BosonWord)]) -> NormalForm {
    sum.iter().fold(NormalForm::zero(), |acc, (c, w)| {
        acc.add(&normal_order(w).scale(c))
    })
}

/// `(a†a)ⁿ = Σ_k S(n,k) (a†)^k a^k`, read off the Stirling table.
pub fn normal_order_nhat_power(n: usize) -> NormalForm {
    if n == 0 {
        return NormalForm::identity();
    }
    let table = StirlingTable::new(n);
    let mut nf = NormalForm::zero();
    for (k, s) in table.row(n).iter().enumerate() {
        nf.add_term(k, k, BigInt::from(s.clone()));
    }
    nf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BosonWord {
        s.parse().unwrap()
    }

    fn nf(terms: &[(usize, usize, i64)]) -> NormalForm {
        let mut out = NormalForm::zero();
        for &(r, s, c) in terms {
            out.add_term(r, s, c.into());
        }
        out
    }

    #[test]
    fn commutator() {
        assert_eq!(normal_order(&word("ac")), nf(&[(1, 1, 1), (0, 0, 1)]));
        assert_eq!(normal_order(&word("ac")).render(), "c a + 1");
    }

    #[test]
    fn number_operator_powers() {
        assert_eq!(normal_order(&word("caca")), nf(&[(2, 2, 1), (1, 1, 1)]));
        assert_eq!(normal_order(&word("caca")).render(), "c^2 a^2 + c a");
        assert_eq!(
            normal_order(&word("cacaca")),
            nf(&[(3, 3, 1), (2, 2, 3), (1, 1, 1)])
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(normal_order_nhat_power(0), NormalForm::identity());
        assert_eq!(normal_order_nhat_power(1), nf(&[(1, 1, 1)]));
        assert_eq!(normal_order_nhat_power(2), nf(&[(2, 2, 1), (1, 1, 1)]));
        assert_eq!(
            normal_order_nhat_power(4),
            nf(&[(1, 1, 1), (2, 2, 7), (3, 3, 6), (4, 4, 1)])
        );
    }

    #[test]
    fn already_normal_words_are_fixed() {
        assert_eq!(normal_order(&word("ccaa")), nf(&[(2, 2, 1)]));
        assert_eq!(normal_order(&word("")), NormalForm::identity());
        assert_eq!(normal_order(&word("aac")), nf(&[(1, 2, 1), (0, 1, 2)]));
    }

    #[test]
    fn aa_cc() {
        // a a a† a† = a†² a² + 4 a† a + 2
        assert_eq!(
            normal_order(&word("aacc")),
            nf(&[(2, 2, 1), (1, 1, 4), (0, 0, 2)])
        );
    }

    #[test]
    fn sums_cancel() {
        let sum = [
            (BigInt::from(1), word("ac")),
            (BigInt::from(-1), word("ca")),
        ];
        assert_eq!(normal_order_sum(&sum), NormalForm::identity());
        assert!(normal_order_sum(&[]).is_zero());
    }

    #[test]
    fn rendering_and_json() {
        assert_eq!(NormalForm::zero().render(), "0");
        assert_eq!(nf(&[(0, 1, -2), (1, 0, 3)]).render(), "3 c - 2 a");
        assert_eq!(
            normal_order(&word("ac")).to_json(),
            r#"[{"r":1,"s":1,"coeff":"1"},{"r":0,"s":0,"coeff":"1"}]"#
        );
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::combinatorics::binomial;
use crate::poly::render_terms;
use crate::series::Rational;

/// Finite rational combination of monomials. Zero coefficients are never
/// stored, so structural equality is equality in the algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `e`.
    pub fn unit() -> Self {
        Self::monomial(Monomial::unit())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn generator(k: usize) -> Self {
        Self::monomial(Monomial::generator(k))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Applies `f` to every basis monomial and extends linearly.
    pub fn map_linear(&self, f: impl Fn(&Monomial) -> AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (n, d) in f(m).terms {
                out.add_term(n, c * d);
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    /// `3/2*y1^2*y3 + y2`; the unit prints as `e`, the zero element as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(
            self.terms.iter().map(|(m, c)| (c, m.to_string())),
            "*",
        ))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        product(self, rhs)
    }
}

/// Element of the two-fold tensor product, in expanded basis form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `A ⊗ B` for basis monomials.
    pub fn pure(left: Monomial, right: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(left, right, Rational::one());
        out
    }

    /// `A ⊗ B` extended bilinearly.
    pub fn tensor(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut out = Self::zero();
        for (l, c) in a.terms() {
            for (r, d) in b.terms() {
                out.add_term(l.clone(), r.clone(), c * d);
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }

    /// Exchanges the two tensor factors.
    pub fn swap(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Multiplication map `m(a⊗b) = ab` after applying `f` to the left and
    /// `g` to the right factor.
    pub fn contract(
        &self,
        f: impl Fn(&Monomial) -> AlgebraElement,
        g: impl Fn(&Monomial) -> AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((l, r), c) in &self.terms {
            let p = product(&f(l), &g(r));
            for (m, d) in p.terms() {
                out.add_term(m.clone(), c * d);
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    /// Terms as `c*A (x) B`, descending in the left factor, e.g.
    /// `y1^2 (x) e + 2*y1 (x) y1 + e (x) y1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(
            self.terms
                .iter()
                .rev()
                .map(|((l, r), c)| (c, format!("{l} (x) {r}"))),
            "*",
        ))
    }
}

/// Bilinear extension of monomial multiplication.
pub fn product(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        for (n, d) in b.terms() {
            out.add_term(m.mul(n), c * d);
        }
    }
    out
}

/// `Δ` on a basis monomial by splitting its letter multiset: for each letter
/// `yₖ` of multiplicity `mₖ`, `jₖ` copies go left with weight `C(mₖ, jₖ)`.
pub fn coproduct_monomial(m: &Monomial) -> TensorElement {
    let exps: Vec<(usize, usize)> = m.exponents().iter().map(|(&k, &e)| (k, e)).collect();
    let mut out = TensorElement::zero();
    let mut split = vec![0usize; exps.len()];
    loop {
        let coeff: BigInt = exps
            .iter()
            .zip(&split)
            .map(|(&(_, e), &j)| BigInt::from(binomial(e, j)))
            .product();
        let left = Monomial::from_exponents(exps.iter().zip(&split).map(|(&(k, _), &j)| (k, j)));
        let right =
            Monomial::from_exponents(exps.iter().zip(&split).map(|(&(k, e), &j)| (k, e - j)));
        out.add_term(left, right, Rational::from_integer(coeff));

        // odometer over 0..=e for each letter
        let mut i = 0;
        while i < split.len() {
            if split[i] < exps[i].1 {
                split[i] += 1;
                break;
            }
            split[i] = 0;
            i += 1;
        }
        if i == split.len() {
            return out;
        }
    }
}

/// `Δ` on a basis monomial as the product of the primitive coproducts of its
/// letters; an independent route to [`coproduct_monomial`].
pub fn coproduct_by_homomorphism(m: &Monomial) -> TensorElement {
    m.letters().into_iter().fold(
        TensorElement::pure(Monomial::unit(), Monomial::unit()),
        |acc, k| {
            let y = Monomial::generator(k);
            let primitive = TensorElement::pure(y.clone(), Monomial::unit())
                .add(&TensorElement::pure(Monomial::unit(), y));
            acc.mul(&primitive)
        },
    )
}

/// `Δ`, extended linearly.
pub fn coproduct(a: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.terms() {
        for ((l, r), d) in coproduct_monomial(m).terms() {
            out.add_term(l.clone(), r.clone(), c * d);
        }
    }
    out
}

/// `ε(A)`: the coefficient of `e`.
pub fn counit(a: &AlgebraElement) -> Rational {
    a.coefficient(&Monomial::unit())
}

/// `S(m) = (−1)^{degree(m)} m`, extended linearly.
///
/// This is the anti-homomorphic extension of `S(yₖ) = −yₖ`; the algebra is
/// commutative so order reversal is invisible.
pub fn antipode(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        let c = if m.degree() % 2 == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        out.add_term(m.clone(), c);
    }
    out
}

fn antipode_monomial(m: &Monomial) -> AlgebraElement {
    antipode(&AlgebraElement::monomial(m.clone()))
}

fn identity_monomial(m: &Monomial) -> AlgebraElement {
    AlgebraElement::monomial(m.clone())
}

/// `m∘(S⊗id)∘Δ(A)`; equals `ε(A)·e` in a Hopf algebra.
pub fn convolve_antipode_id(a: &AlgebraElement) -> AlgebraElement {
    coproduct(a).contract(antipode_monomial, identity_monomial)
}

/// `m∘(id⊗S)∘Δ(A)`; equals `ε(A)·e` in a Hopf algebra.
pub fn convolve_id_antipode(a: &AlgebraElement) -> AlgebraElement {
    coproduct(a).contract(identity_monomial, antipode_monomial)
}

/// Splits `A` into homogeneous components by weight.
pub fn grade_components(a: &AlgebraElement) -> BTreeMap<usize, AlgebraElement> {
    let mut out: BTreeMap<usize, AlgebraElement> = BTreeMap::new();
    for (m, c) in a.terms() {
        out.entry(m.weight())
            .or_default()
            .add_term(m.clone(), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> AlgebraElement {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn product_examples() {
        assert_eq!(&el("y1") * &el("y2"), el("y1*y2"));
        let a = el("3/2*y1^2*y3 + y2");
        assert_eq!(&AlgebraElement::unit() * &a, a);
        assert_eq!(&el("y1 + y2") * &el("y1"), el("y1^2 + y1*y2"));
        assert_eq!(&el("y1") * &el("y2"), &el("y2") * &el("y1"));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&el("y1")).to_string(), "y1 (x) e + e (x) y1");
        assert_eq!(coproduct(&el("e")).to_string(), "e (x) e");
        assert_eq!(
            coproduct(&el("y1^2")).to_string(),
            "y1^2 (x) e + 2*y1 (x) y1 + e (x) y1^2"
        );
        assert!(coproduct(&AlgebraElement::zero()).is_zero());
    }

    #[test]
    fn coproduct_routes_agree() {
        for m in [
            Monomial::from_exponents([(1, 3), (2, 1)]),
            Monomial::from_exponents([(2, 2), (3, 1)]),
            Monomial::unit(),
        ] {
            assert_eq!(coproduct_monomial(&m), coproduct_by_homomorphism(&m));
        }
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&el("e")), q(1));
        assert_eq!(counit(&el("y3")), q(0));
        assert_eq!(counit(&el("2*e + 5*y1")), q(2));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&el("y2")), el("-y2"));
        assert_eq!(antipode(&el("y1*y2")), el("y1*y2"));
        assert_eq!(antipode(&el("e")), el("e"));
        let a = el("y1 + 2*y2");
        let b = el("y3 - y1^2");
        assert_eq!(antipode(&(&a * &b)), &antipode(&b) * &antipode(&a));
    }

    #[test]
    fn antipode_convolution_examples() {
        assert!(convolve_antipode_id(&el("y1")).is_zero());
        assert_eq!(convolve_antipode_id(&el("e")), el("e"));
        assert!(convolve_antipode_id(&el("y1^2")).is_zero());
        assert_eq!(convolve_id_antipode(&el("4*e + y2*y3")), el("4*e"));
    }

    #[test]
    fn grading_examples() {
        let g = grade_components(&el("y1 + y2"));
        assert_eq!(g.len(), 2);
        assert_eq!(g[&1], el("y1"));
        assert_eq!(g[&2], el("y2"));
        assert_eq!(
            grade_components(&el("y1^2"))
                .keys()
                .copied()
                .collect::<Vec<_>>(),
            [2]
        );
        assert!(grade_components(&AlgebraElement::zero()).is_empty());
    }

    #[test]
    fn rendering() {
        assert_eq!(AlgebraElement::zero().to_string(), "0");
        assert_eq!(el("2*e + 5*y1").to_string(), "2*e + 5*y1");
        assert_eq!(el("y2 - 1/2*y1").to_string(), "-1/2*y1 + y2");
    }
}

//! Executable Hopf-axiom checks over basis monomials and random
//! combinations.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::{
    convolve_antipode_id, convolve_id_antipode, coproduct, coproduct_by_homomorphism,
    coproduct_monomial, counit, product, AlgebraElement, TensorElement,
};
use super::monomial::Monomial;
use crate::combinatorics::integer_partitions;
use crate::series::Rational;

/// Which generators the algebra has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// One generator `y1`: POLY, graded by degree.
    Poly,
    /// `y1, y2, …` with `yₖ` of weight `k`: BELL.
    Bell,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Poly => "poly",
            Alphabet::Bell => "bell",
        }
    }

    pub fn admits(self, m: &Monomial) -> bool {
        match self {
            Alphabet::Poly => m.max_index() <= 1,
            Alphabet::Bell => true,
        }
    }

    pub fn admits_element(self, a: &AlgebraElement) -> bool {
        a.terms().keys().all(|m| self.admits(m))
    }

    /// Every basis monomial of weight `≤ bound`, `e` first, ascending weight.
    pub fn basis(self, bound: usize) -> Vec<Monomial> {
        match self {
            Alphabet::Poly => (0..=bound)
                .map(|d| Monomial::from_exponents([(1, d)]))
                .collect(),
            Alphabet::Bell => (0..=bound)
                .flat_map(integer_partitions)
                .map(Monomial::from_letters)
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `(Δ⊗id)Δ = (id⊗Δ)Δ`
    Coassociativity,
    /// `(ε⊗id)Δ = id = (id⊗ε)Δ`
    Counit,
    /// `m(S⊗id)Δ = ηε = m(id⊗S)Δ`
    Antipode,
    /// `τΔ = Δ`
    Cocommutativity,
    /// `Δ(AB) = Δ(A)Δ(B)`
    Homomorphism,
    /// Multiset-splitting coproduct equals the product of primitive coproducts.
    CoproductRoutes,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Antipode,
        Axiom::Cocommutativity,
        Axiom::Homomorphism,
        Axiom::CoproductRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Antipode => "antipode",
            Axiom::Cocommutativity => "cocommutativity",
            Axiom::Homomorphism => "homomorphism",
            Axiom::CoproductRoutes => "coproduct-routes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub cases: usize,
    /// First failing input, rendered in element syntax.
    pub counterexample: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub random_samples: usize,
    pub seed: u64,
    /// Upper bound on the number of terms in a random combination.
    pub max_terms: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            random_samples: 100,
            seed: 0x5eed_b0de,
            max_terms: 4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HopfReport {
    pub alphabet: Alphabet,
    pub weight_bound: usize,
    /// Basis monomials of weight `≥ 1` checked; `e` is always checked too.
    pub basis_checked: usize,
    pub random_samples: usize,
    pub results: Vec<AxiomResult>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.alphabet.name())?;
        writeln!(f, "weight bound: {}", self.weight_bound)?;
        writeln!(
            f,
            "basis monomials checked: {} (plus e)",
            self.basis_checked
        )?;
        writeln!(f, "random combinations: {}", self.random_samples)?;
        for r in &self.results {
            match &r.counterexample {
                None => writeln!(f, "{}: pass ({} cases)", r.axiom.name(), r.cases)?,
                Some(c) => writeln!(
                    f,
                    "{}: FAIL ({} cases), counterexample: {c}",
                    r.axiom.name(),
                    r.cases
                )?,
            }
        }
        write!(
            f,
            "result: {}",
            if self.all_passed() { "pass" } else { "FAIL" }
        )
    }
}

type Triple = BTreeMap<(Monomial, Monomial, Monomial), Rational>;

fn add_triple(t: &mut Triple, key: (Monomial, Monomial, Monomial), c: Rational) {
    use num_traits::Zero;
    let slot = t.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

fn coassociative(a: &AlgebraElement) -> bool {
    let delta = coproduct(a);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((l, r), c) in delta.terms() {
        for ((ll, lr), d) in coproduct_monomial(l).terms() {
            add_triple(&mut left, (ll.clone(), lr.clone(), r.clone()), c * d);
        }
        for ((rl, rr), d) in coproduct_monomial(r).terms() {
            add_triple(&mut right, (l.clone(), rl.clone(), rr.clone()), c * d);
        }
    }
    left == right
}

fn counit_laws(a: &AlgebraElement) -> bool {
    let delta = coproduct(a);
    let mut left = AlgebraElement::zero();
    let mut right = AlgebraElement::zero();
    for ((l, r), c) in delta.terms() {
        if l.is_unit() {
            left.add_term(r.clone(), c.clone());
        }
        if r.is_unit() {
            right.add_term(l.clone(), c.clone());
        }
    }
    left == *a && right == *a
}

fn antipode_laws(a: &AlgebraElement) -> bool {
    let expected = AlgebraElement::unit().scale(&counit(a));
    convolve_antipode_id(a) == expected && convolve_id_antipode(a) == expected
}

fn cocommutative(a: &AlgebraElement) -> bool {
    let delta = coproduct(a);
    delta.swap() == delta
}

fn homomorphic(a: &AlgebraElement, b: &AlgebraElement) -> bool {
    coproduct(&product(a, b)) == coproduct(a).mul(&coproduct(b))
}

fn routes_agree(a: &AlgebraElement) -> bool {
    let mut via_letters = TensorElement::zero();
    for (m, c) in a.terms() {
        for ((l, r), d) in coproduct_by_homomorphism(m).terms() {
            via_letters.add_term(l.clone(), r.clone(), c * d);
        }
    }
    via_letters == coproduct(a)
}

fn random_combination(
    rng: &mut ChaCha8Rng,
    basis: &[Monomial],
    max_terms: usize,
) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let mut num: i64 = rng.gen_range(-5..=4);
        if num >= 0 {
            num += 1;
        }
        let den: i64 = rng.gen_range(1..=3);
        out.add_term(m, Rational::new(num.into(), den.into()));
    }
    out
}

struct Tally {
    axiom: Axiom,
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally {
            axiom,
            cases: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(input());
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult {
            axiom: self.axiom,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn check_all(
    singles: &[AlgebraElement],
    pairs: &[(AlgebraElement, AlgebraElement)],
) -> Vec<AxiomResult> {
    let mut tallies: Vec<Tally> = Axiom::ALL.iter().map(|&a| Tally::new(a)).collect();
    for a in singles {
        let show = || a.to_string();
        tallies[0].record(coassociative(a), show);
        tallies[1].record(counit_laws(a), show);
        tallies[2].record(antipode_laws(a), show);
        tallies[3].record(cocommutative(a), show);
        tallies[5].record(routes_agree(a), show);
    }
    for (a, b) in pairs {
        tallies[4].record(homomorphic(a, b), || format!("({a}) * ({b})"));
    }
    tallies.into_iter().map(Tally::finish).collect()
}

/// Checks every axiom family on all basis monomials of weight `≤ bound`
/// (degree for POLY), on every pair of them, and on random combinations.
pub fn check_hopf_axioms(
    alphabet: Alphabet,
    weight_bound: usize,
    options: CheckOptions,
) -> HopfReport {
    let basis = alphabet.basis(weight_bound);
    let mut singles: Vec<AlgebraElement> = basis
        .iter()
        .cloned()
        .map(AlgebraElement::monomial)
        .collect();
    let mut pairs: Vec<(AlgebraElement, AlgebraElement)> = singles
        .iter()
        .flat_map(|a| singles.iter().map(move |b| (a.clone(), b.clone())))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let random: Vec<AlgebraElement> = (0..options.random_samples)
        .map(|_| random_combination(&mut rng, &basis, options.max_terms))
        .collect();
    for (i, a) in random.iter().enumerate() {
        pairs.push((a.clone(), random[(i + 1) % random.len()].clone()));
    }
    singles.extend(random);

    HopfReport {
        alphabet,
        weight_bound,
        basis_checked: basis.len() - 1,
        random_samples: options.random_samples,
        results: check_all(&singles, &pairs),
    }
}

/// Runs the same checks on one element `A`, pairing it with itself.
pub fn check_element(a: &AlgebraElement) -> Vec<AxiomResult> {
    check_all(std::slice::from_ref(a), &[(a.clone(), a.clone())])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(Alphabet::Bell.basis(6).len(), 30);
        assert_eq!(Alphabet::Poly.basis(6).len(), 7);
        assert_eq!(Alphabet::Bell.basis(0), vec![Monomial::unit()]);
        assert!(Alphabet::Bell.basis(4).iter().all(|m| m.weight() <= 4));
        assert!(Alphabet::Poly
            .basis(4)
            .iter()
            .all(|m| Alphabet::Poly.admits(m)));
    }

    #[test]
    fn bound_four_passes() {
        for alphabet in [Alphabet::Bell, Alphabet::Poly] {
            let report = check_hopf_axioms(
                alphabet,
                4,
                CheckOptions {
                    random_samples: 20,
                    ..Default::default()
                },
            );
            assert!(report.all_passed(), "{report}");
            assert_eq!(report.results.len(), Axiom::ALL.len());
        }
    }

    #[test]
    fn bound_zero_checks_only_the_unit() {
        let report = check_hopf_axioms(
            Alphabet::Bell,
            0,
            CheckOptions {
                random_samples: 0,
                ..Default::default()
            },
        );
        assert!(report.all_passed());
        assert_eq!(report.basis_checked, 0);
        assert_eq!(report.result(Axiom::Counit).unwrap().cases, 1);
    }

    #[test]
    fn bound_one_counts_one_monomial() {
        let report = check_hopf_axioms(Alphabet::Bell, 1, CheckOptions::default());
        assert!(report.all_passed());
        assert_eq!(report.basis_checked, 1);
    }

    #[test]
    fn broken_antipode_would_be_caught() {
        // the identity map is not an antipode: m(id⊗id)Δ(y1) = 2 y1 ≠ 0
        let y1 = AlgebraElement::generator(1);
        let fake = coproduct(&y1).contract(
            |m| AlgebraElement::monomial(m.clone()),
            |m| AlgebraElement::monomial(m.clone()),
        );
        assert_ne!(fake, AlgebraElement::zero());
        assert!(antipode_laws(&y1));
    }

    #[test]
    fn single_element_check() {
        let a: AlgebraElement = "3/2*y1^2*y3 + y2".parse().unwrap();
        assert!(check_element(&a).iter().all(AxiomResult::passed));
    }

    #[test]
    fn report_rendering() {
        let report = check_hopf_axioms(
            Alphabet::Poly,
            2,
            CheckOptions {
                random_samples: 3,
                ..Default::default()
            },
        );
        let text = report.to_string();
        assert!(
            text.starts_with("mode: poly\nweight bound: 2\nbasis monomials checked: 2 (plus e)\n")
        );
        assert!(text.ends_with("result: pass"));
    }
}

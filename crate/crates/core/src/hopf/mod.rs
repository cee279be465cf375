//! The Hopf algebras POLY and BELL.
//!
//! Both are the free commutative algebra over a graded alphabet: POLY over
//! the single generator `y1`, BELL over `Y = {y1, y2, …}` with `yₖ` of weight
//! `k`. Generators are primitive (`Δ(yₖ) = yₖ⊗e + e⊗yₖ`), the counit picks the
//! coefficient of `e`, and the antipode negates generators. Scalars are exact
//! rationals.

mod axioms;
mod element;
mod monomial;
mod parse;

pub use axioms::{
    check_element, check_hopf_axioms, Alphabet, Axiom, AxiomResult, CheckOptions, HopfReport,
};
pub use element::{
    antipode, convolve_antipode_id, convolve_id_antipode, coproduct, coproduct_by_homomorphism,
    coproduct_monomial, counit, grade_components, product, AlgebraElement, TensorElement,
};
pub use monomial::Monomial;

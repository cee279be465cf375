//! Single-mode boson operator algebra.
//!
//! Words over `{a, a†}` are normally ordered by rewriting `a·a† → a†·a + 1`;
//! the closed Stirling expansion of `(a†a)ⁿ` is kept as a separate path so
//! the two can be checked against each other. Coherent-state expectations
//! follow from the normal form by substituting `a† → z̄`, `a → z`.

mod coherent;
mod fock;
mod normal;
mod word;

pub use coherent::{coherent_expectation, egf_expectation, egf_expectation_ybar, CoherentValue};
pub use fock::{fock_oracle_expectation, FockEstimate, DEFAULT_FOCK_DIM, FOCK_TOLERANCE};
pub use normal::{normal_order, normal_order_nhat_power, normal_order_sum, NormalForm};
pub use word::{BosonWord, Letter};

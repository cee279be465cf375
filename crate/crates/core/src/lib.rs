//! Exact combinatorics for a single-mode boson model.
//!
//! The crate covers the whole chain from counting to algebra:
//!
//! - [`combinatorics`]: Stirling numbers of the second kind, Bell numbers and
//!   polynomials, and a restricted-growth-word set-partition enumerator.
//! - [`series`]: truncated exponential generating functions with exact
//!   coefficients, including `exp` and `log`.
//! - [`boson`]: words in `a` and `a†`, normal ordering, coherent-state
//!   expectations and a truncated Fock-space numeric oracle.
//! - [`diagrams`]: labeled diagrams (set partitions of line labels), their
//!   shapes, monomial codes and DOT export.
//! - [`hopf`]: the free commutative algebra over a graded alphabet with its
//!   primitive coproduct, counit and antipode, and executable axiom checks.
//! - [`statmech`]: partition-function integrands, moment/cumulant conversion,
//!   the vertex-weighted graph expansion and the free-boson partition function.
//!
//! Everything is exact (big integers and rationals) except the partition
//! function values, which use decimal high-precision floats and `f64`
//! quadrature.

pub mod boson;
pub mod combinatorics;
pub mod diagrams;
mod error;
pub mod hopf;
pub mod poly;
pub mod series;
pub mod statmech;

pub use error::{Error, Result};
pub use poly::YPolynomial;
pub use series::{Coefficient, ExpSeries, Rational};

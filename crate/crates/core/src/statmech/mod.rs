//! Partition functions of `H = ε·w(a, a†)` and their combinatorial expansion.
//!
//! With `x = −βε`, the partition function integrand `F(x,z) = ⟨z|exp(xw)|z⟩`
//! has moments `Wₙ = ⟨z|wⁿ|z⟩` and cumulants `Vₙ` with
//! `F = exp(Σ_{n≥1} Vₙ xⁿ/n!)`. The cumulants act as vertex weights on the
//! same labeled diagrams that count Bell numbers.

mod graph;
mod partition;
mod sequences;

pub use graph::{graph_expansion, GraphPath};
pub use partition::{
    free_boson_partition_function, partition_function_closed, partition_function_quadrature,
    termwise_divergence_report, DivergenceReport, DivergentTerm, ModelSpec, Quadrature,
    DEFAULT_PRECISION_DIGITS, DEFAULT_QUADRATURE_STEPS, DEFAULT_QUADRATURE_UPPER,
};
pub use sequences::{
    cumulants_to_moments, moments_to_cumulants, pfi_free_boson, pfi_general, pfi_json,
    CumulantSequence, JsonCoefficient, MomentSequence, Pfi, PFI_ORDER_BOUND,
};

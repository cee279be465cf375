//! Numeric cross-check of coherent expectations on a truncated Fock space.

use num_traits::ToPrimitive;

use super::word::{BosonWord, Letter};
use crate::series::Rational;
use crate::{Error, Result};

pub const DEFAULT_FOCK_DIM: usize = 32;

/// Relative tolerance the truncation estimate must meet.
pub const FOCK_TOLERANCE: f64 = 1e-10;

/// `⟨z|wⁿ|z⟩` from dense matrices, with an estimate of the truncation error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub dim: usize,
}

/// `e^{−|z|²/2} Σ_{k<dim} zᵏ/√(k!) |k⟩`, renormalized inside the truncated space.
fn coherent_vector(z: f64, dim: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(dim);
    let mut amp = (-z * z / 2.0).exp();
    for k in 0..dim {
        if k > 0 {
            amp *= z / (k as f64).sqrt();
        }
        v.push(amp);
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    v
}

fn apply(letter: Letter, v: &[f64]) -> Vec<f64> {
    let dim = v.len();
    let mut out = vec![0.0; dim];
    match letter {
        // a|k⟩ = √k |k−1⟩
        Letter::Annihilator => {
            for k in 1..dim {
                out[k - 1] = (k as f64).sqrt() * v[k];
            }
        }
        // a†|k⟩ = √(k+1) |k+1⟩, dropped at the top level
        Letter::Creator => {
            for k in 0..dim - 1 {
                out[k + 1] = ((k + 1) as f64).sqrt() * v[k];
            }
        }
    }
    out
}

fn truncated_expectation(word: &BosonWord, n: usize, z: f64, dim: usize) -> f64 {
    let ket = coherent_vector(z, dim);
    let mut v = ket.clone();
    for _ in 0..n {
        for &letter in word.letters().iter().rev() {
            v = apply(letter, &v);
        }
    }
    ket.iter().zip(&v).map(|(a, b)| a * b).sum()
}

/// `⟨z|wⁿ|z⟩` for real `z` on the span of `|0⟩…|dim−1⟩`.
///
/// The error estimate is the change against a space a quarter smaller; when
/// it exceeds [`FOCK_TOLERANCE`] relative to the value the call fails rather
/// than return a truncation artifact.
pub fn fock_oracle_expectation(
    word: &BosonWord,
    n: usize,
    z: &Rational,
    dim: usize,
) -> Result<FockEstimate> {
    if dim < 4 {
        return Err(Error::Convergence(format!(
            "Fock dimension {dim} is below the minimum of 4"
        )));
    }
    let z = z
        .to_f64()
        .ok_or_else(|| Error::Domain("z is not representable as f64".into()))?;
    let value = truncated_expectation(word, n, z, dim);
    let coarse = truncated_expectation(word, n, z, dim - dim / 4);
    let error_estimate = (value - coarse).abs() + dim as f64 * f64::EPSILON * value.abs();
    if !value.is_finite() || error_estimate > FOCK_TOLERANCE * value.abs().max(1.0) {
        return Err(Error::Convergence(format!(
            "truncation at dimension {dim} is unresolved (estimate {error_estimate:e}); increase the dimension"
        )));
    }
    Ok(FockEstimate {
        value,
        error_estimate,
        dim,
    })
}

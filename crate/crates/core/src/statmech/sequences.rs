use num_traits::One;
use serde_json::{json, Value};

use super::partition::ModelSpec;
use crate::boson::{egf_expectation, CoherentValue};
use crate::poly::YPolynomial;
use crate::series::{Coefficient, ExpSeries, Rational};
use crate::{Error, Result};

/// Largest PFI order accepted by [`pfi_general`].
pub const PFI_ORDER_BOUND: usize = 32;

/// `W₀…W_N` with `W₀ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<C> {
    values: Vec<C>,
}

impl<C: Coefficient> MomentSequence<C> {
    pub fn new(values: Vec<C>) -> Result<Self> {
        match values.first() {
            Some(w0) if w0.is_one() => Ok(MomentSequence { values }),
            Some(_) => Err(Error::Domain("moment sequences need W0 = 1".into())),
            None => Err(Error::Domain("moment sequences need at least W0".into())),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        self.values.get(n)
    }

    pub fn as_series(&self) -> ExpSeries<C> {
        ExpSeries::from_coefficients(self.values.clone()).expect("W0 is present")
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Result<MomentSequence<D>> {
        MomentSequence::new(self.values.iter().map(f).collect())
    }
}

/// `V₁…V_N`; index 0 is not part of the sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantSequence<C> {
    values: Vec<C>,
}

impl<C: Coefficient> CumulantSequence<C> {
    /// `values[0]` is `V₁`.
    pub fn new(values: Vec<C>) -> Self {
        CumulantSequence { values }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    /// `Vₖ` for `1 ≤ k ≤ order`.
    pub fn get(&self, k: usize) -> Option<&C> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// `Σ Vₙ xⁿ/n!` with zero constant term.
    pub fn as_series(&self) -> ExpSeries<C> {
        let mut coeffs = Vec::with_capacity(self.values.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.values.iter().cloned());
        ExpSeries::from_coefficients(coeffs).expect("non-empty")
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> CumulantSequence<D> {
        CumulantSequence::new(self.values.iter().map(f).collect())
    }
}

/// `V` with `Σ Vₙ xⁿ/n! = log Σ Wₙ xⁿ/n!`.
pub fn moments_to_cumulants<C: Coefficient>(w: &MomentSequence<C>) -> Result<CumulantSequence<C>> {
    let log = w.as_series().log()?;
    Ok(CumulantSequence::new(log.into_coefficients().split_off(1)))
}

/// `W` with `Σ Wₙ xⁿ/n! = exp Σ Vₙ xⁿ/n!`.
pub fn cumulants_to_moments<C: Coefficient>(v: &CumulantSequence<C>) -> MomentSequence<C> {
    let exp = v
        .as_series()
        .exp()
        .expect("zero constant term by construction");
    MomentSequence::new(exp.into_coefficients()).expect("exp has constant term 1")
}

/// Free-boson PFI `⟨z|exp(x a†a)|z⟩ = exp(ybar(eˣ−1))`: coefficients are the
/// Bell polynomials `Bₙ(ybar)`.
pub fn pfi_free_boson(order: usize) -> ExpSeries<YPolynomial<Rational>> {
    let ybar = YPolynomial::monomial(Rational::one(), 1);
    ExpSeries::exp_x_minus_one(order)
        .scale_by(&ybar)
        .exp()
        .expect("eˣ−1 has zero constant term")
}

/// Moments and cumulants of a PFI.
#[derive(Clone, Debug, PartialEq)]
pub struct Pfi<C> {
    pub moments: MomentSequence<C>,
    pub cumulants: CumulantSequence<C>,
}

/// `Wₙ(z) = ⟨z|wⁿ|z⟩` from normal ordering and `Vₙ(z)` from the series log.
pub fn pfi_general(model: &ModelSpec, order: usize) -> Result<Pfi<CoherentValue>> {
    if order > PFI_ORDER_BOUND {
        return Err(Error::Bound(format!(
            "PFI order limited to {PFI_ORDER_BOUND}, got {order}"
        )));
    }
    let series = egf_expectation(model.word(), order);
    let moments = MomentSequence::new(series.into_coefficients())?;
    let cumulants = moments_to_cumulants(&moments)?;
    Ok(Pfi { moments, cumulants })
}

/// Coefficient kinds with a JSON rendering.
pub trait JsonCoefficient {
    fn to_json(&self) -> Value;
}

impl JsonCoefficient for Rational {
    /// `"p/q"`, integers without the denominator.
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonCoefficient for YPolynomial<Rational> {
    /// Coefficient list, index = power of `ybar`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.coefficients()
                .iter()
                .map(JsonCoefficient::to_json)
                .collect(),
        )
    }
}

impl JsonCoefficient for CoherentValue {
    fn to_json(&self) -> Value {
        CoherentValue::to_json(self)
    }
}

/// `{"order": N, "W": [...], "V": [...]}`
pub fn pfi_json<C: Coefficient + JsonCoefficient>(pfi: &Pfi<C>) -> String {
    let w: Vec<Value> = pfi
        .moments
        .values()
        .iter()
        .map(JsonCoefficient::to_json)
        .collect();
    let v: Vec<Value> = pfi
        .cumulants
        .values()
        .iter()
        .map(JsonCoefficient::to_json)
        .collect();
    json!({"order": pfi.moments.order(), "W": w, "V": v}).to_string()
}

use std::fmt;
use std::str::FromStr;

use dashu_float::DBig;

use crate::boson::BosonWord;
use crate::combinatorics::{bell_polynomial, Natural};
use crate::poly::YPolynomial;
use crate::{Error, Result};

pub const DEFAULT_PRECISION_DIGITS: usize = 30;
pub const DEFAULT_QUADRATURE_UPPER: f64 = 60.0;
pub const DEFAULT_QUADRATURE_STEPS: usize = 20_000;

/// `H = ε·w(a, a†)` at inverse temperature `β`; `x = −βε < 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelSpec {
    word: BosonWord,
    energy_scale: DBig,
    beta: DBig,
}

fn decimal(x: f64) -> Result<DBig> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("{x} is not a finite number")));
    }
    DBig::from_str(&format!("{x:e}")).map_err(|e| Error::Domain(e.to_string()))
}

impl ModelSpec {
    pub fn new(word: BosonWord, energy_scale: DBig, beta: DBig) -> Result<Self> {
        if energy_scale <= DBig::ZERO {
            return Err(Error::Domain("the energy scale must be positive".into()));
        }
        if beta <= DBig::ZERO {
            return Err(Error::Domain(
                "the inverse temperature must be positive".into(),
            ));
        }
        Ok(ModelSpec {
            word,
            energy_scale,
            beta,
        })
    }

    pub fn from_f64(word: BosonWord, energy_scale: f64, beta: f64) -> Result<Self> {
        Self::new(word, decimal(energy_scale)?, decimal(beta)?)
    }

    /// `H = a†a` with `β = 1` and `ε = βε`.
    pub fn free_boson(beta_eps: DBig) -> Result<Self> {
        Self::new(BosonWord::number_operator(), beta_eps, DBig::ONE)
    }

    pub fn word(&self) -> &BosonWord {
        &self.word
    }

    pub fn energy_scale(&self) -> &DBig {
        &self.energy_scale
    }

    pub fn beta(&self) -> &DBig {
        &self.beta
    }

    pub fn beta_eps(&self) -> DBig {
        &self.beta * &self.energy_scale
    }

    /// `x = −βε` as `f64`.
    pub fn x(&self) -> f64 {
        -self.beta_eps().to_f64().value()
    }

    fn require_free_boson(&self) -> Result<()> {
        if self.word != BosonWord::number_operator() {
            return Err(Error::Domain(format!(
                "closed-form partition functions are only available for w = ca, got '{}'",
                self.word
            )));
        }
        Ok(())
    }
}

/// `Z = 1/(1 − e^{−βε})` to `digits` significant decimal digits.
pub fn free_boson_partition_function(beta_eps: &DBig, digits: usize) -> Result<DBig> {
    if *beta_eps <= DBig::ZERO {
        return Err(Error::Domain(
            "the geometric series diverges for beta*eps <= 0".into(),
        ));
    }
    let magnitude = beta_eps.to_f64().value();
    // 1 − e^{−t} ≈ t cancels about log10(1/t) digits for small t
    let cancellation = if magnitude < 1.0 {
        (-magnitude.log10()).ceil() as usize
    } else {
        0
    };
    let working = digits.max(1) + 10 + cancellation;
    let t = beta_eps.clone().with_precision(working).value();
    let one = DBig::ONE.with_precision(working).value();
    let z = &one / (&one - (-t).exp());
    Ok(z.with_precision(digits.max(1)).value())
}

/// Closed form for the free boson `w = a†a`.
pub fn partition_function_closed(model: &ModelSpec, digits: usize) -> Result<DBig> {
    model.require_free_boson()?;
    free_boson_partition_function(&model.beta_eps(), digits)
}

/// Numeric value of `∫₀^∞ e^{y(eˣ−1)} dy` with a rigorous error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error_bound: f64,
    /// Exact tail `∫_upper^∞`, already included in `value`.
    pub tail: f64,
}

/// Composite Simpson on `[0, upper]` plus the analytic tail
/// `e^{upper(eˣ−1)}/(1−eˣ)`.
///
/// With `c = eˣ − 1 < 0` the integrand `e^{cy}` has `|f⁗| ≤ c⁴`, so the
/// Simpson error is at most `upper·h⁴·c⁴/180`; a rounding allowance of
/// `steps·ε_mach·value` is added.
pub fn partition_function_quadrature(
    model: &ModelSpec,
    upper: f64,
    steps: usize,
) -> Result<Quadrature> {
    model.require_free_boson()?;
    let x = model.x();
    if x >= 0.0 {
        return Err(Error::Domain("the integral diverges for x >= 0".into()));
    }
    if !(upper.is_finite() && upper > 0.0) {
        return Err(Error::Domain(
            "the quadrature upper limit must be positive and finite".into(),
        ));
    }
    if steps == 0 {
        return Err(Error::Domain("quadrature needs at least one step".into()));
    }
    let steps = steps + steps % 2;
    let c = x.exp_m1();
    let h = upper / steps as f64;
    let f = |y: f64| (c * y).exp();

    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..steps {
        let y = i as f64 * h;
        if i % 2 == 1 {
            odd += f(y);
        } else {
            even += f(y);
        }
    }
    let body = h / 3.0 * (f(0.0) + 4.0 * odd + 2.0 * even + f(upper));
    let tail = f(upper) / -c;
    let value = body + tail;
    let error_bound = upper * h.powi(4) * c.powi(4) / 180.0 + steps as f64 * f64::EPSILON * value;
    Ok(Quadrature {
        value,
        error_bound,
        tail,
    })
}

/// One term `Bₙ(y) xⁿ/n!` of the free-boson partition-function integrand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivergentTerm {
    pub n: usize,
    pub polynomial: YPolynomial<Natural>,
    /// Powers `k` whose `∫₀^R yᵏ dy = R^{k+1}/(k+1)` grows without bound.
    pub divergent_powers: Vec<usize>,
    /// The term's `y`-integral diverges: it has a divergent power and all
    /// coefficients share one sign, so nothing cancels.
    pub diverges: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivergenceReport {
    pub terms: Vec<DivergentTerm>,
}

impl DivergenceReport {
    pub fn all_divergent(&self) -> bool {
        self.terms.iter().all(|t| t.diverges)
    }
}

impl fmt::Display for DivergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            let powers: Vec<String> = t.divergent_powers.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "n={}: B_{}(y) = {}; divergent powers {{{}}}; {}",
                t.n,
                t.n,
                t.polynomial,
                powers.join(","),
                if t.diverges { "diverges" } else { "finite" }
            )?;
        }
        if self.all_divergent() {
            write!(
                f,
                "every term diverges: the y-integral cannot be taken term by term"
            )
        } else {
            write!(f, "some terms are finite")
        }
    }
}

/// Inspects each term of `Σ Bₙ(y) xⁿ/n!` for `n = 0..=order` and reports
/// whether its integral over `y ∈ [0, ∞)` exists.
pub fn termwise_divergence_report(order: usize) -> DivergenceReport {
    let terms = (0..=order)
        .map(|n| {
            let polynomial = bell_polynomial(n);
            // every power k >= 0 has an unbounded antiderivative on [0, ∞)
            let divergent_powers = polynomial.support();
            let diverges = !divergent_powers.is_empty();
            DivergentTerm {
                n,
                polynomial,
                divergent_powers,
                diverges,
            }
        })
        .collect();
    DivergenceReport { terms }
}

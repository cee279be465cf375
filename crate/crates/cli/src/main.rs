//! `bosonhopf` command-line interface.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use bosonhopf::boson::{
    fock_oracle_expectation, normal_order, BosonWord, CoherentValue, DEFAULT_FOCK_DIM,
};
use bosonhopf::combinatorics::{bell_numbers, stirling2, StirlingTable, ENUMERATION_BOUND};
use bosonhopf::diagrams::{
    code_monomial, enumerate_labeled_diagrams, shape_census_closed, shape_of, to_dot,
};
use bosonhopf::hopf::{check_element, check_hopf_axioms, AlgebraElement, Alphabet, CheckOptions};
use bosonhopf::series::DEFAULT_ORDER;
use bosonhopf::statmech::{
    cumulants_to_moments, graph_expansion, moments_to_cumulants, partition_function_closed,
    partition_function_quadrature, pfi_general, pfi_json, termwise_divergence_report,
    CumulantSequence, GraphPath, ModelSpec, Pfi, DEFAULT_PRECISION_DIGITS,
    DEFAULT_QUADRATURE_STEPS, DEFAULT_QUADRATURE_UPPER, PFI_ORDER_BOUND,
};
use bosonhopf::{Error, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use dashu_float::DBig;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

const TABLE_BOUND: usize = 1000;
const LISTING_BOUND: usize = 8;
const CENSUS_BOUND: usize = 40;
const HOPF_BOUND: usize = 12;

#[derive(Parser)]
#[command(
    name = "bosonhopf",
    version,
    about = "Exact boson combinatorics and the Hopf algebras POLY and BELL"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Plain,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Poly,
    Bell,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Quadrature,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Path {
    Enumerate,
    Shapes,
}

#[derive(Subcommand)]
enum Command {
    /// Table of Bell numbers B(0..=max-n)
    Bell { max_n: usize },
    /// Stirling numbers of the second kind S(n, k)
    Stirling {
        n: usize,
        /// Print only S(n, k) instead of the whole row
        k: Option<usize>,
    },
    /// Normal-ordered form of a word over {a, c}, where c stands for a†
    NormalOrder {
        word: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Labeled diagrams on n lines with their shapes and monomial codes
    Diagrams {
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: DiagramFormat,
        /// Print only the shape census, from the closed-form multiplicities
        #[arg(long)]
        census: bool,
    },
    /// Check the Hopf algebra axioms on a basis and random combinations
    HopfCheck {
        #[arg(value_enum)]
        mode: Mode,
        weight_bound: usize,
        #[arg(long, default_value_t = CheckOptions::default().random_samples)]
        samples: usize,
        #[arg(long, default_value_t = CheckOptions::default().seed)]
        seed: u64,
        /// Check a single element such as "3/2*y1^2*y3 + y2" instead
        #[arg(long)]
        element: Option<String>,
    },
    /// Moments W and cumulants V of <z|exp(x w)|z>
    Pfi {
        word: String,
        #[arg(long, env = "BOSONHOPF_ORDER", default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Evaluate at this value of ybar = |z|^2 (balanced words only)
        #[arg(long, conflicts_with = "z", allow_hyphen_values = true)]
        ybar: Option<String>,
        /// Evaluate at this real value of z
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Compare W with the truncated Fock-space oracle (requires --z)
        #[arg(long, requires = "z")]
        fock: bool,
        #[arg(long, env = "BOSONHOPF_FOCK_DIM", default_value_t = DEFAULT_FOCK_DIM)]
        fock_dim: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Free-boson partition function Z = 1/(1 - exp(-beta*eps))
    Z {
        /// A decimal number or "lnK" for the natural logarithm of K
        #[arg(allow_hyphen_values = true)]
        beta_eps: String,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_QUADRATURE_UPPER)]
        upper: f64,
        #[arg(long, default_value_t = DEFAULT_QUADRATURE_STEPS)]
        steps: usize,
        /// Significant decimal digits of the closed form
        #[arg(long, env = "BOSONHOPF_PRECISION", default_value_t = DEFAULT_PRECISION_DIGITS)]
        precision: usize,
    },
    /// W_n as a sum over labeled diagrams with vertex weights V_k
    GraphExpansion {
        n: usize,
        /// Comma-separated V_1, V_2, ...; missing entries are 0, default all 1
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, value_enum, default_value = "enumerate")]
        path: Path,
    },
    /// Term-by-term divergence of the free-boson partition function
    DivergenceReport {
        #[arg(env = "BOSONHOPF_ORDER")]
        order: usize,
    },
}

enum Failure {
    Lib(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 3,
        Error::Domain(_) => 4,
        Error::Bound(_) | Error::Range { .. } => 5,
        Error::Convergence(_) => 6,
    }
}

fn bound(what: &str, limit: usize, got: usize) -> Result<(), Error> {
    if got > limit {
        return Err(Error::Bound(format!(
            "{what} is limited to {limit}, got {got}"
        )));
    }
    Ok(())
}

/// `p/q`, an integer, or a plain decimal such as `-0.25`.
fn parse_rational(text: &str) -> Result<Rational, Error> {
    let invalid = || Error::Parse {
        position: 1,
        message: format!("'{text}' is not a rational number"),
    };
    let trimmed = text.trim();
    if let Some((p, q)) = trimmed.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| invalid())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| invalid())?;
        if q.is_zero() {
            return Err(Error::Parse {
                position: trimmed.find('/').unwrap() + 2,
                message: "zero denominator".into(),
            });
        }
        return Ok(Rational::new(p, q));
    }
    let (int, frac) = trimmed.split_once('.').unwrap_or((trimmed, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) || (int.is_empty() && frac.is_empty()) {
        return Err(invalid());
    }
    let digits = if int == "-" || int == "+" || int.is_empty() {
        format!("{int}0{frac}")
    } else {
        format!("{int}{frac}")
    };
    let numer = BigInt::from_str(&digits).map_err(|_| invalid())?;
    Ok(Rational::new(
        numer,
        BigInt::from(10u32).pow(frac.len() as u32),
    ))
}

fn parse_word(text: &str) -> Result<BosonWord, Error> {
    BosonWord::from_str(text)
}

fn cmd_bell(max_n: usize) -> Outcome {
    bound("max-n", TABLE_BOUND, max_n)?;
    let mut out = String::new();
    for (n, b) in bell_numbers(max_n).iter().enumerate() {
        writeln!(out, "{n} {b}").unwrap();
    }
    Ok(out)
}

fn cmd_stirling(n: usize, k: Option<usize>) -> Outcome {
    bound("n", TABLE_BOUND, n)?;
    if let Some(k) = k {
        return Ok(format!("{}\n", stirling2(n, k)?));
    }
    let table = StirlingTable::new(n);
    let mut out = String::new();
    for (k, s) in table.row(n).iter().enumerate() {
        writeln!(out, "{k} {s}").unwrap();
    }
    Ok(out)
}

fn cmd_normal_order(word: &str, format: Format) -> Outcome {
    let nf = normal_order(&parse_word(word)?);
    Ok(match format {
        Format::Plain => format!("{nf}\n"),
        Format::Json => format!("{}\n", nf.to_json()),
    })
}

fn census_footer(n: usize) -> String {
    let entries: Vec<String> = shape_census_closed(n)
        .iter()
        .map(|(s, m)| format!("{}:{m}", code_monomial(s)))
        .collect();
    entries.join(", ")
}

fn cmd_diagrams(n: usize, format: DiagramFormat, census: bool) -> Outcome {
    if census {
        bound("census mode", CENSUS_BOUND, n)?;
        return Ok(match format {
            DiagramFormat::Plain => format!("census: {}\n", census_footer(n)),
            DiagramFormat::Dot => {
                return Err(Error::Domain(
                    "DOT output needs the full listing, drop --census".into(),
                )
                .into())
            }
        });
    }
    if n > LISTING_BOUND {
        return Err(Error::Bound(format!(
            "full listing is limited to n <= {LISTING_BOUND}, got {n}; use --census for larger n"
        ))
        .into());
    }
    let mut out = String::new();
    match format {
        DiagramFormat::Plain => {
            for d in enumerate_labeled_diagrams(n) {
                let shape = shape_of(&d);
                writeln!(out, "{d}  shape {shape}  code {}", code_monomial(&shape)).unwrap();
            }
            writeln!(out, "census: {}", census_footer(n)).unwrap();
        }
        DiagramFormat::Dot => {
            for d in enumerate_labeled_diagrams(n) {
                writeln!(out, "// {d}").unwrap();
                out.push_str(&to_dot(&d));
            }
        }
    }
    Ok(out)
}

fn cmd_hopf_check(
    mode: Mode,
    weight_bound: usize,
    samples: usize,
    seed: u64,
    element: Option<&str>,
) -> Outcome {
    let alphabet = match mode {
        Mode::Poly => Alphabet::Poly,
        Mode::Bell => Alphabet::Bell,
    };
    if let Some(text) = element {
        let a = AlgebraElement::from_str(text)?;
        if !alphabet.admits_element(&a) {
            return Err(Error::Domain(format!(
                "{a} is not an element of {}",
                alphabet.name().to_uppercase()
            ))
            .into());
        }
        let results = check_element(&a);
        let mut out = format!("mode: {}\nelement: {a}\n", alphabet.name());
        for r in &results {
            writeln!(
                out,
                "{}: {}",
                r.axiom.name(),
                if r.passed() { "pass" } else { "FAIL" }
            )
            .unwrap();
        }
        let passed = results.iter().all(|r| r.passed());
        writeln!(out, "result: {}", if passed { "pass" } else { "FAIL" }).unwrap();
        return if passed {
            Ok(out)
        } else {
            Err(Failure::Check(out))
        };
    }
    bound("weight bound", HOPF_BOUND, weight_bound)?;
    let options = CheckOptions {
        random_samples: samples,
        seed,
        ..CheckOptions::default()
    };
    let report = check_hopf_axioms(alphabet, weight_bound, options);
    let text = report.to_string();
    let text = if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    };
    if report.all_passed() {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn push_sequence(out: &mut String, name: &str, first: usize, values: &[impl std::fmt::Display]) {
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{name}{} = {v}", i + first).unwrap();
    }
}

fn fock_values(
    word: &BosonWord,
    order: usize,
    z: &Rational,
    dim: usize,
) -> Result<Vec<(f64, f64)>, Error> {
    (0..=order)
        .map(|n| fock_oracle_expectation(word, n, z, dim).map(|e| (e.value, e.error_estimate)))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_pfi(
    word: &str,
    order: usize,
    ybar: Option<&str>,
    z: Option<&str>,
    fock: bool,
    fock_dim: usize,
    format: Format,
) -> Outcome {
    let word = parse_word(word)?;
    let model = ModelSpec::new(word.clone(), DBig::ONE, DBig::ONE)?;
    let symbolic = pfi_general(&model, order)?;
    let numeric: Option<Pfi<Rational>> = match (ybar, z) {
        (Some(text), _) => {
            if !symbolic
                .moments
                .values()
                .iter()
                .all(CoherentValue::is_balanced)
            {
                return Err(Error::Domain(format!(
                    "'{word}' is not balanced, so W depends on z and zbar separately; use --z"
                ))
                .into());
            }
            let y = parse_rational(text)?;
            let moments = symbolic
                .moments
                .map(|w| w.evaluate_ybar(&y).expect("balanced"))?;
            Some(Pfi {
                cumulants: moments_to_cumulants(&moments)?,
                moments,
            })
        }
        (None, Some(text)) => {
            let z = parse_rational(text)?;
            let moments = symbolic.moments.map(|w| w.evaluate_real(&z))?;
            Some(Pfi {
                cumulants: moments_to_cumulants(&moments)?,
                moments,
            })
        }
        (None, None) => None,
    };
    let fock = match (fock, z) {
        (true, Some(text)) => Some(fock_values(&word, order, &parse_rational(text)?, fock_dim)?),
        _ => None,
    };

    match format {
        Format::Json => {
            let text = match &numeric {
                Some(p) => pfi_json(p),
                None => pfi_json(&symbolic),
            };
            let mut value: Value = serde_json::from_str(&text).expect("library JSON is valid");
            if let Some(f) = &fock {
                value["fock"] = Value::Array(f.iter().map(|&(v, _)| Value::from(v)).collect());
            }
            Ok(format!("{value}\n"))
        }
        Format::Plain => {
            let mut out = format!("order: {order}\n");
            match &numeric {
                Some(p) => {
                    let w: Vec<String> =
                        p.moments.values().iter().map(ToString::to_string).collect();
                    let v: Vec<String> = p
                        .cumulants
                        .values()
                        .iter()
                        .map(ToString::to_string)
                        .collect();
                    writeln!(out, "W = [{}]", w.join(", ")).unwrap();
                    writeln!(out, "V = [{}]", v.join(", ")).unwrap();
                }
                None => {
                    push_sequence(&mut out, "W", 0, symbolic.moments.values());
                    push_sequence(&mut out, "V", 1, symbolic.cumulants.values());
                }
            }
            if let Some(f) = &fock {
                for (n, (v, err)) in f.iter().enumerate() {
                    writeln!(
                        out,
                        "fock W{n} = {v:.12} (error estimate {err:.1e}, dim {fock_dim})"
                    )
                    .unwrap();
                }
            }
            Ok(out)
        }
    }
}

/// Decimal or `lnK`, evaluated with `digits` significant digits.
fn parse_beta_eps(text: &str, digits: usize) -> Result<DBig, Error> {
    let invalid = |offset: usize| Error::Parse {
        position: offset + 1,
        message: format!("'{text}' is not a decimal number or lnK"),
    };
    let trimmed = text.trim();
    if let Some(arg) = trimmed.strip_prefix("ln") {
        let arg = arg.trim_start_matches('(').trim_end_matches(')');
        let k = DBig::from_str(arg).map_err(|_| invalid(2))?;
        if k <= DBig::ZERO {
            return Err(Error::Domain(format!(
                "logarithm of a non-positive number in '{text}'"
            )));
        }
        return Ok(k.with_precision(digits + 20).value().ln());
    }
    DBig::from_str(trimmed).map_err(|_| invalid(0))
}

/// Pads a plain decimal string with trailing zeros to `digits` significant digits.
fn pad_digits(text: String, digits: usize) -> String {
    if text.contains(['e', 'E']) {
        return text;
    }
    let significant = text
        .trim_start_matches('-')
        .replace('.', "")
        .trim_start_matches('0')
        .len();
    if significant >= digits {
        return text;
    }
    let mut out = text;
    if !out.contains('.') {
        out.push('.');
    }
    out.extend(std::iter::repeat_n('0', digits - significant));
    out
}

fn cmd_z(beta_eps: &str, method: Method, upper: f64, steps: usize, precision: usize) -> Outcome {
    let precision = precision.max(1);
    let value = parse_beta_eps(beta_eps, precision)?;
    let model = ModelSpec::free_boson(value.clone())
        .map_err(|_| Error::Domain(format!("beta*eps must be positive, got {beta_eps}")))?;
    let mut out = format!("beta*eps: {}\n", beta_eps.trim());
    let closed = match method {
        Method::Closed | Method::Both => {
            let z = partition_function_closed(&model, precision)?;
            writeln!(out, "closed: {}", pad_digits(z.to_string(), precision)).unwrap();
            Some(z.to_f64().value())
        }
        Method::Quadrature => None,
    };
    if let Method::Quadrature | Method::Both = method {
        let q = partition_function_quadrature(&model, upper, steps)?;
        writeln!(
            out,
            "quadrature: {:.15} (error bound {:.1e})",
            q.value, q.error_bound
        )
        .unwrap();
        if let Some(c) = closed {
            writeln!(out, "difference: {:.1e}", (q.value - c).abs()).unwrap();
        }
    }
    Ok(out)
}

fn cmd_graph_expansion(n: usize, v: Option<&str>, path: Path) -> Outcome {
    let mut weights = match v {
        Some(text) => text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![Rational::one(); n],
    };
    if weights.len() < n {
        weights.resize(n, Rational::zero());
    }
    let path = match path {
        Path::Enumerate => GraphPath::Enumerate,
        Path::Shapes => GraphPath::Shapes,
    };
    if let GraphPath::Enumerate = path {
        bound("enumeration", ENUMERATION_BOUND, n)?;
    }
    let w = graph_expansion(&CumulantSequence::new(weights.clone()), n, path)?;
    let check = cumulants_to_moments(&CumulantSequence::new(weights));
    let series = check.get(n).expect("order covers n");
    let mut out = format!("W{n} = {w}\n");
    if *series != w {
        writeln!(out, "series exponential gives {series}").unwrap();
        return Err(Failure::Check(out));
    }
    Ok(out)
}

fn cmd_divergence_report(order: usize) -> Outcome {
    bound("order", PFI_ORDER_BOUND, order)?;
    let report = termwise_divergence_report(order);
    let text = report.to_string();
    Ok(if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Bell { max_n } => cmd_bell(max_n),
        Command::Stirling { n, k } => cmd_stirling(n, k),
        Command::NormalOrder { word, format } => cmd_normal_order(&word, format),
        Command::Diagrams { n, format, census } => cmd_diagrams(n, format, census),
        Command::HopfCheck {
            mode,
            weight_bound,
            samples,
            seed,
            element,
        } => cmd_hopf_check(mode, weight_bound, samples, seed, element.as_deref()),
        Command::Pfi {
            word,
            order,
            ybar,
            z,
            fock,
            fock_dim,
            format,
        } => cmd_pfi(
            &word,
            order,
            ybar.as_deref(),
            z.as_deref(),
            fock,
            fock_dim,
            format,
        ),
        Command::Z {
            beta_eps,
            method,
            upper,
            steps,
            precision,
        } => cmd_z(&beta_eps, method, upper, steps, precision),
        Command::GraphExpansion { n, v, path } => cmd_graph_expansion(n, v.as_deref(), path),
        Command::DivergenceReport { order } => cmd_divergence_report(order),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

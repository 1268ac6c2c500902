//! Command-line values and their resolution into library parameters.

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use gdo_core::repcls::{ExactRepSpec, RepSpec};
use gdo_core::{AlgebraParams, AlgebraPreset, ExactParams, Rational};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Float,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// A number from the command line. Literals containing `/` and plain
/// integers are rational; anything else is a float.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar {
    pub float: f64,
    pub exact: Option<BigRational>,
}

impl Scalar {
    pub fn exact(r: BigRational) -> Self {
        Self {
            float: r.to_f64().unwrap_or(f64::NAN),
            exact: Some(r),
        }
    }

    pub fn from_ratio(r: Rational) -> Self {
        Self::exact(BigRational::new(
            BigInt::from(*r.numer()),
            BigInt::from(*r.denom()),
        ))
    }

    pub fn require_exact(&self, name: &str) -> Result<BigRational, CliError> {
        self.exact.clone().ok_or_else(|| {
            CliError::parse(format!(
                "exact mode needs a rational {name} (write p/q), got {}",
                self.float
            ))
        })
    }

    pub fn require_small(&self, name: &str) -> Result<Rational, CliError> {
        let r = self.require_exact(name)?;
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Ok(Rational::new(n, d)),
            _ => Err(CliError::parse(format!(
                "{name} = {r} does not fit a 64-bit rational"
            ))),
        }
    }
}

pub fn parse_scalar(name: &str, text: &str) -> Result<Scalar, CliError> {
    let t = text.trim();
    let is_integer = {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if t.contains('/') || is_integer {
        let r: BigRational = t
            .trim_start_matches('+')
            .parse()
            .map_err(|_| CliError::parse(format!("{name}: cannot read {text:?} as a rational")))?;
        return Ok(Scalar::exact(r));
    }
    let x: f64 = t
        .parse()
        .map_err(|_| CliError::parse(format!("{name}: cannot read {text:?} as a number")))?;
    if !x.is_finite() {
        return Err(CliError::parse(format!("{name} must be finite")));
    }
    Ok(Scalar {
        float: x,
        exact: None,
    })
}

/// Comma list (`0.5,2,3/2`) or evenly spaced range (`start:stop:count`).
pub fn parse_list(name: &str, text: &str) -> Result<Vec<Scalar>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 3 {
        let (a, b) = (parse_scalar(name, parts[0])?, parse_scalar(name, parts[1])?);
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| CliError::parse(format!("{name}: bad count in {text:?}")))?;
        if count == 0 {
            return Err(CliError::parse(format!("{name}: empty range")));
        }
        if count == 1 {
            return Ok(vec![a]);
        }
        let steps = count - 1;
        return Ok((0..count)
            .map(|i| match (&a.exact, &b.exact) {
                (Some(x), Some(y)) => Scalar::exact(
                    x + (y - x) * BigRational::new(BigInt::from(i), BigInt::from(steps)),
                ),
                _ => Scalar {
                    float: a.float + (b.float - a.float) * i as f64 / steps as f64,
                    exact: None,
                },
            })
            .collect());
    }
    text.split(',').map(|s| parse_scalar(name, s)).collect()
}

/// Integer range `a..b` (inclusive) or a single integer.
pub fn parse_index_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::parse(format!("cannot read {text:?} as an index range a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?,
        ),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(CliError::parse(format!("empty index range {text:?}")));
    }
    Ok((lo, hi))
}

/// Algebra parameters: a preset, explicit exponents, or a preset with some
/// exponents overridden.
#[derive(Args, Clone, Debug, Default)]
pub struct ParamArgs {
    /// Named algebra: tamm-dancoff, arik-coon, quantum, restricted, feinsilver, undeformed.
    #[arg(long)]
    pub preset: Option<String>,
    /// Deformation parameter q > 0.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Exponent α in the right-hand side q^{αN+β}; overrides the preset.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Exponent β in the right-hand side q^{αN+β}; overrides the preset.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Exponent γ multiplying a⁺a; overrides the preset.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

/// Parameters in both float and (when available) exact form.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub preset: Option<AlgebraPreset>,
    pub q: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl ParamArgs {
    pub fn preset(&self) -> Result<Option<AlgebraPreset>, CliError> {
        self.preset
            .as_deref()
            .map(AlgebraPreset::from_name)
            .transpose()
            .map_err(CliError::from)
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let preset = self.preset()?;
        let exps = preset.map(|p| p.exponents());
        let pick = |name: &str,
                    text: &Option<String>,
                    default: Option<Rational>|
         -> Result<Scalar, CliError> {
            match (text, default) {
                (Some(t), _) => parse_scalar(name, t),
                (None, Some(r)) => Ok(Scalar::from_ratio(r)),
                (None, None) => Err(CliError::parse(format!(
                    "missing --{name} (or give --preset)"
                ))),
            }
        };
        let q = match (&self.q, preset) {
            (Some(t), Some(AlgebraPreset::Undeformed)) if parse_scalar("q", t)?.float != 1.0 => {
                return Err(CliError::parse("the undeformed preset lives at q = 1"));
            }
            (_, Some(AlgebraPreset::Undeformed)) => Scalar::from_ratio(Rational::from_integer(1)),
            (Some(t), _) => parse_scalar("q", t)?,
            (None, _) => return Err(CliError::parse("missing --q")),
        };
        let r = Resolved {
            preset,
            q,
            alpha: pick("alpha", &self.alpha, exps.map(|e| e.alpha))?,
            beta: pick("beta", &self.beta, exps.map(|e| e.beta))?,
            gamma: pick("gamma", &self.gamma, exps.map(|e| e.gamma))?,
        };
        r.float()?;
        Ok(r)
    }
}

impl Resolved {
    pub fn float(&self) -> Result<AlgebraParams, CliError> {
        Ok(AlgebraParams::new(
            self.q.float,
            self.alpha.float,
            self.beta.float,
            self.gamma.float,
        )?)
    }

    pub fn exact(&self) -> Result<(ExactParams, BigRational), CliError> {
        let q = self.q.require_exact("q")?;
        if q <= BigRational::zero() {
            return Err(CliError::parse("q must be positive"));
        }
        let e = ExactParams::new(
            self.alpha.require_small("alpha")?,
            self.beta.require_small("beta")?,
            self.gamma.require_small("gamma")?,
        );
        Ok((e, q))
    }

    /// Same exponents with a different `q`.
    pub fn with_q(&self, q: Scalar) -> Self {
        Self { q, ..self.clone() }
    }
}

/// Parameters as they appear in every output document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsOut {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<AlgebraPreset>,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Rational spellings of `(q, α, β, γ)` in exact mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<[String; 4]>,
}

impl ParamsOut {
    pub fn new(r: &Resolved, mode: Mode) -> Result<Self, CliError> {
        let p = r.float()?;
        let exact = match mode {
            Mode::Float => None,
            Mode::Exact => {
                let (e, q) = r.exact()?;
                Some([
                    q.to_string(),
                    e.alpha.to_string(),
                    e.beta.to_string(),
                    e.gamma.to_string(),
                ])
            }
        };
        Ok(Self {
            preset: r.preset,
            q: p.q,
            alpha: p.alpha,
            beta: p.beta,
            gamma: p.gamma,
            exact,
        })
    }
}

/// `(ν₀, λ₀)` seed.
#[derive(Args, Clone, Debug)]
pub struct SeedArgs {
    /// N-eigenvalue of the seed vector.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub nu0: String,
    /// a⁺a-eigenvalue of the seed vector (non-negative).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda0: String,
}

pub fn float_spec(r: &Resolved, nu0: &Scalar, lambda0: &Scalar) -> Result<RepSpec, CliError> {
    Ok(RepSpec::new(r.float()?, nu0.float, lambda0.float)?)
}

pub fn exact_spec(r: &Resolved, nu0: &Scalar, lambda0: &Scalar) -> Result<ExactRepSpec, CliError> {
    let (exponents, q) = r.exact()?;
    Ok(ExactRepSpec {
        exponents,
        q,
        nu0: nu0.require_small("nu0")?,
        lambda0: lambda0.require_exact("lambda0")?,
    })
}

pub fn check_tol(tol: Option<f64>, default: f64) -> Result<f64, CliError> {
    match tol {
        None => Ok(default),
        Some(t) if t > 0.0 && t.is_finite() => Ok(t),
        Some(t) => Err(CliError::parse(format!("--tol must be positive, got {t}"))),
    }
}

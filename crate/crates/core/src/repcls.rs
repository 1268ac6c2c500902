//! Classification of the irreducible Hermitian representations with simple
//! `N`-spectrum.
//!
//! A seed vector with `Nψ₀ = ν₀ψ₀` and `a⁺aψ₀ = λ₀ψ₀` generates the chain
//!
//! ```text
//! λ_n = q^{γn} λ₀ + q^{αν₀} F(n) = (λ₀ − B) q^{γn} + B q^{αn},
//! B   = q^{αν₀+β} / (q^α − q^γ)                                  (α ≠ γ)
//! ```
//!
//! and everything about the representation (domain case, subcase, family,
//! sign of the selector, limits of `λ_n`, operator class) follows from the two
//! exponential rates `γ ln q`, `α ln q` and the sign of `λ₀ − B`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{to_f64, AlgebraParams, ExactParams, ParamError};
use crate::qexpr::{QExpr, QExprError, Rational};
use crate::qnum::{f_number_exact, f_number_real, Sign};

/// Default relative tolerance for the threshold comparison.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default number of downward steps when searching for the lowest weight.
pub const DEFAULT_SCAN_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("classification is undefined at the classical point q = 1")]
    ClassicalPoint,
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("seed eigenvalue of a⁺a must be finite and non-negative, got {0}")]
    NegativeSeed(f64),
    #[error("seed N-eigenvalue must be finite, got {0}")]
    InvalidNu0(f64),
    #[error("no lowest weight found within {0} steps")]
    NoLowestWeight(u64),
    #[error("exact evaluation failed: {0}")]
    Exact(#[from] QExprError),
}

/// Parameters plus the seed eigenvalues `(ν₀, λ₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepSpec {
    pub params: AlgebraParams,
    pub nu0: f64,
    pub lambda0: f64,
}

impl RepSpec {
    pub fn new(params: AlgebraParams, nu0: f64, lambda0: f64) -> Result<Self, ClassifyError> {
        params.validate()?;
        if !nu0.is_finite() {
            return Err(ClassifyError::InvalidNu0(nu0));
        }
        if !(lambda0.is_finite() && lambda0 >= 0.0) {
            return Err(ClassifyError::NegativeSeed(lambda0));
        }
        Ok(Self {
            params,
            nu0,
            lambda0,
        })
    }
}

/// Seed with rational exponents, rational `q`, rational `ν₀` and `λ₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactRepSpec {
    pub exponents: ExactParams,
    pub q: BigRational,
    pub nu0: Rational,
    pub lambda0: BigRational,
}

impl ExactRepSpec {
    pub fn to_float(&self) -> RepSpec {
        RepSpec {
            params: self.exponents.at(crate::qexpr::big_to_f64(&self.q)),
            nu0: to_f64(self.nu0),
            lambda0: crate::qexpr::big_to_f64(&self.lambda0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcase {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    /// Lowest-weight family; `nu0_prime` is the `N`-eigenvalue of the vacuum.
    QuasiFock { nu0_prime: f64 },
    /// Two-sided family without lowest or highest weight.
    TwoParamSingular {
        nu0_star: f64,
        lambda0_star: f64,
        constrained: bool,
    },
    /// One-parameter two-sided family on which `aa⁺ = q^α a⁺a`.
    Strange { nu0: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::QuasiFock { .. } => "quasi-fock",
            Family::TwoParamSingular { .. } => "two-param-singular",
            Family::Strange { .. } => "strange",
        }
    }

    pub fn is_two_sided(&self) -> bool {
        !matches!(self, Family::QuasiFock { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Asymptote {
    ToZeroPlus,
    ToZeroMinus,
    ToPlusInfinity,
    ToMinusInfinity,
    Finite(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorClass {
    TraceClass,
    Bounded,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepDescriptor {
    pub domain_case: u8,
    pub subcase: Subcase,
    pub family: Family,
    pub k_sign: Sign,
    pub asym_plus: Asymptote,
    pub asym_minus: Asymptote,
    pub operator_class: OperatorClass,
    pub fock_additional_relation_holds: bool,
}

/// `λ_n` from the closed form.
///
/// Below the seed `F(n) < 0` and the seed-plus-`F` form cancels, so there the
/// two exponential modes `(λ₀ − B)q^{γn} + Bq^{αn}` are summed instead.
pub fn lambda_at(spec: &RepSpec, n: i64) -> f64 {
    let p = &spec.params;
    let nf = n as f64;
    if n < 0 && !p.alpha_equals_gamma() {
        let b = pure_mode_coefficient(p, spec.nu0);
        return (spec.lambda0 - b) * p.pow(p.gamma * nf) + b * p.pow(p.alpha * nf);
    }
    p.pow(p.gamma * nf) * spec.lambda0 + p.pow(p.alpha * spec.nu0) * f_number_real(nf, p)
}

/// `λ_n` as an exact expression in `q` (with `λ₀` a rational constant).
pub fn lambda_at_exact(
    exponents: &ExactParams,
    nu0: Rational,
    lambda0: &BigRational,
    n: i64,
) -> QExpr {
    let seed = QExpr::constant(lambda0.clone()).shift(exponents.gamma * n);
    seed + f_number_exact(n, exponents).shift(exponents.alpha * nu0)
}

/// Iterates `λ_{n+1} = q^γ λ_n + q^{α(n+ν₀)+β}` from `λ₀` (backwards for `n < 0`).
pub fn lambda_by_recurrence(spec: &RepSpec, n: i64) -> f64 {
    let p = &spec.params;
    let step = |k: i64| p.pow(p.alpha * (k as f64 + spec.nu0) + p.beta);
    let qg = p.pow(p.gamma);
    let mut lambda = spec.lambda0;
    if n >= 0 {
        for k in 0..n {
            lambda = qg * lambda + step(k);
        }
    } else {
        for k in (n..0).rev() {
            lambda = (lambda - step(k)) / qg;
        }
    }
    lambda
}

/// `B = q^{αν₀+β}/(q^α − q^γ)`, the value of `λ₀` that kills the `q^{γn}` mode.
fn pure_mode_coefficient(p: &AlgebraParams, nu0: f64) -> f64 {
    p.pow(p.alpha * nu0 + p.beta) / (p.pow(p.alpha) - p.pow(p.gamma))
}

/// The critical seed `λ₀* = q^{α(ν₀−1)+β}/(1 − q^{γ−α})`.
///
/// It exists only when `(α − γ) ln q > 0`; otherwise every `λ₀ ≥ 0` leads to a
/// lowest weight.
pub fn threshold(spec: &RepSpec) -> Option<f64> {
    let p = &spec.params;
    if p.alpha_equals_gamma() || (p.alpha - p.gamma) * p.ln_q() <= 0.0 {
        return None;
    }
    Some(pure_mode_coefficient(p, spec.nu0))
}

/// Domain of `(γ, α)`: 1 and 2 for `γ ≥ 0`, 3 and 4 for `γ < 0`, 5 for `α = γ`.
pub fn domain_case(p: &AlgebraParams) -> u8 {
    if p.alpha_equals_gamma() {
        5
    } else if p.gamma >= 0.0 {
        if p.alpha < p.gamma {
            1
        } else {
            2
        }
    } else if p.alpha < p.gamma {
        3
    } else {
        4
    }
}

fn subcase_float(spec: &RepSpec, tol: f64) -> Subcase {
    match threshold(spec) {
        None => Subcase::A,
        Some(b) if (spec.lambda0 - b).abs() <= tol * b.abs() => Subcase::C,
        Some(b) if spec.lambda0 < b => Subcase::A,
        Some(_) => Subcase::B,
    }
}

/// Vacuum `N`-eigenvalue: scans `n = 0, −1, −2, …` for the first `λ_n ≤ 0`.
pub fn quasi_fock_base(spec: &RepSpec) -> Result<f64, ClassifyError> {
    quasi_fock_base_with(spec, DEFAULT_TOL, DEFAULT_SCAN_BOUND, |_| None)
}

/// Scan with an explicit tolerance, bound and exact zero oracle.
///
/// `exact_zero(n)` may answer whether `λ_n` vanishes exactly; it is consulted
/// only for near-zero candidates.
fn quasi_fock_base_with(
    spec: &RepSpec,
    tol: f64,
    bound: u64,
    exact_zero: impl Fn(i64) -> Option<bool>,
) -> Result<f64, ClassifyError> {
    let p = &spec.params;
    let mut n: i64 = 0;
    for _ in 0..=bound {
        let seed_part = p.pow(p.gamma * n as f64) * spec.lambda0;
        let chain_part = p.pow(p.alpha * spec.nu0) * f_number_real(n as f64, p);
        let lambda = seed_part + chain_part;
        let near_zero = lambda.abs() <= tol * (seed_part.abs() + chain_part.abs());
        if near_zero && exact_zero(n) != Some(false) {
            return Ok(spec.nu0 + n as f64);
        }
        if lambda <= 0.0 {
            return Ok(spec.nu0 + n as f64 + 1.0);
        }
        n -= 1;
    }
    Err(ClassifyError::NoLowestWeight(bound))
}

/// `λ_n = Σ coeff·e^{rate·n}`, or `e^{rate·n}(λ₀ + slope·n)` when `α = γ`.
#[derive(Clone, Copy, Debug)]
enum LambdaForm {
    Exponentials([(f64, f64); 2]),
    Linear { rate: f64, slope: f64 },
}

fn lambda_form(p: &AlgebraParams, nu0: f64, lambda0: f64, subcase: Subcase) -> LambdaForm {
    let ln_q = p.ln_q();
    if p.alpha_equals_gamma() {
        let slope = p.pow(p.alpha * nu0 + p.beta - p.gamma);
        return LambdaForm::Linear {
            rate: p.gamma * ln_q,
            slope,
        };
    }
    let b = pure_mode_coefficient(p, nu0);
    let a = if subcase == Subcase::C {
        0.0
    } else {
        lambda0 - b
    };
    LambdaForm::Exponentials([(a, p.gamma * ln_q), (b, p.alpha * ln_q)])
}

fn limit(form: LambdaForm, direction: f64) -> Asymptote {
    match form {
        LambdaForm::Exponentials(terms) => {
            let dominant = terms
                .iter()
                .filter(|(c, _)| *c != 0.0)
                .map(|&(c, r)| (c, r * direction))
                .max_by(|x, y| x.1.total_cmp(&y.1));
            let Some((c, r)) = dominant else {
                return Asymptote::Finite(0.0);
            };
            if r > 0.0 {
                if c > 0.0 {
                    Asymptote::ToPlusInfinity
                } else {
                    Asymptote::ToMinusInfinity
                }
            } else if r == 0.0 {
                Asymptote::Finite(c)
            } else if c > 0.0 {
                Asymptote::ToZeroPlus
            } else {
                Asymptote::ToZeroMinus
            }
        }
        // The linear factor wins against a vanishing rate and loses against a
        // decaying exponential, whose sign it then sets.
        LambdaForm::Linear { rate, slope, .. } => {
            let r = rate * direction;
            let sign_far = slope * direction;
            match (r > 0.0, r == 0.0, sign_far > 0.0) {
                (true, _, true) | (false, true, true) => Asymptote::ToPlusInfinity,
                (true, _, false) | (false, true, false) => Asymptote::ToMinusInfinity,
                (false, false, true) => Asymptote::ToZeroPlus,
                (false, false, false) => Asymptote::ToZeroMinus,
            }
        }
    }
}

/// Limits of `λ_n` as `n → +∞` and `n → −∞` for the seed chain.
pub fn asymptotics(spec: &RepSpec) -> (Asymptote, Asymptote) {
    asymptotics_for(spec, subcase_float(spec, DEFAULT_TOL))
}

fn asymptotics_for(spec: &RepSpec, subcase: Subcase) -> (Asymptote, Asymptote) {
    let form = lambda_form(&spec.params, spec.nu0, spec.lambda0, subcase);
    (limit(form, 1.0), limit(form, -1.0))
}

/// Whether the subcase-B chain grows in both directions, so that it has a
/// minimum to re-base at.
pub fn grows_both_ways(p: &AlgebraParams) -> bool {
    let ln_q = p.ln_q();
    p.alpha * ln_q > 0.0 && p.gamma * ln_q < 0.0
}

/// Open interval for `λ₀` that makes the seed the strict minimum of its chain:
/// `−q^{αν₀}F(−1)/(q^{−γ} − 1) < λ₀ < q^{αν₀}F(1)/(1 − q^γ)`.
pub fn constraint_window(p: &AlgebraParams, nu0: f64) -> (f64, f64) {
    let scale = p.pow(p.alpha * nu0);
    let lower = -scale * f_number_real(-1.0, p) / (p.pow(-p.gamma) - 1.0);
    let upper = scale * f_number_real(1.0, p) / (1.0 - p.pow(p.gamma));
    (lower, upper)
}

pub fn in_constraint_window(p: &AlgebraParams, nu0: f64, lambda0: f64) -> bool {
    let (lo, hi) = constraint_window(p, nu0);
    lo < lambda0 && lambda0 < hi
}

/// Integer index of the smallest `λ_n` for a chain growing in both directions.
fn minimizing_index(spec: &RepSpec) -> i64 {
    let p = &spec.params;
    let ln_q = p.ln_q();
    let (a, b) = (p.gamma * ln_q, p.alpha * ln_q);
    let pure = pure_mode_coefficient(p, spec.nu0);
    let mixed = spec.lambda0 - pure;
    let n_star = libm::log(-mixed * a / (pure * b)) / (b - a);
    let lo = libm::floor(n_star) as i64;
    [lo - 1, lo, lo + 1, lo + 2]
        .into_iter()
        .min_by(|x, y| lambda_at(spec, *x).total_cmp(&lambda_at(spec, *y)))
        .unwrap_or(0)
}

fn two_param_family(spec: &RepSpec) -> Family {
    if grows_both_ways(&spec.params) {
        let n0 = minimizing_index(spec);
        Family::TwoParamSingular {
            nu0_star: spec.nu0 + n0 as f64,
            lambda0_star: lambda_at(spec, n0),
            constrained: true,
        }
    } else {
        Family::TwoParamSingular {
            nu0_star: spec.nu0,
            lambda0_star: spec.lambda0,
            constrained: false,
        }
    }
}

/// Operator class of `a⁺a` over the representation's own index set.
fn operator_class(p: &AlgebraParams, family: &Family) -> OperatorClass {
    let ln_q = p.ln_q();
    match family {
        Family::QuasiFock { .. } => {
            // q^{αν₀′}F(n) for n ≥ 0: growth set by the larger rate.
            let rate = if p.alpha_equals_gamma() {
                p.gamma * ln_q
            } else {
                (p.alpha * ln_q).max(p.gamma * ln_q)
            };
            if rate < 0.0 {
                OperatorClass::TraceClass
            } else if rate == 0.0 && !p.alpha_equals_gamma() {
                OperatorClass::Bounded
            } else {
                OperatorClass::Unbounded
            }
        }
        Family::Strange { .. } => {
            if p.alpha * ln_q == 0.0 {
                OperatorClass::Bounded
            } else {
                OperatorClass::Unbounded
            }
        }
        // Both modes are present with positive weight, and at most one of
        // them can have a vanishing rate.
        Family::TwoParamSingular { .. } => OperatorClass::Unbounded,
    }
}

/// Closed form of `Σ_{n≥0} q^{αν₀′}F(n)` for a trace-class quasi-Fock family.
pub fn lambda_series_sum(p: &AlgebraParams, nu0_prime: f64) -> Option<f64> {
    let family = Family::QuasiFock { nu0_prime };
    if operator_class(p, &family) != OperatorClass::TraceClass {
        return None;
    }
    let lead = p.pow(p.alpha * nu0_prime + p.beta);
    if p.alpha_equals_gamma() {
        let d = 1.0 - p.pow(p.gamma);
        return Some(lead / (d * d));
    }
    let (qa, qg) = (p.pow(p.alpha), p.pow(p.gamma));
    Some(lead / (qa - qg) * (1.0 / (1.0 - qa) - 1.0 / (1.0 - qg)))
}

/// `Σ_{0 ≤ n < terms} q^{αν₀′}F(n)`.
pub fn lambda_partial_sum(p: &AlgebraParams, nu0_prime: f64, terms: u32) -> f64 {
    let scale = p.pow(p.alpha * nu0_prime);
    (0..terms)
        .map(|n| scale * f_number_real(f64::from(n), p))
        .sum()
}

fn assemble(spec: &RepSpec, subcase: Subcase, nu0_prime: Option<f64>) -> RepDescriptor {
    let p = &spec.params;
    let family = match subcase {
        Subcase::A => Family::QuasiFock {
            nu0_prime: nu0_prime.unwrap_or(spec.nu0),
        },
        Subcase::B => two_param_family(spec),
        Subcase::C => Family::Strange { nu0: spec.nu0 },
    };
    let k_sign = match subcase {
        Subcase::A => Sign::Positive,
        Subcase::B => Sign::Negative,
        Subcase::C => Sign::Zero,
    };
    let fock_additional_relation_holds = match family {
        Family::QuasiFock { nu0_prime } => nu0_prime == 0.0 || p.alpha_equals_gamma(),
        _ => false,
    };
    let (asym_plus, asym_minus) = asymptotics_for(spec, subcase);
    RepDescriptor {
        domain_case: domain_case(p),
        subcase,
        family,
        k_sign,
        asym_plus,
        asym_minus,
        operator_class: operator_class(p, &family),
        fock_additional_relation_holds,
    }
}

/// Full verdict in float mode; `tol` is the relative width of the threshold
/// comparison and of the lowest-weight zero test.
pub fn classify(spec: &RepSpec, tol: f64) -> Result<RepDescriptor, ClassifyError> {
    RepSpec::new(spec.params, spec.nu0, spec.lambda0)?;
    if spec.params.is_classical() {
        return Err(ClassifyError::ClassicalPoint);
    }
    let subcase = subcase_float(spec, tol);
    let base = match subcase {
        Subcase::A => Some(quasi_fock_base_with(spec, tol, DEFAULT_SCAN_BOUND, |_| {
            None
        })?),
        _ => None,
    };
    Ok(assemble(spec, subcase, base))
}

/// Verdict with exact threshold and lowest-weight tests at rational `q`.
///
/// Float comparisons still locate candidates; every "equal" decision is made
/// by exact evaluation.
pub fn classify_exact(spec: &ExactRepSpec) -> Result<RepDescriptor, ClassifyError> {
    let float = spec.to_float();
    RepSpec::new(float.params, float.nu0, float.lambda0)?;
    if float.params.is_classical() {
        return Err(ClassifyError::ClassicalPoint);
    }
    let e = &spec.exponents;
    let subcase = match threshold(&float) {
        None => Subcase::A,
        Some(b) => {
            // λ₀(q^α − q^γ) − q^{αν₀+β} vanishes exactly iff λ₀ is the threshold.
            let gap = QExpr::constant(spec.lambda0.clone())
                * (QExpr::q_pow(e.alpha) - QExpr::q_pow(e.gamma))
                - QExpr::q_pow(e.alpha * spec.nu0 + e.beta);
            if gap.is_zero_at(&spec.q)? {
                Subcase::C
            } else if float.lambda0 < b {
                Subcase::A
            } else {
                Subcase::B
            }
        }
    };
    let base = match subcase {
        Subcase::A => Some(quasi_fock_base_with(
            &float,
            DEFAULT_TOL,
            DEFAULT_SCAN_BOUND,
            |n| {
                lambda_at_exact(e, spec.nu0, &spec.lambda0, n)
                    .is_zero_at(&spec.q)
                    .ok()
            },
        )?),
        _ => None,
    };
    Ok(assemble(&float, subcase, base))
}

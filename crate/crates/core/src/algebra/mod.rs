//! Algebra-level constructs: parameters and named presets, the central
//! element, the selector `K = aa⁺ − q^α a⁺a`, the two-relation algebras and the
//! dressing map from the undeformed oscillator.

mod central;
mod double;
mod dressing;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qexpr::Rational;

pub use central::{
    central_element_diagonal, selector_diagonal, CentralDiagonal, CentralPolynomial, CentralSeries,
    SelectorDiagonal, SelectorSign,
};
pub use double::{
    double_relation_solve, double_relation_solve_exact, DoubleRelationError,
    DoubleRelationSolution, ExactDiagonalForms, ExactDoubleRelation, ExpTerm, NExpSum, Pairing,
};
pub use dressing::{dress_from_undeformed, undeformed_fock, DressingError};

/// Tolerance for treating `α = γ` in float mode.
pub const ALPHA_GAMMA_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("q must be a positive finite number, got {0}")]
    InvalidQ(f64),
    #[error("parameter {name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("operation is undefined at the classical point q = 1")]
    ClassicalPoint,
    #[error("unknown preset {0:?}")]
    UnknownPreset(alloc::string::String),
}

/// The quadruple `(q, α, β, γ)` of `W^γ_{α,β}(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AlgebraParams {
    pub fn new(q: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self, ParamError> {
        let p = Self {
            q,
            alpha,
            beta,
            gamma,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.q.is_finite() && self.q > 0.0) {
            return Err(ParamError::InvalidQ(self.q));
        }
        for (name, value) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
        ] {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name, value });
            }
        }
        Ok(())
    }

    pub fn is_classical(&self) -> bool {
        self.q == 1.0
    }

    pub fn ln_q(&self) -> f64 {
        libm::log(self.q)
    }

    /// `q^x`.
    pub fn pow(&self, x: f64) -> f64 {
        libm::exp(x * self.ln_q())
    }

    pub fn alpha_equals_gamma(&self) -> bool {
        (self.alpha - self.gamma).abs() <= ALPHA_GAMMA_TOL
    }

    pub fn with_q(self, q: f64) -> Self {
        Self { q, ..self }
    }

    /// `(1/q, −α, −β, −γ)`: the same relation written in `q⁻¹`.
    pub fn inverted(self) -> Self {
        Self {
            q: 1.0 / self.q,
            alpha: -self.alpha,
            beta: -self.beta,
            gamma: -self.gamma,
        }
    }
}

/// Rational exponents `(α, β, γ)`; `q` stays symbolic in exact mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl ExactParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(alpha.into(), beta.into(), gamma.into())
    }

    pub fn at(&self, q: f64) -> AlgebraParams {
        AlgebraParams {
            q,
            alpha: to_f64(self.alpha),
            beta: to_f64(self.beta),
            gamma: to_f64(self.gamma),
        }
    }
}

pub(crate) fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Second defining relation `aa⁺ − q^γ̃ a⁺a = q^{α̃N+β̃}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationTriple {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl From<ExactParams> for RelationTriple {
    fn from(p: ExactParams) -> Self {
        Self {
            alpha: to_f64(p.alpha),
            beta: to_f64(p.beta),
            gamma: to_f64(p.gamma),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraPreset {
    TammDancoff,
    ArikCoon,
    #[serde(rename = "quantum")]
    QuantumDeformed,
    #[serde(rename = "restricted")]
    RestrictedSymmetric,
    Feinsilver,
    Undeformed,
}

impl AlgebraPreset {
    pub const ALL: [AlgebraPreset; 6] = [
        Self::TammDancoff,
        Self::ArikCoon,
        Self::QuantumDeformed,
        Self::RestrictedSymmetric,
        Self::Feinsilver,
        Self::Undeformed,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Self::TammDancoff => "tamm-dancoff",
            Self::ArikCoon => "arik-coon",
            Self::QuantumDeformed => "quantum",
            Self::RestrictedSymmetric => "restricted",
            Self::Feinsilver => "feinsilver",
            Self::Undeformed => "undeformed",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, ParamError> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| ParamError::UnknownPreset(name.into()))
    }

    pub fn exponents(self) -> ExactParams {
        match self {
            Self::TammDancoff => ExactParams::from_ints(1, 0, 1),
            Self::ArikCoon => ExactParams::from_ints(0, 0, 1),
            Self::QuantumDeformed | Self::RestrictedSymmetric => ExactParams::from_ints(-1, 0, 1),
            Self::Feinsilver => ExactParams::from_ints(-2, 0, 0),
            Self::Undeformed => ExactParams::from_ints(0, 0, 0),
        }
    }

    /// The partner relation postulated together with the main one, if any.
    pub fn second_relation(self) -> Option<ExactParams> {
        match self {
            Self::RestrictedSymmetric => Some(ExactParams::from_ints(1, 0, -1)),
            _ => None,
        }
    }

    /// Parameters at the given `q`; the undeformed oscillator always sits at `q = 1`.
    pub fn params(self, q: f64) -> AlgebraParams {
        match self {
            Self::Undeformed => self.exponents().at(1.0),
            _ => self.exponents().at(q),
        }
    }
}

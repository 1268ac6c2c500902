//! Algebras with two defining relations
//!
//! ```text
//! aa⁺ − q^γ a⁺a = q^{αN+β},    aa⁺ − q^γ̃ a⁺a = q^{α̃N+β̃}
//! ```
//!
//! With `γ ≠ γ̃` both `a⁺a` and `aa⁺` are fixed functions of `N`. Over the
//! common denominator `D = q^{−γ} − q^{−γ̃}`:
//!
//! ```text
//! a⁺a = (q^{αN+β−γ−γ̃} − q^{α̃N+β̃−γ−γ̃}) / D
//! aa⁺ = (q^{αN+β−γ}   − q^{α̃N+β̃−γ̃})   / D
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AlgebraParams, ExactParams, RelationTriple, ALPHA_GAMMA_TOL};
use crate::qexpr::{QExpr, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DoubleRelationError {
    #[error("γ = γ̃ forces α = α̃ and makes the second relation redundant")]
    DegenerateRelations,
    #[error("the common denominator vanishes at the classical point q = 1")]
    ClassicalPoint,
}

/// The two pairings under which only nonsingular representations survive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Pairing {
    /// `(α̃, β̃, γ̃) = (−α, −β, −γ)`: the relation and its `q ↔ q⁻¹` image.
    pub symmetric: bool,
    /// `α̃ = γ`, `γ̃ = α`.
    pub swap: bool,
}

/// `coeff·q^{rate·N + shift}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpTerm {
    pub coeff: f64,
    pub rate: f64,
    pub shift: f64,
}

fn eval_terms(terms: &[ExpTerm], p: &AlgebraParams, n: f64) -> f64 {
    terms
        .iter()
        .map(|t| t.coeff * p.pow(t.rate * n + t.shift))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleRelationSolution {
    pub params: AlgebraParams,
    pub second: RelationTriple,
    pub pairing: Pairing,
    /// `D = q^{−γ} − q^{−γ̃}`.
    pub denominator: f64,
    /// Numerators over `D`.
    pub a_plus_a: Vec<ExpTerm>,
    pub a_a_plus: Vec<ExpTerm>,
    pub selector: Vec<ExpTerm>,
}

impl DoubleRelationSolution {
    pub fn a_plus_a_at(&self, n: f64) -> f64 {
        eval_terms(&self.a_plus_a, &self.params, n) / self.denominator
    }

    pub fn a_a_plus_at(&self, n: f64) -> f64 {
        eval_terms(&self.a_a_plus, &self.params, n) / self.denominator
    }

    pub fn selector_at(&self, n: f64) -> f64 {
        eval_terms(&self.selector, &self.params, n) / self.denominator
    }

    /// Scaled residuals of the two relations at `N = n`.
    pub fn residuals_at(&self, n: f64) -> (f64, f64) {
        let p = &self.params;
        let (apa, aap) = (self.a_plus_a_at(n), self.a_a_plus_at(n));
        let residual = |gamma: f64, alpha: f64, beta: f64| {
            let (x, y, z) = (aap, p.pow(gamma) * apa, p.pow(alpha * n + beta));
            crate::report::scaled(x - y - z, x.abs() + y.abs() + z.abs())
        };
        (
            residual(p.gamma, p.alpha, p.beta),
            residual(self.second.gamma, self.second.alpha, self.second.beta),
        )
    }
}

fn pairing_of(first: [f64; 3], second: [f64; 3]) -> Pairing {
    let eq = |x: f64, y: f64| (x - y).abs() <= ALPHA_GAMMA_TOL;
    let [a, b, g] = first;
    let [at, bt, gt] = second;
    Pairing {
        symmetric: eq(at, -a) && eq(bt, -b) && eq(gt, -g),
        swap: eq(at, g) && eq(gt, a),
    }
}

/// Closed forms of `a⁺a`, `aa⁺` and `K = aa⁺ − q^α a⁺a` as functions of `N`.
pub fn double_relation_solve(
    params: &AlgebraParams,
    second: RelationTriple,
) -> Result<DoubleRelationSolution, DoubleRelationError> {
    let AlgebraParams {
        alpha, beta, gamma, ..
    } = *params;
    let RelationTriple {
        alpha: at,
        beta: bt,
        gamma: gt,
    } = second;
    if (gamma - gt).abs() <= ALPHA_GAMMA_TOL {
        return Err(DoubleRelationError::DegenerateRelations);
    }
    if params.is_classical() {
        return Err(DoubleRelationError::ClassicalPoint);
    }
    let t = |coeff: f64, rate: f64, shift: f64| ExpTerm { coeff, rate, shift };
    let a_plus_a = alloc::vec![
        t(1.0, alpha, beta - gamma - gt),
        t(-1.0, at, bt - gamma - gt)
    ];
    let a_a_plus = alloc::vec![t(1.0, alpha, beta - gamma), t(-1.0, at, bt - gt)];
    let mut selector = a_a_plus.clone();
    selector.extend(a_plus_a.iter().map(|x| ExpTerm {
        coeff: -x.coeff,
        shift: x.shift + alpha,
        ..*x
    }));
    Ok(DoubleRelationSolution {
        params: *params,
        second,
        pairing: pairing_of([alpha, beta, gamma], [at, bt, gt]),
        denominator: params.pow(-gamma) - params.pow(-gt),
        a_plus_a,
        a_a_plus,
        selector,
    })
}

/// `Σ_r C_r(q)·q^{rN}`: exact sums of exponentials in `N` with `q`-power-sum
/// coefficients, keyed by the rate `r`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NExpSum(BTreeMap<Rational, QExpr>);

impl NExpSum {
    pub fn term(coeff: i64, rate: Rational, shift: Rational) -> Self {
        let mut s = Self::default();
        s.add_assign(rate, QExpr::monomial(coeff, shift));
        s
    }

    fn add_assign(&mut self, rate: Rational, c: QExpr) {
        let entry = self.0.entry(rate).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.0.remove(&rate);
        }
    }

    pub fn add(&self, other: &NExpSum) -> NExpSum {
        let mut out = self.clone();
        for (r, c) in &other.0 {
            out.add_assign(*r, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NExpSum) -> NExpSum {
        self.add(&other.scale(&QExpr::constant(-1)))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QExpr) -> NExpSum {
        let mut out = NExpSum::default();
        for (r, x) in &self.0 {
            out.add_assign(*r, x * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &QExpr)> {
        self.0.iter()
    }

    /// Value at a rational `N`-eigenvalue, as an expression in `q`.
    pub fn at(&self, n: Rational) -> QExpr {
        self.0
            .iter()
            .fold(QExpr::zero(), |acc, (r, c)| acc + c.shift(*r * n))
    }
}

/// Exact counterpart of [`DoubleRelationSolution`]; numerators share the
/// denominator `D = q^{−γ} − q^{−γ̃}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDiagonalForms {
    pub denominator: QExpr,
    pub a_plus_a: NExpSum,
    pub a_a_plus: NExpSum,
    pub selector: NExpSum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDoubleRelation {
    pub forms: ExactDiagonalForms,
    pub pairing: Pairing,
    /// `aa⁺ − q^γ a⁺a − D·q^{αN+β}` as an identity in `N`; zero iff the first
    /// relation holds for every `N`.
    pub first_defect: NExpSum,
    pub second_defect: NExpSum,
}

impl ExactDoubleRelation {
    pub fn holds(&self) -> bool {
        self.first_defect.is_zero() && self.second_defect.is_zero()
    }
}

pub fn double_relation_solve_exact(
    first: &ExactParams,
    second: &ExactParams,
) -> Result<ExactDoubleRelation, DoubleRelationError> {
    let ExactParams { alpha, beta, gamma } = *first;
    let ExactParams {
        alpha: at,
        beta: bt,
        gamma: gt,
    } = *second;
    if gamma == gt {
        return Err(DoubleRelationError::DegenerateRelations);
    }
    let term = NExpSum::term;
    let a_plus_a = term(1, alpha, beta - gamma - gt).add(&term(-1, at, bt - gamma - gt));
    let a_a_plus = term(1, alpha, beta - gamma).add(&term(-1, at, bt - gt));
    let selector = a_a_plus.sub(&a_plus_a.scale(&QExpr::q_pow(alpha)));
    let denominator = QExpr::q_pow(-gamma) - QExpr::q_pow(-gt);
    let defect = |g: Rational, a: Rational, b: Rational| {
        a_a_plus
            .sub(&a_plus_a.scale(&QExpr::q_pow(g)))
            .sub(&term(1, a, b).scale(&denominator))
    };
    let first_defect = defect(gamma, alpha, beta);
    let second_defect = defect(gt, at, bt);
    let pairing = Pairing {
        symmetric: at == -alpha && bt == -beta && gt == -gamma,
        swap: at == gamma && gt == alpha,
    };
    Ok(ExactDoubleRelation {
        forms: ExactDiagonalForms {
            denominator,
            a_plus_a,
            a_a_plus,
            selector,
        },
        pairing,
        first_defect,
        second_defect,
    })
}

//! The generalized basic number
//!
//! ```text
//! F^γ_{α,β}(n; q) = q^β (q^{nα} − q^{nγ}) / (q^α − q^γ)    α ≠ γ
//!                 = n q^{β + γ(n−1)}                      α = γ
//! ```
//!
//! and its factorial. `F` satisfies `F(n+1) − q^γ F(n) = q^{αn+β}` with
//! `F(0) = 0`, is symmetric in `α ↔ γ`, and tends to `n` as `q → 1`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraParams, ExactParams};
use crate::qexpr::{GaussianRational, QExpr, QMonomial, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QnumError {
    #[error("classical-limit offset must lie in (0, 0.1), got {0}")]
    EpsilonOutOfRange(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x > 0.0 {
            Sign::Positive
        } else if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

/// Named specializations of the basic number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BasicNumberKind {
    Generalized {
        alpha: f64,
        beta: f64,
        gamma: f64,
    },
    /// `[n; q] = (qⁿ − 1)/(q − 1)`
    Standard,
    /// `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`
    Symmetric,
    /// `n q^{n−1}`
    TammDancoff,
    /// `q^{2(1−n)} [n; q²]`
    Feinsilver,
}

impl BasicNumberKind {
    /// Rational exponents of the named kinds; `None` for `Generalized`.
    pub fn exact_exponents(self) -> Option<ExactParams> {
        match self {
            Self::Generalized { .. } => None,
            Self::Standard => Some(ExactParams::from_ints(0, 0, 1)),
            Self::Symmetric => Some(ExactParams::from_ints(-1, 0, 1)),
            Self::TammDancoff => Some(ExactParams::from_ints(1, 0, 1)),
            Self::Feinsilver => Some(ExactParams::from_ints(-2, 0, 0)),
        }
    }

    pub fn params(self, q: f64) -> AlgebraParams {
        match self {
            Self::Generalized { alpha, beta, gamma } => AlgebraParams {
                q,
                alpha,
                beta,
                gamma,
            },
            other => other.exact_exponents().expect("named kind").at(q),
        }
    }
}

/// `F(n)` in float mode.
pub fn f_number(n: i64, params: &AlgebraParams) -> f64 {
    f_number_real(n as f64, params)
}

/// `F(x)` for real `x`; used where `N` has non-integer eigenvalues.
///
/// The `α ≠ γ` branch is evaluated as `q^{β+γ(x−1)}·expm1(xδ)/expm1(δ)` with
/// `δ = (α−γ) ln q`, which stays accurate when `q^α` and `q^γ` nearly coincide.
pub fn f_number_real(x: f64, params: &AlgebraParams) -> f64 {
    let ln_q = params.ln_q();
    let prefactor = libm::exp((params.beta + params.gamma * (x - 1.0)) * ln_q);
    let delta = (params.alpha - params.gamma) * ln_q;
    if params.alpha_equals_gamma() || delta == 0.0 {
        return x * prefactor;
    }
    let direct = prefactor * libm::expm1(x * delta) / libm::expm1(delta);
    if direct.is_finite() && (direct != 0.0 || x == 0.0) {
        return direct;
    }
    // Far out on the chain the prefactor and the ratio under/overflow in
    // opposite directions. There |xδ| is large, so one power dominates the
    // difference q^{αx} − q^{γx} and it can be formed without cancellation.
    let numerator = libm::exp(params.alpha * x * ln_q) - libm::exp(params.gamma * x * ln_q);
    let scale = libm::exp((params.beta - params.gamma) * ln_q) / libm::expm1(delta);
    if numerator.is_nan() {
        // Both powers overflowed; the larger exponent decides the sign.
        let sign = if (params.alpha - params.gamma) * x * ln_q > 0.0 {
            1.0
        } else {
            -1.0
        };
        return sign * scale.signum() * f64::INFINITY;
    }
    numerator * scale
}

/// `F(n)` as an exact expression in `q`.
pub fn f_number_exact(n: i64, params: &ExactParams) -> QExpr {
    let ExactParams { alpha, beta, gamma } = *params;
    if n == 0 {
        return QExpr::zero();
    }
    let n_r = Rational::from_integer(n);
    if alpha == gamma {
        return QExpr::monomial(n, beta + gamma * (n_r - 1));
    }
    // (x^m − y^m)/(x − y) = Σ_{k<m} x^k y^{m−1−k} with x = q^α, y = q^γ, and
    // q^{−mα} − q^{−mγ} = −q^{−m(α+γ)}(q^{mα} − q^{mγ}) for negative n.
    let m = n.abs();
    let (sign, offset) = if n > 0 {
        (1, beta)
    } else {
        (-1, beta - (alpha + gamma) * m)
    };
    QExpr::from_terms((0..m).map(|k| {
        let exponent = offset + alpha * k + gamma * (m - 1 - k);
        QMonomial {
            coeff: GaussianRational::from_int(sign),
            exponent: exponent.into(),
        }
    }))
}

/// `F(1)·F(2)·…·F(n)`; the empty product is 1.
pub fn f_factorial(n: u32, params: &AlgebraParams) -> f64 {
    (1..=i64::from(n)).map(|k| f_number(k, params)).product()
}

pub fn f_factorial_exact(n: u32, params: &ExactParams) -> QExpr {
    (1..=i64::from(n)).fold(QExpr::one(), |acc, k| acc.mul(&f_number_exact(k, params)))
}

/// Sign of `F(n)` for `q > 0`, `q ≠ 1`.
///
/// `F(n) > 0` for `n > 0` and `F(0) = 0`. For `n < 0` the value is always
/// negative: the recurrence gives `F(−1) = −q^{β−α−γ}` and every further step
/// down keeps the sign, including when `γ = 0`.
pub fn sign_of(n: i64, _params: &AlgebraParams) -> Sign {
    Sign::of(n as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalLimit {
    pub value: f64,
    pub deviation: f64,
}

/// Evaluates `F(n)` at `q = 1 + ε` and reports `|F − n|`.
pub fn classical_limit_check(
    n: i64,
    epsilon: f64,
    exponents: &ExactParams,
) -> Result<ClassicalLimit, QnumError> {
    if !(epsilon > 0.0 && epsilon < 0.1) {
        return Err(QnumError::EpsilonOutOfRange(epsilon));
    }
    let value = f_number(n, &exponents.at(1.0 + epsilon));
    Ok(ClassicalLimit {
        value,
        deviation: (value - n as f64).abs(),
    })
}

/// The recurrence defect `F(n+1) − q^γ F(n) − q^{αn+β}` in exact mode.
pub fn recurrence_defect_exact(n: i64, params: &ExactParams) -> QExpr {
    let step = QExpr::q_pow(params.alpha * n + params.beta);
    f_number_exact(n + 1, params) - f_number_exact(n, params).shift(params.gamma) - step
}

/// The recurrence defect in float mode, scaled by the largest term.
pub fn recurrence_defect(n: i64, params: &AlgebraParams) -> f64 {
    let next = f_number(n + 1, params);
    let prev = params.pow(params.gamma) * f_number(n, params);
    let step = params.pow(params.alpha * n as f64 + params.beta);
    let scale = next.abs().max(prev.abs()).max(step.abs());
    if scale == 0.0 {
        return 0.0;
    }
    (next - prev - step).abs() / scale
}

/// Exact Gaussian-rational value of `F(n)` at rational `q`, when it is rational.
pub fn f_number_at_rational(
    n: i64,
    params: &ExactParams,
    q: &num_rational::BigRational,
) -> Option<GaussianRational> {
    f_number_exact(n, params).at_rational(q).ok()?.as_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn far_chain_values_stay_finite() {
        // q = 0.3, α = 0, γ = 1: F(n) = (1 − qⁿ)/(1 − q) even where qⁿ underflows.
        let p = AlgebraParams::new(0.3, 0.0, 0.0, 1.0).unwrap();
        let cap = 1.0 / (1.0 - 0.3);
        for n in [1000.0, 5000.0, 1e6] {
            assert!((f_number_real(n, &p) - cap).abs() <= 1e-13 * cap);
        }
        // q = 2, α = 1, γ = −1 at n = 2000: 2^{n−1}/(1 − 2^{−2}) overflows honestly.
        let p = AlgebraParams::new(2.0, 1.0, 0.0, -1.0).unwrap();
        assert_eq!(f_number_real(2000.0, &p), f64::INFINITY);
        assert_eq!(f_number_real(-2000.0, &p), f64::NEG_INFINITY);
    }

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn f_of_one_is_q_beta() {
        let p = AlgebraParams {
            q: 1.7,
            alpha: 0.3,
            beta: -1.25,
            gamma: 2.0,
        };
        assert!(approx(f_number(1, &p), p.pow(p.beta), 1e-14));
        let e = ExactParams::new(
            Rational::new(1, 3),
            Rational::new(-5, 4),
            Rational::from_integer(2),
        );
        assert_eq!(f_number_exact(1, &e), QExpr::q_pow(e.beta));
    }

    #[test]
    fn f_of_zero_vanishes() {
        let p = AlgebraParams {
            q: 0.4,
            alpha: 1.0,
            beta: 2.0,
            gamma: 1.0,
        };
        assert_eq!(f_number(0, &p), 0.0);
        assert!(f_number_exact(0, &ExactParams::from_ints(2, 1, -1)).is_zero());
    }

    #[test]
    fn symmetric_number_at_two() {
        // F(2) = q^-1 + q = 2.5 at q = 2
        let p = BasicNumberKind::Symmetric.params(2.0);
        assert!(approx(f_number(2, &p), 2.5, 1e-15));
        assert!(approx(f_factorial(2, &p), 2.5, 1e-15));
    }

    #[test]
    fn tamm_dancoff_is_n_q_pow_n_minus_one() {
        let e = BasicNumberKind::TammDancoff.exact_exponents().unwrap();
        assert_eq!(f_number_exact(3, &e), QExpr::monomial(3, 2));
    }

    #[test]
    fn factorial_edge_cases() {
        let e = ExactParams::new(
            Rational::new(1, 2),
            Rational::new(3, 2),
            Rational::from_integer(-1),
        );
        assert_eq!(f_factorial_exact(0, &e), QExpr::one());
        assert_eq!(f_factorial_exact(1, &e), QExpr::q_pow(e.beta));
        let p = e.at(1.3);
        assert_eq!(f_factorial(0, &p), 1.0);
    }

    #[test]
    fn standard_q_factorial_three() {
        // [3;q]! = 1·(1+q)·(1+q+q²) = 1 + 2q + 2q² + q³
        let e = BasicNumberKind::Standard.exact_exponents().unwrap();
        let expected: QExpr = "1 + 2*q^(1) + 2*q^(2) + q^(3)".parse().unwrap();
        assert_eq!(f_factorial_exact(3, &e), expected);
    }

    #[test]
    fn classical_limit_examples() {
        let sym = BasicNumberKind::Symmetric.exact_exponents().unwrap();
        assert!(classical_limit_check(4, 1e-6, &sym).unwrap().deviation < 1e-4);
        assert_eq!(classical_limit_check(0, 1e-3, &sym).unwrap().deviation, 0.0);
        let td = BasicNumberKind::TammDancoff.exact_exponents().unwrap();
        assert!(classical_limit_check(7, 1e-6, &td).unwrap().deviation < 1e-3);
        assert!(classical_limit_check(7, 0.2, &td).is_err());
        assert!(classical_limit_check(7, 0.0, &td).is_err());
    }

    #[test]
    fn negative_arguments_are_negative() {
        for (alpha, gamma) in [(1.0, 0.0), (-2.0, 0.0), (0.0, 0.0), (0.5, 1.0), (-1.0, 1.0)] {
            for q in [0.3, 2.5] {
                let p = AlgebraParams {
                    q,
                    alpha,
                    beta: 0.7,
                    gamma,
                };
                for n in -6..0 {
                    assert!(
                        f_number(n, &p) < 0.0,
                        "n={n} alpha={alpha} gamma={gamma} q={q}"
                    );
                    assert_eq!(sign_of(n, &p), Sign::Negative);
                }
                assert_eq!(sign_of(5, &p), Sign::Positive);
                assert_eq!(sign_of(0, &p), Sign::Zero);
            }
        }
    }

    #[test]
    fn first_negative_value_from_recurrence() {
        let p = AlgebraParams {
            q: 1.9,
            alpha: 0.4,
            beta: -0.3,
            gamma: 1.2,
        };
        assert!(approx(
            f_number(-1, &p),
            -p.pow(p.beta - p.alpha - p.gamma),
            1e-14
        ));
    }

    #[test]
    fn branches_join_continuously() {
        let p = AlgebraParams {
            q: 1.8,
            alpha: 0.7,
            beta: 0.2,
            gamma: 0.7,
        };
        let near = AlgebraParams {
            alpha: 0.7 + 1e-8,
            ..p
        };
        for n in [-5, 1, 3, 12] {
            assert!(
                (f_number(n, &p) - f_number(n, &near)).abs()
                    <= 1e-6 * f_number(n, &p).abs().max(1.0)
            );
        }
    }

    #[test]
    fn exact_and_float_agree() {
        let e = ExactParams::new(
            Rational::new(-3, 2),
            Rational::new(1, 3),
            Rational::new(2, 5),
        );
        for n in -10..=10 {
            let x = f_number_exact(n, &e).eval_real(1.3);
            assert!(approx(x, f_number(n, &e.at(1.3)), 1e-12), "n={n}");
        }
    }

    #[test]
    fn exact_value_at_rational_q() {
        let e = BasicNumberKind::Symmetric.exact_exponents().unwrap();
        let two = num_rational::BigRational::from_integer(2.into());
        let v = f_number_at_rational(2, &e, &two).unwrap();
        assert_eq!(
            v,
            GaussianRational::real(num_rational::BigRational::new(5.into(), 2.into()))
        );
    }

    proptest! {
        #[test]
        fn exact_sum_times_divisor_is_the_numerator(
            a in (-9i64..9, 1i64..5),
            b in (-9i64..9, 1i64..5),
            g in (-9i64..9, 1i64..5),
            n in -40i64..40,
        ) {
            let (alpha, beta, gamma) = (Rational::new(a.0, a.1), Rational::new(b.0, b.1), Rational::new(g.0, g.1));
            prop_assume!(alpha != gamma);
            let f = f_number_exact(n, &ExactParams::new(alpha, beta, gamma));
            let divisor = QExpr::q_pow(alpha) - QExpr::q_pow(gamma);
            let n_r = Rational::from_integer(n);
            let numerator = (QExpr::q_pow(n_r * alpha) - QExpr::q_pow(n_r * gamma)).shift(beta);
            prop_assert_eq!(QExpr::mul(&f, &divisor), numerator.clone());
            prop_assert_eq!(numerator.div_exact(&divisor).unwrap(), f);
        }

        #[test]
        fn float_recurrence_holds(
            q in 0.2f64..5.0,
            alpha in -3.0f64..3.0,
            beta in -2.0f64..2.0,
            gamma in -3.0f64..3.0,
            n in -40i64..40,
        ) {
            let p = AlgebraParams { q, alpha, beta, gamma };
            prop_assert!(recurrence_defect(n, &p) <= 1e-12);
        }

        #[test]
        fn symmetric_in_alpha_and_gamma(q in 0.2f64..5.0, alpha in -2.0f64..2.0, gamma in -2.0f64..2.0, n in -20i64..20) {
            let p = AlgebraParams { q, alpha, beta: 0.4, gamma };
            let s = AlgebraParams { q, alpha: gamma, beta: 0.4, gamma: alpha };
            prop_assert!(approx(f_number(n, &p), f_number(n, &s), 1e-12));
        }
    }
}

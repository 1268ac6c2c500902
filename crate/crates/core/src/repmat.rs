//! Finite truncations of the representation families and residuals of the
//! defining relations on them.
//!
//! One-sided (quasi-Fock) truncations keep `0 ≤ n < dim`. Two-sided families
//! use the window `−m ≤ n ≤ m`. In both cases `a⁺a` is exact on every row
//! except, for two-sided windows, the bottom one (its lower neighbour is cut
//! off), and `aa⁺` is wrong on the top row. Relations are therefore checked
//! on the interior rows only.

use alloc::vec::Vec;
use core::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraParams;
use crate::matrix::Matrix;
use crate::qnum::f_number_real;
use crate::repcls::{grows_both_ways, lambda_at, Family, RepSpec};
use crate::report::{scaled, VerificationReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("negative value {value} under the square root at n = {n}")]
    NegativeUnderRoot { n: i64, value: f64 },
    #[error("truncation dimension must be at least 1")]
    EmptyTruncation,
}

/// `(N, a, a⁺)` on a finite window of basis vectors `|index_base + i⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderMatrices {
    pub dim: usize,
    pub index_base: i64,
    pub n: Matrix,
    pub a: Matrix,
    pub a_plus: Matrix,
    pub family: Family,
}

impl LadderMatrices {
    /// Builds the matrices from the `N`-eigenvalues and the lowering weights
    /// `w_i` with `a|i⟩ = w_i|i−1⟩` (`w_0` is ignored).
    pub fn from_weights(
        index_base: i64,
        n_values: &[f64],
        weights: &[f64],
        family: Family,
    ) -> Self {
        let dim = n_values.len();
        let mut a = Matrix::zeros(dim);
        for i in 1..dim {
            a[(i - 1, i)] = weights[i];
        }
        let a_plus = a.transpose();
        Self {
            dim,
            index_base,
            n: Matrix::diagonal(n_values),
            a,
            a_plus,
            family,
        }
    }

    pub fn is_two_sided(&self) -> bool {
        self.family.is_two_sided()
    }

    /// Rows on which `aa⁺` is faithful to the infinite representation.
    pub fn interior_rows(&self) -> Range<usize> {
        let start = usize::from(self.is_two_sided()).min(self.dim);
        start..self.dim.saturating_sub(1).max(start)
    }

    /// Rows on which `a⁺a` is faithful.
    pub fn lower_rows(&self) -> Range<usize> {
        usize::from(self.is_two_sided()).min(self.dim)..self.dim
    }

    pub fn n_values(&self) -> Vec<f64> {
        self.n.diag()
    }

    pub fn a_plus_a(&self) -> Matrix {
        self.a_plus.matmul(&self.a)
    }

    pub fn a_a_plus(&self) -> Matrix {
        self.a.matmul(&self.a_plus)
    }
}

fn checked_root(n: i64, value: f64) -> Result<f64, BuildError> {
    if value >= 0.0 {
        Ok(libm::sqrt(value))
    } else {
        Err(BuildError::NegativeUnderRoot { n, value })
    }
}

/// Lowest-weight family with vacuum `N`-eigenvalue `ν₀′`:
/// `a|n⟩ = q^{αν₀′/2}√F(n) |n−1⟩`, `N|n⟩ = (ν₀′ + n)|n⟩`.
pub fn build_quasi_fock(
    nu0_prime: f64,
    dim: usize,
    params: &AlgebraParams,
) -> Result<LadderMatrices, BuildError> {
    if dim == 0 {
        return Err(BuildError::EmptyTruncation);
    }
    let scale = params.pow(params.alpha * nu0_prime / 2.0);
    let mut weights = alloc::vec![0.0; dim];
    for (n, w) in weights.iter_mut().enumerate().skip(1) {
        *w = scale * checked_root(n as i64, f_number_real(n as f64, params))?;
    }
    let n_values: Vec<f64> = (0..dim).map(|n| nu0_prime + n as f64).collect();
    Ok(LadderMatrices::from_weights(
        0,
        &n_values,
        &weights,
        Family::QuasiFock { nu0_prime },
    ))
}

fn two_sided(
    nu0: f64,
    m: usize,
    family: Family,
    lambda: impl Fn(i64) -> f64,
) -> Result<LadderMatrices, BuildError> {
    let m = m as i64;
    // λ_{m+1} is the weight of the raising step leaving the window.
    for n in -m..=m + 1 {
        let value = lambda(n);
        if value.is_nan() || value <= 0.0 {
            return Err(BuildError::NegativeUnderRoot { n, value });
        }
    }
    let weights: Vec<f64> = (-m..=m).map(|n| libm::sqrt(lambda(n))).collect();
    let n_values: Vec<f64> = (-m..=m).map(|n| nu0 + n as f64).collect();
    Ok(LadderMatrices::from_weights(
        -m, &n_values, &weights, family,
    ))
}

/// Two-sided window `[−m, m]` of the chain seeded by `(ν₀, λ₀)`.
pub fn build_two_param(
    nu0: f64,
    lambda0: f64,
    m: usize,
    params: &AlgebraParams,
) -> Result<LadderMatrices, BuildError> {
    let spec = RepSpec {
        params: *params,
        nu0,
        lambda0,
    };
    let family = Family::TwoParamSingular {
        nu0_star: nu0,
        lambda0_star: lambda0,
        constrained: grows_both_ways(params),
    };
    two_sided(nu0, m, family, |n| lambda_at(&spec, n))
}

/// Two-sided window of the strange family,
/// `λ_n = q^{α(ν₀+n)+β}/(q^α − q^γ)`.
pub fn build_strange(
    nu0: f64,
    m: usize,
    params: &AlgebraParams,
) -> Result<LadderMatrices, BuildError> {
    let gap = params.pow(params.alpha) - params.pow(params.gamma);
    if gap.is_nan() || gap <= 0.0 {
        return Err(BuildError::NegativeUnderRoot { n: 0, value: gap });
    }
    two_sided(nu0, m, Family::Strange { nu0 }, |n| {
        params.pow(params.alpha * (nu0 + n as f64) + params.beta) / gap
    })
}

/// Builds the truncation of the family named in a descriptor. One-sided
/// families get `dim` rows; two-sided ones the window `m = dim / 2`.
pub fn build_family(
    family: &Family,
    dim: usize,
    params: &AlgebraParams,
) -> Result<LadderMatrices, BuildError> {
    match *family {
        Family::QuasiFock { nu0_prime } => build_quasi_fock(nu0_prime, dim, params),
        Family::TwoParamSingular {
            nu0_star,
            lambda0_star,
            ..
        } => build_two_param(nu0_star, lambda0_star, dim / 2, params).map(|mut rep| {
            rep.family = *family;
            rep
        }),
        Family::Strange { nu0 } => build_strange(nu0, dim / 2, params),
    }
}

/// Largest per-entry scaled residual of `Σ_k c_k M_k` over `rows`.
fn combination_residual(rows: Range<usize>, dim: usize, terms: &[(f64, &Matrix)]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in rows {
        for j in 0..dim {
            let (mut sum, mut size) = (0.0, 0.0);
            for (c, m) in terms {
                let v = c * m[(i, j)];
                sum += v;
                size += v.abs();
            }
            worst = worst.max(scaled(sum, size));
        }
    }
    worst
}

fn q_pow_n(rep: &LadderMatrices, params: &AlgebraParams, rate: f64, shift: f64) -> Matrix {
    let d: Vec<f64> = rep
        .n_values()
        .iter()
        .map(|n| params.pow(rate * n + shift))
        .collect();
    Matrix::diagonal(&d)
}

/// `aa⁺ − q^γ a⁺a − q^{αN+β}` on the interior rows.
pub fn check_defining(
    rep: &LadderMatrices,
    params: &AlgebraParams,
    tol: f64,
) -> VerificationReport {
    let rhs = q_pow_n(rep, params, params.alpha, params.beta);
    let (aap, apa) = (rep.a_a_plus(), rep.a_plus_a());
    let rows = rep.interior_rows();
    let r = combination_residual(
        rows.clone(),
        rep.dim,
        &[(1.0, &aap), (-params.pow(params.gamma), &apa), (-1.0, &rhs)],
    );
    VerificationReport::new("defining", r, rows, tol)
}

/// `aa⁺ − q^α a⁺a − q^{γN+β}`, which singles out the `q`-Fock representation.
pub fn check_fock_additional(
    rep: &LadderMatrices,
    params: &AlgebraParams,
    tol: f64,
) -> VerificationReport {
    let rhs = q_pow_n(rep, params, params.gamma, params.beta);
    let (aap, apa) = (rep.a_a_plus(), rep.a_plus_a());
    let rows = rep.interior_rows();
    let r = combination_residual(
        rows.clone(),
        rep.dim,
        &[(1.0, &aap), (-params.pow(params.alpha), &apa), (-1.0, &rhs)],
    );
    VerificationReport::new("fock-additional", r, rows, tol)
}

/// `aa⁺ − q^α a⁺a = 0`, the defining property of the strange family.
pub fn check_selector_zero(
    rep: &LadderMatrices,
    params: &AlgebraParams,
    tol: f64,
) -> VerificationReport {
    let (aap, apa) = (rep.a_a_plus(), rep.a_plus_a());
    let rows = rep.interior_rows();
    let r = combination_residual(
        rows.clone(),
        rep.dim,
        &[(1.0, &aap), (-params.pow(params.alpha), &apa)],
    );
    VerificationReport::new("selector-zero", r, rows, tol)
}

fn check_shift(
    rep: &LadderMatrices,
    ladder: &Matrix,
    sign: f64,
    id: &str,
    tol: f64,
) -> VerificationReport {
    // [N, x] − sign·x for x = a (sign −1) or a⁺ (sign +1)
    let na = rep.n.matmul(ladder);
    let an = ladder.matmul(&rep.n);
    let r = combination_residual(
        0..rep.dim,
        rep.dim,
        &[(1.0, &na), (-1.0, &an), (-sign, ladder)],
    );
    VerificationReport::new(id, r, 0..rep.dim, tol)
}

/// Residuals of the defining relations, the two `N`-commutators and
/// hermiticity, plus the extra relation that characterizes the family
/// (`q`-Fock or strange) where it applies.
pub fn verify_relations(
    rep: &LadderMatrices,
    params: &AlgebraParams,
    tol: f64,
) -> Vec<VerificationReport> {
    let mut reports = alloc::vec![
        check_defining(rep, params, tol),
        check_shift(rep, &rep.a, -1.0, "lowering", tol),
        check_shift(rep, &rep.a_plus, 1.0, "raising", tol),
        VerificationReport::new(
            "hermiticity",
            rep.a_plus.max_abs_diff(&rep.a.transpose()),
            0..rep.dim,
            tol
        ),
    ];
    match rep.family {
        Family::QuasiFock { nu0_prime } if nu0_prime == 0.0 || params.alpha_equals_gamma() => {
            reports.push(check_fock_additional(rep, params, tol));
        }
        Family::Strange { .. } => reports.push(check_selector_zero(rep, params, tol)),
        _ => {}
    }
    reports
}

/// Compares `diag(a⁺a)` with `λ_n` of the seed chain and `diag(aa⁺)` with
/// `λ_{n+1}`. Rows are matched through their `N`-eigenvalue, so re-based
/// families are compared against the original seed.
pub fn spectrum_check(rep: &LadderMatrices, spec: &RepSpec, tol: f64) -> VerificationReport {
    let (apa, aap) = (rep.a_plus_a(), rep.a_a_plus());
    let n_values = rep.n_values();
    let index = |i: usize| libm::round(n_values[i] - spec.nu0) as i64;
    let mut worst: f64 = 0.0;
    for i in rep.lower_rows() {
        let expected = lambda_at(spec, index(i));
        worst = worst.max(scaled(
            apa[(i, i)] - expected,
            apa[(i, i)].abs() + expected.abs(),
        ));
    }
    for i in rep.interior_rows() {
        let expected = lambda_at(spec, index(i) + 1);
        worst = worst.max(scaled(
            aap[(i, i)] - expected,
            aap[(i, i)].abs() + expected.abs(),
        ));
    }
    VerificationReport::new("spectrum", worst, rep.lower_rows(), tol)
}

/// Serializable summary of a truncation for export.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderExport {
    pub dim: usize,
    pub index_base: i64,
    pub family: Family,
    pub n: Vec<f64>,
    pub a: Vec<f64>,
    pub a_plus: Vec<f64>,
}

impl From<&LadderMatrices> for LadderExport {
    fn from(rep: &LadderMatrices) -> Self {
        Self {
            dim: rep.dim,
            index_base: rep.index_base,
            family: rep.family,
            n: rep.n.as_slice().to_vec(),
            a: rep.a.as_slice().to_vec(),
            a_plus: rep.a_plus.as_slice().to_vec(),
        }
    }
}

impl TryFrom<LadderExport> for LadderMatrices {
    type Error = BuildError;

    fn try_from(e: LadderExport) -> Result<Self, BuildError> {
        let square = |v: Vec<f64>| {
            Matrix::from_row_major(v)
                .filter(|m| m.dim() == e.dim)
                .ok_or(BuildError::EmptyTruncation)
        };
        Ok(Self {
            dim: e.dim,
            index_base: e.index_base,
            family: e.family,
            n: square(e.n)?,
            a: square(e.a)?,
            a_plus: square(e.a_plus)?,
        })
    }
}

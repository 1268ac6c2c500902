use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::AlgebraParams;
use crate::qnum::{f_number_real, Sign};
use crate::repmat::LadderMatrices;

/// Relative threshold below which a selector entry counts as zero.
pub const SELECTOR_ZERO_TOL: f64 = 1e-12;

/// Relative spread below which a diagonal counts as constant.
pub const CONSTANCY_TOL: f64 = 1e-10;

/// `S(N) = v₀ + v₁N + … + v_m N^m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralPolynomial {
    pub coefficients: Vec<f64>,
}

impl Default for CentralPolynomial {
    fn default() -> Self {
        Self {
            coefficients: alloc::vec![1.0],
        }
    }
}

impl CentralPolynomial {
    pub fn eval(&self, n: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * n + c)
    }
}

/// The factor `S(N)` multiplying `F(N) − a⁺a`.
///
/// On a chain with `[N, a] = −a` the bracket `F(N) − a⁺a` equals
/// `q^{γN}·const`, so `S(N) = q^{−γN}` makes the product central on every
/// family, while a polynomial `S` does so only where the bracket vanishes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CentralSeries {
    Polynomial(CentralPolynomial),
    /// `S(N) = q^{rate·N}`.
    Exponential {
        rate: f64,
    },
}

impl Default for CentralSeries {
    fn default() -> Self {
        Self::Polynomial(CentralPolynomial::default())
    }
}

impl CentralSeries {
    /// The choice `S(N) = q^{−γN}`.
    pub fn balancing(params: &AlgebraParams) -> Self {
        Self::Exponential {
            rate: -params.gamma,
        }
    }

    pub fn eval(&self, n: f64, params: &AlgebraParams) -> f64 {
        match self {
            Self::Polynomial(p) => p.eval(n),
            Self::Exponential { rate } => params.pow(rate * n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralDiagonal {
    pub values: Vec<f64>,
    /// Rows on which `a⁺a` is faithful and the values are meaningful.
    pub rows: core::ops::Range<usize>,
    /// Whether the values agree on those rows (relative spread ≤ 1e−10).
    pub constant: bool,
    /// Largest scaled commutator entry of the diagonal with `a`.
    pub commutator_residual: f64,
}

/// Diagonal of `(F(N) − a⁺a)·S(N)` on a truncation.
pub fn central_element_diagonal(
    rep: &LadderMatrices,
    params: &AlgebraParams,
    s: &CentralSeries,
) -> CentralDiagonal {
    let apa = rep.a_plus_a();
    let n_values = rep.n_values();
    let values: Vec<f64> = (0..rep.dim)
        .map(|i| (f_number_real(n_values[i], params) - apa[(i, i)]) * s.eval(n_values[i], params))
        .collect();
    let rows = rep.lower_rows();
    let scale = rows
        .clone()
        .map(|i| values[i].abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let (lo, hi) = rows
        .clone()
        .map(|i| values[i])
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    let constant = rows.is_empty() || (hi - lo) <= CONSTANCY_TOL * scale.max(1.0);
    // [Z, a]_{i−1,i} = (z_{i−1} − z_i)·a_{i−1,i}, over pairs that are both faithful.
    let commutator_residual = (rows.start + 1..rows.end)
        .map(|i| {
            let w = rep.a[(i - 1, i)];
            let d = (values[i - 1] - values[i]) * w;
            crate::report::scaled(d, (values[i - 1].abs() + values[i].abs()) * w.abs())
        })
        .fold(0.0, f64::max);
    CentralDiagonal {
        values,
        rows,
        constant,
        commutator_residual,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelectorSign {
    Definite(Sign),
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectorDiagonal {
    pub values: Vec<f64>,
    pub rows: core::ops::Range<usize>,
    pub sign: SelectorSign,
}

/// Diagonal of `K = aa⁺ − q^α a⁺a` on the interior rows and its common sign.
///
/// An entry counts as zero when it is below `1e−12` relative to the size of
/// the two terms it is the difference of.
pub fn selector_diagonal(rep: &LadderMatrices, params: &AlgebraParams) -> SelectorDiagonal {
    let (aap, apa) = (rep.a_a_plus(), rep.a_plus_a());
    let qa = params.pow(params.alpha);
    let rows = rep.interior_rows();
    let mut values = Vec::with_capacity(rows.len());
    let mut signs = Vec::with_capacity(rows.len());
    for i in rows.clone() {
        let (x, y) = (aap[(i, i)], qa * apa[(i, i)]);
        let k = x - y;
        values.push(k);
        signs.push(if k.abs() <= SELECTOR_ZERO_TOL * (x.abs() + y.abs()) {
            Sign::Zero
        } else {
            Sign::of(k)
        });
    }
    let sign = match signs.split_first() {
        None => SelectorSign::Indefinite,
        Some((first, rest)) if rest.iter().all(|s| s == first) => SelectorSign::Definite(*first),
        Some(_) => SelectorSign::Indefinite,
    };
    SelectorDiagonal { values, rows, sign }
}

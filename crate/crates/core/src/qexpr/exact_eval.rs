//! Exact evaluation of a [`QExpr`] at a positive rational `q`.
//!
//! All exponents are brought over a common denominator `L`, `q` is written as
//! `s^e` with `e | L` maximal, and every power becomes `s^m·t^j` with
//! `t = s^{1/D}`, `D = L/e`, `0 ≤ j < D`. By Capelli's theorem `x^D − s` is
//! irreducible over ℚ for this choice, so `1, t, …, t^{D−1}` are linearly
//! independent and the value is zero exactly when every collected coefficient
//! is zero.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{GaussianRational, QExpr, QExprError};

/// `Σ_j coeffs[j]·s^{j/D}` with `base = s`, `degree = D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalForm {
    pub base: BigRational,
    pub degree: u64,
    pub coeffs: Vec<GaussianRational>,
}

impl RadicalForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    /// The value when it is a Gaussian rational (no surviving radical).
    pub fn as_rational(&self) -> Option<GaussianRational> {
        if self.coeffs.iter().skip(1).all(GaussianRational::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }
}

fn exact_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if n == 1 {
        return Some(x.clone());
    }
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

fn rational_root(q: &BigRational, n: u64) -> Option<BigRational> {
    let n = u32::try_from(n).ok()?;
    Some(BigRational::new(
        exact_root(q.numer(), n)?,
        exact_root(q.denom(), n)?,
    ))
}

impl QExpr {
    /// Exact value at `q`, in the radical basis described in the module docs.
    pub fn at_rational(&self, q: &BigRational) -> Result<RadicalForm, QExprError> {
        if !q.is_positive() {
            return Err(QExprError::NonPositiveBase);
        }
        let l = self
            .terms()
            .iter()
            .fold(1i64, |acc, t| acc.lcm(t.exponent.0.denom()));
        let l = l as u64;
        let (e, s) = (1..=l)
            .rev()
            .filter(|e| l.is_multiple_of(*e))
            .find_map(|e| rational_root(q, e).map(|s| (e, s)))
            .unwrap_or((1, q.clone()));
        let degree = l / e;
        let mut coeffs = alloc::vec![GaussianRational::zero(); degree as usize];
        for t in self.terms() {
            // q^r = s^{e r} = t^k with k = r·L
            let k = (t.exponent.0 * l as i64).to_integer();
            let (m, j) = k.div_mod_floor(&(degree as i64));
            let factor = if m >= 0 {
                num_traits::pow(s.clone(), m as usize)
            } else {
                BigRational::one() / num_traits::pow(s.clone(), (-m) as usize)
            };
            coeffs[j as usize] += &(&t.coeff * &GaussianRational::real(factor));
        }
        Ok(RadicalForm {
            base: s,
            degree,
            coeffs,
        })
    }

    /// Exact zero test at a positive rational `q`.
    pub fn is_zero_at(&self, q: &BigRational) -> Result<bool, QExprError> {
        Ok(self.at_rational(q)?.is_zero())
    }
}

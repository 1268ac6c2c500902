//! Exact arithmetic on finite sums `Σ cᵢ·q^{rᵢ}` with rational exponents and
//! Gaussian-rational coefficients.
//!
//! A [`QExpr`] is kept in canonical form: terms sorted strictly by ascending
//! exponent, no repeated exponent, no zero coefficient. The zero expression has
//! no terms. Exact mode in the rest of the crate is built on this type; numeric
//! mode bridges through [`QExpr::eval`].

mod coeff;
mod exact_eval;
mod text;

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

pub(crate) use coeff::big_to_f64;
pub use coeff::GaussianRational;
pub use exact_eval::RadicalForm;
pub use text::{parse_rational, ParseError};

/// Rational number used for exponents and exact parameters.
pub type Rational = num_rational::Ratio<i64>;

/// Exponent `r` of `q^r`, always in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QExponent(pub Rational);

impl QExponent {
    pub fn zero() -> Self {
        Self(Rational::zero())
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<Rational> for QExponent {
    fn from(r: Rational) -> Self {
        Self(r)
    }
}

impl From<i64> for QExponent {
    fn from(n: i64) -> Self {
        Self(Rational::from_integer(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub coeff: GaussianRational,
    pub exponent: QExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QExprError {
    #[error("divisor is zero")]
    DivisionByZero,
    #[error("no exact quotient exists in the ring of q-power sums")]
    NotDivisible,
    #[error("exact evaluation requires q > 0")]
    NonPositiveBase,
}

/// Canonical finite sum of monomials `c·q^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QExpr {
    terms: Vec<QMonomial>,
}

impl QExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: impl Into<GaussianRational>) -> Self {
        Self::monomial(c, QExponent::zero())
    }

    /// `q^r`.
    pub fn q_pow(r: impl Into<QExponent>) -> Self {
        Self::monomial(GaussianRational::one(), r)
    }

    pub fn monomial(c: impl Into<GaussianRational>, r: impl Into<QExponent>) -> Self {
        let coeff = c.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: alloc::vec![QMonomial {
                coeff,
                exponent: r.into()
            }],
        }
    }

    /// Builds a canonical expression from arbitrary terms (merging and dropping zeros).
    pub fn from_terms(terms: impl IntoIterator<Item = QMonomial>) -> Self {
        let mut v: Vec<QMonomial> = terms.into_iter().collect();
        v.sort_by_key(|t| t.exponent);
        let mut out: Vec<QMonomial> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.exponent == t.exponent => last.coeff += &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[QMonomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every invariant of the canonical form holds.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self.terms.windows(2).all(|w| w[0].exponent < w[1].exponent)
    }

    pub fn lowest(&self) -> Option<&QMonomial> {
        self.terms.first()
    }

    pub fn leading(&self) -> Option<&QMonomial> {
        self.terms.last()
    }

    pub fn add(&self, other: &QExpr) -> QExpr {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &QExpr) -> QExpr {
        self.merge(other, true)
    }

    fn merge(&self, other: &QExpr, negate: bool) -> QExpr {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |t: &QMonomial| -> QMonomial {
            if negate {
                QMonomial {
                    coeff: -&t.coeff,
                    exponent: t.exponent,
                }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match a[i].exponent.cmp(&b[j].exponent) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(rhs(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(QMonomial {
                            coeff: c,
                            exponent: a[i].exponent,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(rhs));
        QExpr { terms: out }
    }

    pub fn neg(&self) -> QExpr {
        QExpr {
            terms: self
                .terms
                .iter()
                .map(|t| QMonomial {
                    coeff: -&t.coeff,
                    exponent: t.exponent,
                })
                .collect(),
        }
    }

    /// `c·q^r · self`; order is preserved so no re-sorting is needed.
    pub fn mul_monomial(&self, c: &GaussianRational, r: QExponent) -> QExpr {
        if c.is_zero() {
            return QExpr::zero();
        }
        QExpr {
            terms: self
                .terms
                .iter()
                .map(|t| QMonomial {
                    coeff: &t.coeff * c,
                    exponent: QExponent(t.exponent.0 + r.0),
                })
                .collect(),
        }
    }

    /// `q^r · self`.
    pub fn shift(&self, r: impl Into<QExponent>) -> QExpr {
        let r = r.into();
        QExpr {
            terms: self
                .terms
                .iter()
                .map(|t| QMonomial {
                    coeff: t.coeff.clone(),
                    exponent: QExponent(t.exponent.0 + r.0),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> QExpr {
        self.mul_monomial(c, QExponent::zero())
    }

    pub fn mul(&self, other: &QExpr) -> QExpr {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        match small.len() {
            0 => QExpr::zero(),
            1 => large.mul_monomial(&small.terms[0].coeff, small.terms[0].exponent),
            _ => QExpr::from_terms(small.terms.iter().flat_map(|s| {
                large.terms.iter().map(move |l| QMonomial {
                    coeff: &s.coeff * &l.coeff,
                    exponent: QExponent(s.exponent.0 + l.exponent.0),
                })
            })),
        }
    }

    pub fn pow(&self, n: u32) -> QExpr {
        let mut acc = QExpr::one();
        for _ in 0..n {
            acc = QExpr::mul(&acc, self);
        }
        acc
    }

    /// Exact quotient `z` with `z·divisor = self`, by long division from the
    /// highest exponent down.
    ///
    /// Every exponent of an exact quotient lies in
    /// `[low(self) − low(divisor), high(self) − high(divisor)]`; the division
    /// fails as soon as a candidate term falls below that window.
    pub fn div_exact(&self, divisor: &QExpr) -> Result<QExpr, QExprError> {
        let lead = divisor.leading().ok_or(QExprError::DivisionByZero)?;
        let (Some(x_low), Some(y_low)) = (self.lowest(), divisor.lowest()) else {
            return Ok(QExpr::zero());
        };
        let floor = x_low.exponent.0 - y_low.exponent.0;
        // Remainder keyed by exponent; each step only touches the divisor's
        // lower terms, so the whole division is O(len·terms(divisor)·log).
        let mut rem: BTreeMap<Rational, GaussianRational> = self
            .terms
            .iter()
            .map(|t| (t.exponent.0, t.coeff.clone()))
            .collect();
        let lower = &divisor.terms[..divisor.terms.len() - 1];
        let mut quotient: Vec<QMonomial> = Vec::new();
        while let Some((top_e, top_c)) = rem.pop_last() {
            let e = top_e - lead.exponent.0;
            if e < floor {
                return Err(QExprError::NotDivisible);
            }
            let c = top_c
                .checked_div(&lead.coeff)
                .ok_or(QExprError::DivisionByZero)?;
            for t in lower {
                let v = &t.coeff * &c;
                match rem.entry(t.exponent.0 + e) {
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= &v;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    Entry::Vacant(slot) => {
                        slot.insert(-v);
                    }
                }
            }
            quotient.push(QMonomial {
                coeff: c,
                exponent: QExponent(e),
            });
        }
        quotient.reverse();
        Ok(QExpr { terms: quotient })
    }

    /// Numeric value at `q > 0`, with `q^r = exp(r·ln q)`.
    pub fn eval(&self, q: f64) -> Complex64 {
        let ln_q = libm::log(q);
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, t| {
            acc + t.coeff.to_complex() * libm::exp(t.exponent.to_f64() * ln_q)
        })
    }

    /// Real part of [`QExpr::eval`].
    pub fn eval_real(&self, q: f64) -> f64 {
        self.eval(q).re
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_real())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&QExpr> for &QExpr {
            type Output = QExpr;
            fn $method(self, rhs: &QExpr) -> QExpr {
                QExpr::$method(self, rhs)
            }
        }
        impl $tr<QExpr> for QExpr {
            type Output = QExpr;
            fn $method(self, rhs: QExpr) -> QExpr {
                QExpr::$method(&self, &rhs)
            }
        }
        impl $tr<&QExpr> for QExpr {
            type Output = QExpr;
            fn $method(self, rhs: &QExpr) -> QExpr {
                QExpr::$method(&self, rhs)
            }
        }
        impl $tr<QExpr> for &QExpr {
            type Output = QExpr;
            fn $method(self, rhs: QExpr) -> QExpr {
                QExpr::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &QExpr {
    type Output = QExpr;
    fn neg(self) -> QExpr {
        QExpr::neg(self)
    }
}

impl Neg for QExpr {
    type Output = QExpr;
    fn neg(self) -> QExpr {
        QExpr::neg(&self)
    }
}

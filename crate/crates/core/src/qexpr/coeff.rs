use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Exact complex scalar `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

pub(crate) fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub(crate) fn big_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(r: Rational) -> Self {
        Self::real(big(r))
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `None` for division by zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if rhs.is_real() {
            return Some(Self {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            });
        }
        let n = rhs.norm_sqr();
        let p = self * &rhs.conj();
        Some(Self {
            re: p.re / &n,
            im: p.im / n,
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(big_to_f64(&self.re), big_to_f64(&self.im))
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_ratio(r)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_real() && rhs.is_real() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs)
            .expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

pub(crate) fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// `p/q`, `p/q*i`, or `(p/q+r/s*i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                fmt_rational(&self.im, f)?;
                f.write_str("*i")
            }
            (false, false) => {
                f.write_str("(")?;
                fmt_rational(&self.re, f)?;
                if self.im.is_negative() {
                    f.write_str("-")?;
                    fmt_rational(&-self.im.clone(), f)?;
                } else {
                    f.write_str("+")?;
                    fmt_rational(&self.im, f)?;
                }
                f.write_str("*i)")
            }
        }
    }
}

//! Text form `c1*q^(r1) + c2*q^(r2) + …`.
//!
//! Coefficients are `p`, `p/q`, `p/q*i` or `(p/q+r/s*i)`; a unit coefficient
//! is omitted and a constant term has no `q` factor. The parser accepts the
//! rendered form plus a few conveniences (`q`, `q^2`, `i`, spaces anywhere).

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{GaussianRational, QExponent, QExpr, QMonomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn fmt_exponent(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, t) in self.terms().iter().enumerate() {
            let negative_real = t.coeff.is_real() && t.coeff.re.is_negative();
            let coeff = if negative_real {
                -&t.coeff
            } else {
                t.coeff.clone()
            };
            match (idx == 0, negative_real) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let unit = coeff == GaussianRational::one();
            if t.exponent.0.is_zero() {
                write!(f, "{coeff}")?;
                continue;
            }
            if !unit {
                write!(f, "{coeff}*")?;
            }
            f.write_str("q^(")?;
            fmt_exponent(&t.exponent.0, f)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for QExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exponent(&self.0, f)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", QExpr::from_terms([self.clone()]))
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(&alloc::format!("expected '{}'", b as char))
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(digits).expect("valid digits"))
    }

    /// `[-]int[/uint]`
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let neg = self.eat(b'-');
        let n = self.uint()?;
        let d = if self.eat(b'/') {
            self.uint()?
        } else {
            BigInt::one()
        };
        if d.is_zero() {
            return self.err("zero denominator");
        }
        let r = BigRational::new(n, d);
        Ok(if neg { -r } else { r })
    }

    fn small_rational(&mut self) -> Result<Rational, ParseError> {
        let r = self.rational()?;
        match (i64::try_from(r.numer()), i64::try_from(r.denom())) {
            (Ok(n), Ok(d)) => Ok(Rational::new(n, d)),
            _ => self.err("exponent out of range"),
        }
    }

    fn starts_number(&mut self) -> bool {
        matches!(self.peek(), Some(b) if b.is_ascii_digit())
    }

    fn exponent(&mut self) -> Result<QExponent, ParseError> {
        if !self.eat(b'^') {
            return Ok(QExponent::from(1));
        }
        if self.eat(b'(') {
            let r = self.small_rational()?;
            self.expect(b')')?;
            Ok(QExponent(r))
        } else {
            Ok(QExponent(self.small_rational()?))
        }
    }

    /// A coefficient: `rat`, `rat*i`, `i`, `(rat±rat*i)`.
    fn coeff(&mut self) -> Result<GaussianRational, ParseError> {
        if self.eat(b'(') {
            let re = self.rational()?;
            let sign = match self.peek() {
                Some(b'+') => BigRational::one(),
                Some(b'-') => -BigRational::one(),
                _ => return self.err("expected '+' or '-' in complex coefficient"),
            };
            self.pos += 1;
            let im = self.rational()?;
            self.expect(b'*')?;
            self.expect(b'i')?;
            self.expect(b')')?;
            return Ok(GaussianRational::new(re, sign * im));
        }
        if self.eat(b'i') {
            return Ok(GaussianRational::i());
        }
        let r = self.rational()?;
        let save = self.pos;
        if self.eat(b'*') {
            if self.eat(b'i') {
                return Ok(GaussianRational::new(BigRational::zero(), r));
            }
            self.pos = save;
        }
        Ok(GaussianRational::real(r))
    }

    fn term(&mut self) -> Result<QMonomial, ParseError> {
        let negative = self.eat(b'-');
        let (coeff, exponent) = if self.peek() == Some(b'q') {
            self.pos += 1;
            (GaussianRational::one(), self.exponent()?)
        } else if self.starts_number() || matches!(self.peek(), Some(b'(' | b'i')) {
            let c = self.coeff()?;
            if self.eat(b'*') {
                if !self.eat(b'q') {
                    return self.err("expected 'q' after '*'");
                }
                (c, self.exponent()?)
            } else {
                (c, QExponent::zero())
            }
        } else {
            return self.err("expected a term");
        };
        let coeff = if negative { -coeff } else { coeff };
        Ok(QMonomial { coeff, exponent })
    }
}

impl FromStr for QExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor {
            s: s.as_bytes(),
            pos: 0,
        };
        let mut terms = alloc::vec![c.term()?];
        loop {
            match c.peek() {
                None => break,
                Some(b'+') => {
                    c.pos += 1;
                    terms.push(c.term()?);
                }
                Some(b'-') => {
                    terms.push(c.term()?);
                }
                Some(_) => return c.err("unexpected character"),
            }
        }
        Ok(QExpr::from_terms(terms))
    }
}

/// Parses `p`, `-p` or `p/q` into a [`Rational`].
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut c = Cursor {
        s: s.as_bytes(),
        pos: 0,
    };
    let r = c.small_rational()?;
    if c.peek().is_some() {
        return c.err("trailing characters");
    }
    Ok(r)
}

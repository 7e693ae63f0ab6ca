//! Reader for rational expressions in the fixed indeterminates.
//!
//! Grammar: sums and differences of products and quotients of factors; a
//! factor is an integer, a variable name (`x`..`p`, `t`, `a0`..`a5`, `tau`)
//! or a parenthesized expression, optionally raised to an integer power.

use alloc::string::ToString;

use num_bigint::BigInt;

use super::fraction::Fraction;
use super::rational::Rational;
use super::var::Var;
use super::AlgebraError;

pub fn parse_fraction(src: &str) -> Result<Fraction, AlgebraError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

/// Parses an expression that must be a polynomial.
pub fn parse_polynomial(src: &str) -> Result<super::poly::Polynomial, AlgebraError> {
    let f = parse_fraction(src)?;
    match f.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(AlgebraError::Parse { pos: 0, msg: "expression is not a polynomial".to_string() }),
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Fraction, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Fraction, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = &acc * &d.recip().map_err(|_| AlgebraError::Parse {
                        pos: at,
                        msg: "division by zero".to_string(),
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Fraction, AlgebraError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Fraction, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let e: i32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| self.err("zero to a negative power"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<Fraction, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Fraction::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match Var::from_name(name) {
                    Some(v) => Ok(Fraction::var(v)),
                    None => {
                        self.pos = start;
                        Err(self.err("unknown variable"))
                    }
                }
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Polynomial;

    #[test]
    fn precedence_and_powers() {
        let f = parse_fraction("x^2*y - 2*(x - 1)/y^2 + a0^-1").unwrap();
        let g = parse_fraction("(x^2*y^3*a0 - 2*x*a0 + 2*a0 + y^2)/(y^2*a0)").unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_fraction("-x^2").unwrap(), -Fraction::from_poly(Polynomial::var(Var::X).pow(2)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_fraction("x +"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_fraction("foo"), Err(AlgebraError::Parse { pos: 0, .. })));
        assert!(parse_fraction("1/(x-x)").is_err());
        assert!(parse_polynomial("1/x").is_err());
    }
}

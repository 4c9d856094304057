//! Text form of polynomials.
//!
//! Emission: terms in descending lex order joined by ` + ` / ` - `, a leading
//! `-` for a negative first term, coefficient `1` elided on non-constant
//! terms, `coeff*factor*...` otherwise, `0` for the zero polynomial.
//! Variables print as `x_i_j_l` (matrix row `i`, grid point `(j,l)`) or `y_k`.
//!
//! Parsing accepts the same grammar plus arbitrary whitespace, the Unicode
//! minus sign, and coefficients placed anywhere in a product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, VarId};
use crate::error::Error;
use crate::grid::GridPoint;

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write_rational(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &abs)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<&'a str, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn small(&mut self) -> Result<usize, Error> {
        self.digits()?.parse().map_err(|_| self.err("index too large"))
    }

    fn exponent(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            return self.digits()?.parse().map_err(|_| self.err("exponent too large"));
        }
        Ok(1)
    }

    fn underscore(&mut self) -> Result<(), Error> {
        match self.bump() {
            Some('_') => Ok(()),
            _ => Err(self.err("expected '_'")),
        }
    }

    /// One factor of a product: rational constant or a variable power.
    fn factor(&mut self, coeff: &mut Rational, exps: &mut Vec<(VarId, u32)>) -> Result<(), Error> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digits");
                self.skip_ws();
                let mut q = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    let den: BigInt = self.digits()?.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    q /= Rational::from_integer(den);
                }
                *coeff *= q;
            }
            Some('x') => {
                self.bump();
                self.underscore()?;
                let row = self.small()?;
                self.underscore()?;
                let grid_row = self.small()?;
                self.underscore()?;
                let col = self.small()?;
                if [row, grid_row, col].iter().any(|&i| i == 0 || i > 255) {
                    return Err(self.err("variable index out of range 1..=255"));
                }
                let e = self.exponent()?;
                exps.push((VarId::x(row, GridPoint::new(grid_row, col)), e));
            }
            Some('y') => {
                self.bump();
                self.underscore()?;
                let k = self.small()?;
                if k >= 1 << 24 {
                    return Err(self.err("auxiliary index out of range"));
                }
                let e = self.exponent()?;
                exps.push((VarId::aux(k as u32), e));
            }
            _ => return Err(self.err("expected a number or a variable")),
        }
        Ok(())
    }

    fn polynomial(&mut self) -> Result<Polynomial, Error> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.src.len() {
                if first {
                    return Err(self.err("empty polynomial"));
                }
                break;
            }
            let negative = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            let mut coeff = Rational::one();
            let mut exps = Vec::new();
            self.factor(&mut coeff, &mut exps)?;
            loop {
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.factor(&mut coeff, &mut exps)?;
                } else {
                    break;
                }
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((Monomial::from_exponents(exps), coeff));
        }
        Ok(Polynomial::from_terms(terms))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial, Error> {
        Parser { src: s, pos: 0 }.polynomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_two_minor() {
        let f: Polynomial = "x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1".parse().unwrap();
        assert_eq!(f.to_string(), "x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1");
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn coefficients_and_powers() {
        let f: Polynomial = "-3/6*x_1_1_2^2 + 7 + 2*x_2_1_1 − 1*x_1_1_1".parse().unwrap();
        assert_eq!(f.to_string(), "-x_1_1_1 + 2*x_2_1_1 - 1/2*x_1_1_2^2 + 7");
        let z: Polynomial = "x_1_1_1 - x_1_1_1".parse().unwrap();
        assert_eq!(z.to_string(), "0");
        let g: Polynomial = "0".parse().unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x_1_1", "x_0_1_1", "3/0", "x_1_1_1 x_1_1_2", "2*", "z"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?} should fail");
        }
    }
}

//! Text grammar for magnitudes: `p/q`, `p`, `sqrt(D)`, `(p+q*sqrt(D))/r`, and
//! any `+ - * /` combination of those that stays inside one quadratic field.

use num_bigint::BigInt;
use num_traits::Signed;

use super::{ExactError, QuadraticSurd, Rational};

/// Parses a rational, rejecting anything that evaluates to an irrational.
pub fn parse_rational(input: &str) -> Result<Rational, ExactError> {
    parse_number(input)?
        .to_rational()
        .ok_or_else(|| ExactError::Parse { input: input.to_string(), reason: "expected a rational".into() })
}

/// Parses and evaluates a surd expression exactly.
pub fn parse_number(input: &str) -> Result<QuadraticSurd, ExactError> {
    let mut parser = Parser { input, bytes: input.as_bytes(), pos: 0 };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.fail("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> ExactError {
        ExactError::Parse { input: self.input.to_string(), reason: format!("{reason} at byte {}", self.pos) }
    }

    fn lift(&self, e: ExactError) -> ExactError {
        match e {
            ExactError::Parse { .. } => e,
            other => ExactError::Parse { input: self.input.to_string(), reason: other.to_string() },
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExactError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<QuadraticSurd, ExactError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.checked_add(&rhs) } else { acc.checked_sub(&rhs) }.map_err(|e| self.lift(e))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuadraticSurd, ExactError> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == b'*' { acc.checked_mul(&rhs) } else { acc.checked_div(&rhs) }.map_err(|e| self.lift(e))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QuadraticSurd, ExactError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => self.integer().map(QuadraticSurd::from_int),
            Some(b's') => {
                if !self.input[self.pos..].starts_with("sqrt") {
                    return Err(self.fail("unknown identifier"));
                }
                self.pos += 4;
                self.expect(b'(')?;
                let arg = self.expr()?;
                self.expect(b')')?;
                let arg = arg.to_rational().ok_or_else(|| self.fail("sqrt of an irrational"))?;
                if arg.is_negative() {
                    return Err(self.fail("sqrt of a negative number"));
                }
                QuadraticSurd::sqrt_rational(&arg).map_err(|e| self.lift(e))
            }
            Some(_) => Err(self.fail("unexpected character")),
            None => Err(self.fail("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.input[start..self.pos].parse().map_err(|_| self.fail("bad integer"))
    }
}

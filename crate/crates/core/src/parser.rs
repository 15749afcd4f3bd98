//! Text input and canonical text output for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '-'? factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | variable | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Products need an explicit `*`, and `-x^2` means `-(x^2)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::multiindex::MultiIndex;
use crate::polynomial::{MonomialOrder, Polynomial, Rational, RationalPoint, Ring};

/// What the parser was looking for when it failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Operand,
    OperatorOrEnd,
    Exponent,
    Denominator,
    CloseParen,
    Identifier,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Expected::Operand => "a number, a variable or '('",
            Expected::OperatorOrEnd => "an operator or end of input",
            Expected::Exponent => "a non-negative integer exponent",
            Expected::Denominator => "a positive integer denominator",
            Expected::CloseParen => "')'",
            Expected::Identifier => "a variable name",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message} (expected {expected})")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
    pub expected: Expected,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn error(&self, position: usize, message: impl Into<String>, expected: Expected) -> ParseError {
        ParseError {
            position: position.min(self.src.len()),
            message: message.into(),
            expected,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            None => "unexpected end of input".to_string(),
            Some(c) => format!("unexpected character '{}'", c as char),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos;
            let e = match self.peek() {
                Some(c) if c.is_ascii_digit() => self.integer()?,
                _ => {
                    let here = self.pos;
                    let msg = format!("malformed exponent: {}", self.describe());
                    return Err(self.error(here, msg, Expected::Exponent));
                }
            };
            if self.src.get(self.pos) == Some(&b'.') {
                return Err(self.error(
                    self.pos,
                    "exponent must be an integer",
                    Expected::Exponent,
                ));
            }
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error(start, "exponent too large", Expected::Exponent))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    let here = self.pos;
                    return Err(self.error(
                        here,
                        format!("unbalanced parenthesis opened at byte {}", open),
                        Expected::CloseParen,
                    ));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                Ok(Polynomial::constant(self.ring, q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.identifier();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(self.error(
                        start,
                        format!("unknown variable `{}`", name),
                        Expected::Identifier,
                    )),
                }
            }
            _ => {
                let here = self.pos;
                let msg = self.describe();
                Err(self.error(here, msg, Expected::Operand))
            }
        }
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<BigInt>()
            .map_err(|_| self.error(start, "expected digits", Expected::Operand))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.error(
                self.pos,
                "decimal literals are not supported; write a fraction",
                Expected::OperatorOrEnd,
            ));
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let start = self.pos;
            let den = match self.peek() {
                Some(c) if c.is_ascii_digit() => self.integer()?,
                _ => {
                    let here = self.pos;
                    let msg = self.describe();
                    return Err(self.error(here, msg, Expected::Denominator));
                }
            };
            if den.is_zero() {
                return Err(self.error(start, "zero denominator", Expected::Denominator));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let f = p.expr()?;
    if p.peek().is_some() {
        let here = p.pos;
        let msg = p.describe();
        return Err(p.error(here, msg, Expected::OperatorOrEnd));
    }
    Ok(f)
}

/// Parses a signed rational such as `-2/3`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let ring = Ring::new(&["_"]).expect("valid ring");
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring: &ring,
    };
    let negate = if p.peek() == Some(b'-') {
        p.pos += 1;
        true
    } else {
        false
    };
    let q = match p.peek() {
        Some(c) if c.is_ascii_digit() => p.rational()?,
        _ => {
            let here = p.pos;
            let msg = p.describe();
            return Err(p.error(here, msg, Expected::Operand));
        }
    };
    if p.peek().is_some() {
        let here = p.pos;
        let msg = p.describe();
        return Err(p.error(here, msg, Expected::OperatorOrEnd));
    }
    Ok(if negate { -q } else { q })
}

/// Parses comma-separated rational coordinates.
pub fn parse_point(text: &str) -> Result<RationalPoint, ParseError> {
    let mut coords = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let q = parse_rational(piece).map_err(|mut e| {
            e.position += offset;
            e
        })?;
        coords.push(q);
        offset += piece.len() + 1;
    }
    Ok(RationalPoint::new(coords))
}

/// Parses a comma-separated list of variable names.
pub fn parse_vars(text: &str) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let name = piece.trim();
        if !crate::polynomial::is_identifier(name) {
            return Err(ParseError {
                position: offset,
                message: format!("`{}` is not a variable name", name),
                expected: Expected::Identifier,
            });
        }
        out.push(name.to_string());
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Canonical text form: terms in descending `ord`, explicit `*`, `^` for
/// powers, coefficients written as `a/b`.
pub fn format_polynomial(f: &Polynomial, ord: &MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let mut out = String::new();
    for (i, (m, c)) in f.sorted_terms(ord).into_iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = c.abs();
        let mono = format_monomial(m, ring);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(m: &MultiIndex, ring: &Ring) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

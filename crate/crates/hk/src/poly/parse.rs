//! ASCII expression parser for polynomials and field elements.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term { ('+' | '-') term }
//! term   := factor { ('*' | '/') factor }
//! factor := '-' factor | base [ '^' integer ]
//! base   := identifier | integer | '(' expr ')'
//! ```
//!
//! Identifiers resolve to ring variables first, then to the coefficient-field
//! symbol (extension generator or function-field variable). Division requires
//! an invertible constant divisor — fractions such as `1/(t^2+t)` parse as
//! field elements, while dividing by a genuine polynomial is rejected.
//! Exponents are nonnegative integers.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElem};
use crate::poly::{PolyRing, Polynomial};

/// Parse a polynomial over `ring`.
pub fn parse_polynomial(ring: &Arc<PolyRing>, input: &str) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at token {} in `{input}`",
            parser.pos
        )));
    }
    Ok(poly)
}

/// Parse a field element: the same grammar evaluated in a zero-variable ring.
pub fn parse_field_element(desc: &Arc<FieldDescriptor>, input: &str) -> Result<FieldElem> {
    let ring = PolyRing::new(desc, &[])?;
    let poly = parse_polynomial(&ring, input)?;
    poly.constant_value()
        .ok_or_else(|| Error::Parse(format!("`{input}` is not a field element")))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(u128),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '0'..='9' => {
                let mut v: u128 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(digit) = d.to_digit(10) {
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(digit as u128))
                            .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let c = rhs.constant_value().ok_or_else(|| {
                        Error::Parse("division by a non-constant polynomial".into())
                    })?;
                    acc = acc.mul_scalar(&c.inv()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(inner.neg());
        }
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) => {
                    let e: u64 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return base.pow(e);
                }
                _ => return Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Ident(name)) => {
                if self.ring.var_index(&name).is_some() {
                    Polynomial::variable(self.ring, &name)
                } else if self.ring.field().symbol() == Some(name.as_str()) {
                    Ok(Polynomial::constant(
                        self.ring,
                        FieldElem::generator(self.ring.field())?,
                    ))
                } else {
                    Err(Error::UnknownVariable(name))
                }
            }
            Some(Token::Int(v)) => {
                let p = self.ring.field().characteristic() as u128;
                let r = (v % p) as i64;
                Ok(Polynomial::constant(
                    self.ring,
                    FieldElem::from_integer(self.ring.field(), r),
                ))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "unexpected token {other:?}, expected identifier, integer or `(`"
            ))),
        }
    }
}

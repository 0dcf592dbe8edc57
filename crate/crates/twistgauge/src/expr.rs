//! Expression mini-language for the bracket calculator and fixtures.
//!
//! Grammar (LL(1), precedence low to high: `+`/`-`, `*`, postfix `~`):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | postfix
//! postfix := atom '~'*
//! atom    := '(' expr ')' | literal | identifier
//! literal := int ['/' (int | 'k')] | 'w' ['^' sint] | 'k' ['^' int]
//!          | 'sqrt2' | 'i'
//! ```
//!
//! `w` is the phase unit, `k` the inverse deformation parameter (so `k^2`
//! and `1/k` both denote powers of it), `~` is conjugation, and `*` is
//! scalar multiplication, the deformed product of algebra elements, or the
//! module action of a base element on a derivation, depending on the
//! operand kinds.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::derivations::{module_act, module_act_plain, Derivation, EvalMode};
use crate::grading::PhaseConvention;
use crate::polyalg::Poly;
use crate::scalars::Scalar;
use crate::starprod::star;

#[derive(Debug, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// A parsed value: scalar, algebra element, or derivation.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Poly(Poly),
    Deriv(Derivation),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Poly(_) => "algebra element",
            Value::Deriv(_) => "derivation",
        }
    }
}

/// Name bindings of a bundle: coordinates, base elements, derivations.
#[derive(Clone, Default)]
pub struct Bindings {
    map: BTreeMap<String, Value>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind_poly(&mut self, name: impl Into<String>, p: Poly) {
        self.map.insert(name.into(), Value::Poly(p));
    }

    pub fn bind_deriv(&mut self, name: impl Into<String>, d: Derivation) {
        self.map.insert(name.into(), Value::Deriv(d));
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        self.map.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Tilde,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => { out.push((i, Tok::Plus)); i += 1 }
            '-' => { out.push((i, Tok::Minus)); i += 1 }
            '*' => { out.push((i, Tok::Star)); i += 1 }
            '/' => { out.push((i, Tok::Slash)); i += 1 }
            '^' => { out.push((i, Tok::Caret)); i += 1 }
            '~' => { out.push((i, Tok::Tilde)); i += 1 }
            '(' => { out.push((i, Tok::LParen)); i += 1 }
            ')' => { out.push((i, Tok::RParen)); i += 1 }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = input[start..i].parse().map_err(|_| ParseError {
                    pos: start,
                    msg: "integer literal out of range".into(),
                })?;
                out.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
            }
            other => {
                return Err(ParseError { pos: i, msg: format!("unexpected character '{other}'") })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    bindings: &'a Bindings,
    conv: PhaseConvention,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            got => Err(ParseError {
                pos,
                msg: format!("expected {tok:?}, found {got:?}"),
            }),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.here(), msg: msg.into() })
    }

    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    acc = self.combine_add(acc, rhs, false)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    acc = self.combine_add(acc, rhs, true)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.parse_factor()?;
            acc = self.combine_mul(acc, rhs)?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Value, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            let v = self.parse_factor()?;
            return Ok(negate(v));
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Value, ParseError> {
        let mut v = self.parse_atom()?;
        while self.peek() == Some(&Tok::Tilde) {
            self.bump();
            v = match v {
                Value::Scalar(s) => Value::Scalar(s.star()),
                Value::Poly(p) => Value::Poly(p.star()),
                Value::Deriv(d) => Value::Deriv(d.star()),
            };
        }
        Ok(v)
    }

    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        // '^' already consumed
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            got => Err(ParseError { pos, msg: format!("expected exponent, found {got:?}") }),
        }
    }

    fn parse_atom(&mut self) -> Result<Value, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::LParen) => {
                let v = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == 0 {
                                return Err(ParseError { pos: dpos, msg: "division by zero".into() });
                            }
                            Ok(Value::Scalar(Scalar::from_ratio(n, d)))
                        }
                        Some(Tok::Ident(id)) if id == "k" => {
                            // `n/k` denotes n times the inverse parameter.
                            Ok(Value::Scalar(
                                &Scalar::from_int(n) * &Scalar::kappa_inv(1),
                            ))
                        }
                        got => Err(ParseError {
                            pos: dpos,
                            msg: format!("expected integer or 'k' after '/', found {got:?}"),
                        }),
                    }
                } else {
                    Ok(Value::Scalar(Scalar::from_int(n)))
                }
            }
            Some(Tok::Ident(id)) => match id.as_str() {
                "w" => {
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    Ok(Value::Scalar(Scalar::omega(e)))
                }
                "k" => {
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    if e < 0 {
                        return Err(ParseError {
                            pos,
                            msg: "k admits only nonnegative exponents".into(),
                        });
                    }
                    Ok(Value::Scalar(Scalar::kappa_inv(e as u32)))
                }
                "sqrt2" => Ok(Value::Scalar(Scalar::sqrt2())),
                "i" => Ok(Value::Scalar(Scalar::i())),
                name => match self.bindings.lookup(name) {
                    Some(v) => {
                        let mut v = v.clone();
                        if self.peek() == Some(&Tok::Caret) {
                            self.bump();
                            let e = self.parse_exponent()?;
                            v = self.power(v, e, pos)?;
                        }
                        Ok(v)
                    }
                    None => Err(ParseError {
                        pos,
                        msg: format!("unbound identifier '{name}'"),
                    }),
                },
            },
            got => Err(ParseError { pos, msg: format!("expected expression, found {got:?}") }),
        }
    }

    fn power(&self, v: Value, e: i64, pos: usize) -> Result<Value, ParseError> {
        match v {
            Value::Poly(p) => {
                if e < 0 {
                    return Err(ParseError {
                        pos,
                        msg: "negative powers of algebra elements are not supported".into(),
                    });
                }
                let mut acc = Poly::one(p.table());
                for _ in 0..e {
                    acc = star(&acc, &p, self.conv);
                }
                Ok(Value::Poly(acc))
            }
            other => Err(ParseError {
                pos,
                msg: format!("cannot raise a {} to a power", other.kind()),
            }),
        }
    }

    fn combine_add(&self, a: Value, b: Value, subtract: bool) -> Result<Value, ParseError> {
        let b = if subtract { negate(b) } else { b };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &y)),
            (Value::Poly(p), Value::Scalar(s)) => {
                Ok(Value::Poly(&p + &Poly::constant(p.table(), s)))
            }
            (Value::Scalar(s), Value::Poly(p)) => {
                Ok(Value::Poly(&Poly::constant(p.table(), s) + &p))
            }
            (Value::Poly(p), Value::Poly(q)) => Ok(Value::Poly(&p + &q)),
            (Value::Deriv(x), Value::Deriv(y)) => {
                if x.mode() != y.mode() {
                    return self.err("cannot add derivations of different modes");
                }
                Ok(Value::Deriv(x.add(&y)))
            }
            (a, b) => self.err(format!("cannot add {} and {}", a.kind(), b.kind())),
        }
    }

    fn combine_mul(&self, a: Value, b: Value) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(s), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(s)) => {
                Ok(Value::Poly(p.scale(&s)))
            }
            (Value::Scalar(s), Value::Deriv(d)) | (Value::Deriv(d), Value::Scalar(s)) => {
                Ok(Value::Deriv(d.scale(&s)))
            }
            (Value::Poly(p), Value::Poly(q)) => Ok(Value::Poly(star(&p, &q, self.conv))),
            (Value::Poly(p), Value::Deriv(d)) => {
                let acted = match d.mode() {
                    EvalMode::PhaseTwisted => module_act(&p, &d, self.conv)
                        .map_err(|e| ParseError { pos: 0, msg: e.to_string() })?,
                    EvalMode::Plain => module_act_plain(&p, &d),
                };
                Ok(Value::Deriv(acted))
            }
            (Value::Deriv(_), Value::Poly(_)) => {
                self.err("module coefficients act from the left: write b*X, not X*b")
            }
            (a, b) => self.err(format!("cannot multiply {} and {}", a.kind(), b.kind())),
        }
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-&s),
        Value::Poly(p) => Value::Poly((-&p).clone()),
        Value::Deriv(d) => Value::Deriv(d.scale(&Scalar::from_int(-1))),
    }
}

/// Parses an expression against a set of bundle bindings.
pub fn parse_expr(
    input: &str,
    bindings: &Bindings,
    conv: PhaseConvention,
) -> Result<Value, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0, bindings, conv, input_len: input.len() };
    let v = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a scalar literal expression (no bundle identifiers).
pub fn parse_scalar(input: &str) -> Result<Scalar, ParseError> {
    let bindings = Bindings::new();
    match parse_expr(input, &bindings, PhaseConvention::calibrated())? {
        Value::Scalar(s) => Ok(s),
        other => Err(ParseError {
            pos: 0,
            msg: format!("expected a scalar, found a {}", other.kind()),
        }),
    }
}

/// Parses a polynomial expression over the given bindings (generators and
/// base elements bound as polynomials).
pub fn parse_poly(
    input: &str,
    bindings: &Bindings,
    conv: PhaseConvention,
) -> Result<Poly, ParseError> {
    match parse_expr(input, bindings, conv)? {
        Value::Poly(p) => Ok(p),
        Value::Scalar(_) => Err(ParseError {
            pos: 0,
            msg: "expected an algebra element, found a scalar (no table context)".into(),
        }),
        other => Err(ParseError {
            pos: 0,
            msg: format!("expected an algebra element, found a {}", other.kind()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals_roundtrip() {
        for src in [
            "1/2", "sqrt2", "i", "w^-3", "k^2", "2*i*sqrt2", "1/k",
            "(1/2 + i*sqrt2)*w^-3*k^2",
        ] {
            let s = parse_scalar(src).unwrap();
            let rendered = s.to_string();
            let back = parse_scalar(&rendered).unwrap();
            assert_eq!(s, back, "roundtrip failed for {src}: rendered {rendered}");
        }
    }

    #[test]
    fn rendering_matches_canonical_form() {
        let s = parse_scalar("(1/2 + i*sqrt2)*w^-3*k^2").unwrap();
        let rendered = s.to_string();
        assert_eq!(parse_scalar(&rendered).unwrap(), s);
        // the canonical shape keeps the unit factors
        assert!(rendered.contains("w^-3"), "{rendered}");
        assert!(rendered.contains("k^2"), "{rendered}");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_scalar("1 + $").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_scalar("1 + unknown_name").unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn omega_arithmetic() {
        let s = parse_scalar("w^4 * w^-4").unwrap();
        assert!(s.is_one());
        let s = parse_scalar("-w^2 + w^2").unwrap();
        assert!(s.is_zero());
    }
}

//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are ASCII `[A-Za-z_][A-Za-z0-9_]*` and must name a ring
//! variable. Whitespace is ignored.

use super::field::PrimeField;
use super::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
    pub kind: PolyParseErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyParseErrorKind {
    Syntax,
    UnknownVariable,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: u64 = text[start..i].parse().map_err(|_| PolyParseError {
                    offset: start,
                    message: "integer literal too large".into(),
                    kind: PolyParseErrorKind::Syntax,
                })?;
                out.push((start, Tok::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(PolyParseError {
                    offset: start,
                    message: format!("unexpected character {:?}", text[start..].chars().next().unwrap()),
                    kind: PolyParseErrorKind::Syntax,
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
    field: PrimeField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError { offset: self.offset(), message: msg.into(), kind: PolyParseErrorKind::Syntax })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyParseError> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(self.field, n);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Num(_)) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(e)) => {
                    let e = *e;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyParseError> {
        let n = self.vars.len();
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                let c = (v % self.field.characteristic() as u64) as i64;
                Ok(Polynomial::constant(self.field, n, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(self.field, n, i)),
                    None => Err(PolyParseError {
                        offset,
                        message: format!("unknown variable `{}`", name),
                        kind: PolyParseErrorKind::UnknownVariable,
                    }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {:?}", t)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `field` in the named variables.
pub fn parse_polynomial(text: &str, vars: &[String], field: PrimeField) -> Result<Polynomial, PolyParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyParseError { offset: 0, message: "empty polynomial".into(), kind: PolyParseErrorKind::Syntax });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), vars, field };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Convenience used by tests and examples: variable names from a
/// comma-separated list.
pub fn var_names(list: &str) -> Vec<String> {
    list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses `text` and panics on error. Intended for tests and fixed inputs.
pub fn poly(text: &str, vars: &[String], field: PrimeField) -> Polynomial {
    parse_polynomial(text, vars, field).unwrap_or_else(|e| panic!("bad polynomial {:?}: {:?}", text, e))
}

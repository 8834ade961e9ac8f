//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are ring variables, or `t` over a function field. Division is
//! only allowed by expressions free of ring variables.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{PolyError, PolyRing, Polynomial};
use crate::coeff::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, pos));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((Tok::Int(digits.parse().expect("decimal digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((Tok::Ident(name), pos));
        } else {
            return Err(PolyError::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'r, F: Field> {
    ring: &'r Arc<PolyRing<F>>,
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl<'r, F: Field> Parser<'r, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.idx += 1;
                    let pos = self.pos();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(PolyError::DivisionNotAllowed { pos });
                    }
                    let inv = d.constant_term().inv().map_err(|_| PolyError::DivisionByZero { pos })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.idx += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.idx += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>, PolyError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.idx += 1;
        let e = match self.peek() {
            Some(Tok::Int(n)) => match u32::try_from(n) {
                Ok(e) => e,
                Err(_) => return self.syntax("exponent too large"),
            },
            _ => return self.syntax("expected a non-negative integer exponent"),
        };
        self.idx += 1;
        if base.len() == 1 {
            let t = &base.terms()[0];
            let mut exp = t.exp.clone();
            for i in 0..exp.len() {
                let v = exp.get(i).checked_mul(e);
                match v {
                    Some(v) => exp.set(i, v),
                    None => return self.syntax("exponent too large"),
                }
            }
            return Ok(Polynomial::monomial(self.ring, exp, t.coeff.pow(e as u64)));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial<F>, PolyError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                Ok(Polynomial::constant(self.ring, F::from_integer(self.ring.ctx(), &n)))
            }
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    return Ok(Polynomial::var(self.ring, i));
                }
                if name == "t" {
                    if let Some(t) = F::parameter(self.ring.ctx()) {
                        return Ok(Polynomial::constant(self.ring, t));
                    }
                }
                Err(PolyError::UnknownVariable { name, pos })
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.syntax("expected `)`");
                }
                self.idx += 1;
                Ok(inner)
            }
            Some(_) => self.syntax("expected a number, variable or `(`"),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial<F: Field>(text: &str, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, idx: 0, end: text.len() };
    let out = p.expr()?;
    if p.idx != p.toks.len() {
        return p.syntax("expected an operator");
    }
    Ok(out)
}

//! Expression syntax shared by relation strings, algebra files and the CLI.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' uint)?
//! atom   := integer | ident | '(' expr ')'
//! ```
//!
//! Products are noncommutative: the result is a free-algebra polynomial,
//! a map from words to coefficients, before any normalization. Identifiers
//! resolve to generators first, then to the field parameter `p`, then to
//! named scalars. Division is only by scalars.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::Word;
use crate::coeff::{Field, FieldElement};
use crate::error::{Error, Result};

pub type RawPoly = BTreeMap<Word, FieldElement>;
pub type ParamEnv = BTreeMap<String, FieldElement>;

/// Name reserved for the field parameter.
pub const PARAM: &str = "p";

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            k += 1;
        } else {
            return Err(Error::parse(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    field: Field,
    vars: &'a [String],
    env: &'a ParamEnv,
}

fn add_into(acc: &mut RawPoly, w: Word, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (w1, c1) in a {
        for (w2, c2) in b {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            add_into(&mut out, w, c1 * c2);
        }
    }
    out
}

fn scalar(c: FieldElement) -> RawPoly {
    let mut out = RawPoly::new();
    add_into(&mut out, Vec::new(), c);
    out
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            for (w, v) in t {
                add_into(&mut acc, w, if c == '-' { -&v } else { v });
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let col = self.col();
            let rhs = self.unary()?;
            if c == '*' {
                acc = mul(&acc, &rhs);
            } else {
                let d = match rhs.len() {
                    0 => return Err(Error::parse(col, "division by zero")),
                    1 => match rhs.get(&Vec::new()) {
                        Some(d) => d.clone(),
                        None => return Err(Error::parse(col, "division is only allowed by scalars")),
                    },
                    _ => return Err(Error::parse(col, "division is only allowed by scalars")),
                };
                let inv = d.inverse().map_err(|_| Error::parse(col, "division by zero"))?;
                acc = acc.into_iter().map(|(w, v)| (w, &v * &inv)).collect();
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RawPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.into_iter().map(|(w, v)| (w, -&v)).collect())
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RawPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let col = self.col();
            let e: u32 = match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    u32::try_from(n).map_err(|_| Error::parse(col, "exponent too large"))?
                }
                _ => return Err(Error::parse(col, "expected a nonnegative integer exponent")),
            };
            let mut acc = scalar(self.field.one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RawPoly> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(scalar(self.field.from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(g) = self.vars.iter().position(|v| *v == name) {
                    let mut out = RawPoly::new();
                    out.insert(vec![g], self.field.one());
                    return Ok(out);
                }
                if name == PARAM {
                    let p = self
                        .field
                        .param()
                        .map_err(|_| Error::parse(col, format!("the field {} has no parameter `p`", self.field)))?;
                    return Ok(scalar(p));
                }
                if let Some(v) = self.env.get(&name) {
                    if v.field() != self.field {
                        return Err(Error::parse(col, format!("`{name}` lives in {}, expected {}", v.field(), self.field)));
                    }
                    return Ok(scalar(v.clone()));
                }
                Err(Error::parse(col, format!("unknown identifier `{name}`")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::parse(self.col(), "expected `)`")),
                }
            }
            Some(t) => Err(Error::parse(col, format!("unexpected `{}`", tok_text(&t)))),
            None => Err(Error::parse(col, "unexpected end of expression")),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Int(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Op(c) => c.to_string(),
    }
}

/// Parses `text` into a free-algebra polynomial over `field`.
pub fn parse_expr(text: &str, field: Field, vars: &[String], env: &ParamEnv) -> Result<RawPoly> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(1, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, end_col: text.chars().count() + 1, field, vars, env };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        let (t, col) = &p.toks[p.pos];
        return Err(Error::parse(*col, format!("unexpected `{}`", tok_text(t))));
    }
    Ok(out)
}

/// Parses a scalar: an expression with no generators.
pub fn parse_scalar(text: &str, field: Field, env: &ParamEnv) -> Result<FieldElement> {
    let raw = parse_expr(text, field, &[], env)?;
    Ok(raw.get(&Vec::new()).cloned().unwrap_or_else(|| field.zero()))
}

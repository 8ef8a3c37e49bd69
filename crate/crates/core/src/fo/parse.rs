//! Parser for the concrete syntax
//!
//! ```text
//! phi ::= "E(" var "," var ")" | var "=" var | "~" phi
//!       | "(" phi "&" phi ")" | "(" phi "|" phi ")" | "(" phi "->" phi ")"
//!       | "exists " var ". " phi | "forall " var ". " phi
//! var ::= [a-z][a-z0-9]*
//! ```
//!
//! Whitespace between tokens is free. A redundant `"(" phi ")"` is also
//! accepted (so `~(x=y)` parses); the printer never emits it.

use super::ast::*;
use super::FoError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Edge,
    Exists,
    Forall,
    LParen,
    RParen,
    Comma,
    Dot,
    EqSign,
    Tilde,
    Amp,
    Pipe,
    Arrow,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, FoError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        let tok = match c {
            _ if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'=' => Tok::EqSign,
            b'~' => Tok::Tilde,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'E' => Tok::Edge,
            b'-' if b.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'a'..=b'z' => {
                while i + 1 < b.len() && (b[i + 1].is_ascii_lowercase() || b[i + 1].is_ascii_digit()) {
                    i += 1;
                }
                match &text[start..=i] {
                    "exists" => Tok::Exists,
                    "forall" => Tok::Forall,
                    v => Tok::Var(v.to_string()),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(FoError::syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), FoError> {
        let at = self.offset();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(FoError::syntax(at, format!("expected {what}"))),
        }
    }

    fn var(&mut self) -> Result<String, FoError> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Var(v)) => Ok(v),
            _ => Err(FoError::syntax(at, "expected a variable")),
        }
    }

    fn formula(&mut self) -> Result<Formula, FoError> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Edge) => {
                self.expect(Tok::LParen, "`(` after `E`")?;
                let x = self.var()?;
                self.expect(Tok::Comma, "`,`")?;
                let y = self.var()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Formula::Edge(x, y))
            }
            Some(Tok::Var(x)) => {
                self.expect(Tok::EqSign, "`=` after a variable")?;
                Ok(Formula::Eq(x, self.var()?))
            }
            Some(Tok::Tilde) => Ok(not(self.formula()?)),
            Some(q @ (Tok::Exists | Tok::Forall)) => {
                let x = self.var()?;
                self.expect(Tok::Dot, "`.` after the quantified variable")?;
                let body = Box::new(self.formula()?);
                Ok(if q == Tok::Exists {
                    Formula::Exists(x, body)
                } else {
                    Formula::Forall(x, body)
                })
            }
            Some(Tok::LParen) => {
                let a = self.formula()?;
                let at = self.offset();
                let op = self.next();
                if op == Some(Tok::RParen) {
                    return Ok(a);
                }
                let b = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                match op {
                    Some(Tok::Amp) => Ok(and(a, b)),
                    Some(Tok::Pipe) => Ok(or(a, b)),
                    Some(Tok::Arrow) => Ok(implies(a, b)),
                    _ => Err(FoError::syntax(at, "expected `&`, `|`, `->` or `)`")),
                }
            }
            _ => Err(FoError::syntax(at, "expected a formula")),
        }
    }
}

/// Parses a formula, free variables allowed.
pub fn parse_formula(text: &str) -> Result<Formula, FoError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(FoError::syntax(p.offset(), "trailing input"));
    }
    Ok(f)
}

/// Parses a sentence; a free variable is an error.
pub fn parse_fo(text: &str) -> Result<Formula, FoError> {
    let f = parse_formula(text)?;
    if let Some(v) = f.free_vars().into_iter().next() {
        return Err(FoError::Unbound(v));
    }
    Ok(f)
}

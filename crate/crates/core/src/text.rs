//! Canonical text form for polynomials.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! poly   := [sign] term { sign term }
//! term   := factor { "*" factor }
//! factor := NUMBER [ "/" NUMBER ] | VAR [ "^" NUMBER ]
//! sign   := "+" | "-"
//! ```
//!
//! Variable tokens are exactly the names of the target context (for this
//! crate: `X0..X3`, `F[i,j]`, `P[b,j]`, `t`, `T`), matched longest-first so
//! bracketed names never collide with single-letter ones. The printer emits
//! terms in descending monomial order with integer or `p/q` coefficients;
//! `parse(print(f)) == f` for every polynomial.

use crate::field::{Coeff, Rat};
use crate::ring::{AlgebraError, Monomial, Polynomial, RingContext};
use num_traits::Signed;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unknown variable `{0}` at byte {1}")]
    UnknownVariable(String, usize),
    #[error("expected {0} at byte {1}")]
    Expected(&'static str, usize),
    #[error("zero denominator at byte {0}")]
    ZeroDenominator(usize),
    #[error("integer literal out of range at byte {0}")]
    IntOutOfRange(usize),
    #[error("exponent out of range at byte {0}")]
    ExpOutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(ctx: &RingContext, input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    // Longest-first variable table so e.g. `F[1,2]` wins over a
    // hypothetical shorter prefix.
    let mut vars: Vec<(usize, &str)> = ctx
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (i, n.as_str()))
        .collect();
    vars.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));

    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    'outer: while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                pos += 1;
            }
            '+' => {
                out.push((Token::Plus, pos));
                pos += 1;
            }
            '-' => {
                out.push((Token::Minus, pos));
                pos += 1;
            }
            '*' => {
                out.push((Token::Star, pos));
                pos += 1;
            }
            '^' => {
                out.push((Token::Caret, pos));
                pos += 1;
            }
            '/' => {
                out.push((Token::Slash, pos));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((Token::Num(input[start..pos].to_string()), start));
            }
            _ => {
                for (idx, name) in &vars {
                    if input[pos..].starts_with(name) {
                        out.push((Token::Var(*idx), pos));
                        pos += name.len();
                        continue 'outer;
                    }
                }
                // Read ahead to a plausible token end for a helpful message.
                let end = input[pos..]
                    .find(|ch: char| "+-*^/ \t\n\r".contains(ch))
                    .map(|o| pos + o)
                    .unwrap_or(input.len());
                if end > pos {
                    return Err(ParseError::UnknownVariable(
                        input[pos..end].to_string(),
                        pos,
                    ));
                }
                return Err(ParseError::UnexpectedChar(c, pos));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a Arc<RingContext>,
    toks: Vec<(Token, usize)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn parse_uint<T: FromStr>(&mut self, err: fn(usize) -> ParseError) -> Result<T, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Num(s)) => s.parse::<T>().map_err(|_| err(pos)),
            _ => Err(ParseError::Expected("a number", pos)),
        }
    }

    fn parse_factor(&mut self) -> Result<(Rat, Vec<u32>), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Num(s)) => {
                let num: i64 = s.parse().map_err(|_| ParseError::IntOutOfRange(pos))?;
                let mut c = Rat::from_i64(num);
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    let den: i64 = self.parse_uint(ParseError::IntOutOfRange)?;
                    if den == 0 {
                        return Err(ParseError::ZeroDenominator(dpos));
                    }
                    c = c.mul_ref(&Rat::from_i64(den).inv());
                }
                Ok((c, vec![0; self.ctx.len()]))
            }
            Some(Token::Var(i)) => {
                let mut exps = vec![0u32; self.ctx.len()];
                let e: u32 = if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    self.parse_uint(ParseError::ExpOutOfRange)?
                } else {
                    1
                };
                exps[i] = e;
                Ok((Rat::one(), exps))
            }
            _ => Err(ParseError::Expected("a coefficient or variable", pos)),
        }
    }

    fn parse_term(&mut self) -> Result<(Rat, Monomial), ParseError> {
        let (mut coeff, mut exps) = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let (c, e) = self.parse_factor()?;
            coeff = coeff.mul_ref(&c);
            for (a, b) in exps.iter_mut().zip(e) {
                *a = a.checked_add(b).ok_or(ParseError::ExpOutOfRange(self.pos()))?;
            }
        }
        Ok((coeff, Monomial::from_exps(exps)))
    }

    fn parse_poly(&mut self) -> Result<Polynomial<Rat>, ParseError> {
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        let mut sign = Rat::one();
        match self.peek() {
            Some(Token::Plus) => {
                self.bump();
            }
            Some(Token::Minus) => {
                self.bump();
                sign = sign.neg_ref();
            }
            _ => {}
        }
        loop {
            let (c, m) = self.parse_term()?;
            terms.push((m, c.mul_ref(&sign)));
            match self.peek() {
                None => break,
                Some(Token::Plus) => {
                    self.bump();
                    sign = Rat::one();
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign = Rat::one().neg_ref();
                }
                _ => return Err(ParseError::Expected("`+`, `-`, or end of input", self.pos())),
            }
        }
        Ok(Polynomial::from_terms(self.ctx, terms))
    }
}

/// Parses the canonical grammar into a polynomial of `ctx`.
pub fn parse_polynomial(ctx: &Arc<RingContext>, input: &str) -> Result<Polynomial<Rat>, ParseError> {
    let toks = tokenize(ctx, input)?;
    let mut p = Parser {
        ctx,
        toks,
        at: 0,
        end: input.len(),
    };
    if p.peek().is_none() {
        return Err(ParseError::Expected("a nonempty polynomial", 0));
    }
    p.parse_poly()
}

/// Convenience wrapper that turns parse errors into `AlgebraError` text.
pub fn parse_or_algebra_error(
    ctx: &Arc<RingContext>,
    input: &str,
) -> Result<Polynomial<Rat>, AlgebraError> {
    parse_polynomial(ctx, input).map_err(|e| match e {
        ParseError::UnknownVariable(v, _) => AlgebraError::UnknownVariable(v),
        other => AlgebraError::UnknownVariable(other.to_string()),
    })
}

fn render_monomial(ctx: &RingContext, mono: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..ctx.len() {
        match mono.exp(i) {
            0 => {}
            1 => parts.push(ctx.name(i).to_string()),
            e => parts.push(format!("{}^{}", ctx.name(i), e)),
        }
    }
    parts.join("*")
}

fn coeff_magnitude_text(c: &Rat) -> String {
    let c = c.abs();
    if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders the given monomials of `poly` (assumed already ordered
/// descending) in the canonical text form.
pub fn render_terms<'a, C: Coeff + 'a>(
    poly: &'a Polynomial<C>,
    monos: impl Iterator<Item = &'a Monomial>,
) -> String {
    let ctx = poly.ctx();
    let mut out = String::new();
    let mut first = true;
    for mono in monos {
        let coeff = poly
            .coefficient(mono)
            .expect("render_terms called with a non-term monomial");
        let text = format!("{coeff}");
        let negative = text.starts_with('-');
        let magnitude = text.trim_start_matches('-').to_string();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono_text = render_monomial(ctx, mono);
        if mono_text.is_empty() {
            out.push_str(&magnitude);
        } else if magnitude == "1" {
            out.push_str(&mono_text);
        } else {
            out.push_str(&magnitude);
            out.push('*');
            out.push_str(&mono_text);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: terms sorted descending under `cmp`.
pub fn render_polynomial<C: Coeff>(
    poly: &Polynomial<C>,
    mut cmp: impl FnMut(&Monomial, &Monomial) -> std::cmp::Ordering,
) -> String {
    let mut monos: Vec<&Monomial> = poly.terms().map(|(m, _)| m).collect();
    monos.sort_by(|a, b| cmp(b, a));
    render_terms(poly, monos.into_iter())
}

/// Exact rational magnitude text (used by reports); sign handled by caller.
pub fn rational_text(c: &Rat) -> String {
    if c.is_negative() {
        format!("-{}", coeff_magnitude_text(c))
    } else {
        coeff_magnitude_text(c)
    }
}

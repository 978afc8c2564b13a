//! Parsing of the canonical text renderings: parameter monomials
//! (`t[a]^{e}` factors with an optional `*PER(start,len)[...]` tail),
//! parameter Laurent polynomials, and torus elements over a backend
//! (`coef * Y[i,r] Y[j,s]^-1 + ...`, or `X[i]` for finite backends).
//! The grammar accepts everything the Display impls emit, so parse ∘ render
//! round-trips.

use crate::params::{ExpSeq, ParamLaurent, ParamMonomial};
use crate::torus::{Backend, TorusElement, YMonomial, YVar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected token {0:?}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("X variables require a finite backend and Y variables a Cartan backend")]
    WrongVariableKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            ',' => {
                toks.push(Tok::Comma);
                i += 1;
            }
            '[' => {
                toks.push(Tok::LBracket);
                i += 1;
            }
            ']' => {
                toks.push(Tok::RBracket);
                i += 1;
            }
            '{' => {
                toks.push(Tok::LBrace);
                i += 1;
            }
            '}' => {
                toks.push(Tok::RBrace);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                toks.push(Tok::Int(s.parse().map_err(|_| ParseError::BadNumber(s.clone()))?));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            _ => return Err(ParseError::UnexpectedChar(c, i)),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok, ParseError> {
        let t = self.toks.get(self.pos).cloned().ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        let got = self.next()?;
        if got == t {
            Ok(())
        } else {
            Err(ParseError::UnexpectedToken(format!("{:?}", got)))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        match self.next()? {
            Tok::Int(v) => Ok(v),
            Tok::Minus => match self.next()? {
                Tok::Int(v) => Ok(-v),
                t => Err(ParseError::UnexpectedToken(format!("{:?}", t))),
            },
            t => Err(ParseError::UnexpectedToken(format!("{:?}", t))),
        }
    }

    /// A possibly-halved exponent: `3`, `-1`, `3/2`, `-1/2`; returns the
    /// doubled value.
    fn doubled_exponent(&mut self) -> Result<i64, ParseError> {
        let num = self.integer()?;
        if self.peek() == Some(&Tok::Slash) {
            self.next()?;
            match self.next()? {
                Tok::Int(2) => Ok(num),
                t => Err(ParseError::UnexpectedToken(format!("{:?}", t))),
            }
        } else {
            Ok(2 * num)
        }
    }

    /// One `t[a]^{e}` factor (the `t` identifier is already consumed).
    fn t_factor(&mut self) -> Result<ParamMonomial, ParseError> {
        self.expect(Tok::LBracket)?;
        let a = self.integer()?;
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Caret)?;
        self.expect(Tok::LBrace)?;
        let d = self.doubled_exponent()?;
        self.expect(Tok::RBrace)?;
        Ok(ParamMonomial::gen_doubled(a, d))
    }

    /// A `PER(start,len)[p1,...,pk]` periodic-tail factor (after `*`).
    fn per_factor(&mut self) -> Result<ParamMonomial, ParseError> {
        self.expect(Tok::LParen)?;
        let start = self.integer()?;
        self.expect(Tok::Comma)?;
        let len = self.integer()?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::LBracket)?;
        let mut pattern = Vec::new();
        loop {
            pattern.push(self.doubled_exponent()?);
            match self.next()? {
                Tok::Comma => continue,
                Tok::RBracket => break,
                t => return Err(ParseError::UnexpectedToken(format!("{:?}", t))),
            }
        }
        if pattern.len() as i64 != len {
            return Err(ParseError::UnexpectedToken("tail length mismatch".into()));
        }
        Ok(ParamMonomial(ExpSeq::with_tail(start, Vec::new(), pattern)))
    }

    /// A run of `t[..]^{..}` factors with an optional `*PER(..)[..]` tail, or
    /// the literal `1`.
    fn param_monomial(&mut self) -> Result<ParamMonomial, ParseError> {
        if self.peek() == Some(&Tok::Int(1)) {
            self.next()?;
            return Ok(ParamMonomial::one());
        }
        let mut out = ParamMonomial::one();
        let mut any = false;
        loop {
            match self.peek() {
                Some(Tok::Ident(id)) if id == "t" => {
                    self.next()?;
                    out = out.mul(&self.t_factor()?);
                    any = true;
                }
                Some(Tok::Star) if matches!(self.toks.get(self.pos + 1), Some(Tok::Ident(id)) if id == "PER") => {
                    self.next()?;
                    self.next()?;
                    out = out.mul(&self.per_factor()?);
                    any = true;
                }
                _ => break,
            }
        }
        if any {
            Ok(out)
        } else {
            Err(ParseError::UnexpectedToken(format!("{:?}", self.peek())))
        }
    }

    /// A sum of signed `mag param_monomial` terms.
    fn param_laurent(&mut self) -> Result<ParamLaurent, ParseError> {
        let mut out = ParamLaurent::zero();
        let ctx = crate::params::QuotientContext::None;
        let mut sign = 1i64;
        if self.peek() == Some(&Tok::Minus) {
            self.next()?;
            sign = -1;
        }
        loop {
            let mag = if let Some(Tok::Int(_)) = self.peek() {
                match self.next()? {
                    Tok::Int(v) => v,
                    _ => unreachable!(),
                }
            } else {
                1
            };
            let has_mono = matches!(self.peek(), Some(Tok::Ident(id)) if id == "t")
                || (self.peek() == Some(&Tok::Star)
                    && matches!(self.toks.get(self.pos + 1), Some(Tok::Ident(id)) if id == "PER"));
            let mono = if has_mono {
                self.param_monomial()?
            } else {
                ParamMonomial::one()
            };
            out = out.add(&ParamLaurent::from_monomial(mono).scale(sign * mag), &ctx);
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next()?;
                    sign = 1;
                }
                Some(Tok::Minus) => {
                    self.next()?;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// One `Y[i,r]` or `X[i]` factor with an optional `^e` exponent (the
    /// identifier is already consumed).
    fn var_factor(&mut self, kind: &str, finite: bool) -> Result<YMonomial, ParseError> {
        let v = match kind {
            "Y" if !finite => {
                self.expect(Tok::LBracket)?;
                let i = self.integer()?;
                self.expect(Tok::Comma)?;
                let r = self.integer()?;
                self.expect(Tok::RBracket)?;
                YVar::new(i as usize, r)
            }
            "X" if finite => {
                self.expect(Tok::LBracket)?;
                let i = self.integer()?;
                self.expect(Tok::RBracket)?;
                YVar::new(i as usize, 0)
            }
            _ => return Err(ParseError::WrongVariableKind),
        };
        let e = if self.peek() == Some(&Tok::Caret) {
            self.next()?;
            self.integer()?
        } else {
            1
        };
        Ok(YMonomial::from_pairs(&[(v, e)]))
    }

    /// A single term: optional coefficient (parameter monomial, integer, or
    /// parenthesized Laurent polynomial), optional `*`, then variable factors.
    fn element_term(&mut self, backend: &Arc<Backend>) -> Result<TorusElement, ParseError> {
        let finite = backend.is_finite_backend();
        let mut coeff = ParamLaurent::one();
        let mut saw_coeff = false;
        match self.peek() {
            Some(Tok::LParen) => {
                self.next()?;
                coeff = self.param_laurent()?;
                self.expect(Tok::RParen)?;
                saw_coeff = true;
            }
            Some(Tok::Int(_)) => {
                let v = match self.next()? {
                    Tok::Int(v) => v,
                    _ => unreachable!(),
                };
                if matches!(self.peek(), Some(Tok::Ident(id)) if id == "t") {
                    coeff = ParamLaurent::from_monomial(self.param_monomial()?).scale(v);
                } else {
                    coeff = ParamLaurent::one().scale(v);
                }
                saw_coeff = true;
            }
            Some(Tok::Ident(id)) if id == "t" => {
                coeff = ParamLaurent::from_monomial(self.param_monomial()?);
                saw_coeff = true;
            }
            _ => {}
        }
        if saw_coeff && self.peek() == Some(&Tok::Star) {
            self.next()?;
        }
        let mut mono = YMonomial::one();
        let mut saw_var = false;
        while let Some(Tok::Ident(id)) = self.peek() {
            let kind = id.clone();
            self.next()?;
            mono = mono.mul(&self.var_factor(&kind, finite)?);
            saw_var = true;
        }
        if !saw_coeff && !saw_var {
            return Err(ParseError::UnexpectedToken(format!("{:?}", self.peek())));
        }
        Ok(TorusElement::monomial(backend, mono).scale(&coeff))
    }

    fn element(&mut self, backend: &Arc<Backend>) -> Result<TorusElement, ParseError> {
        if self.peek() == Some(&Tok::Int(0)) && self.toks.len() == self.pos + 1 {
            self.next()?;
            return Ok(TorusElement::zero(backend));
        }
        let mut out = self.element_term(backend)?;
        while self.peek() == Some(&Tok::Plus) {
            self.next()?;
            out = out.add(&self.element_term(backend)?);
        }
        Ok(out)
    }
}

fn finish<T>(p: Parser, v: T) -> Result<T, ParseError> {
    match p.peek() {
        None => Ok(v),
        Some(t) => Err(ParseError::UnexpectedToken(format!("{:?}", t))),
    }
}

pub fn parse_param_monomial(input: &str) -> Result<ParamMonomial, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let m = p.param_monomial()?;
    finish(p, m)
}

pub fn parse_param_laurent(input: &str) -> Result<ParamLaurent, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let l = p.param_laurent()?;
    finish(p, l)
}

pub fn parse_element(backend: &Arc<Backend>, input: &str) -> Result<TorusElement, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let e = p.element(backend)?;
    finish(p, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, DynkinType};
    use crate::cluster::example_seed;
    use crate::params::QuotientContext;

    fn roundtrip(backend: &Arc<Backend>, el: &TorusElement) {
        let text = el.to_string();
        let back = parse_element(backend, &text).unwrap();
        assert_eq!(&back, el, "round-trip failed for {}", text);
    }

    #[test]
    fn monomial_roundtrip() {
        for m in [
            ParamMonomial::from_doubled_pairs(&[(-2, 1), (0, -4), (2, 3)]),
            ParamMonomial::one(),
            ParamMonomial(ExpSeq::with_tail(-2, vec![2, 0, -2], vec![0, -6, 0, 6])),
        ] {
            let back = parse_param_monomial(&m.to_string()).unwrap();
            assert_eq!(back, m, "{}", m);
        }
    }

    #[test]
    fn laurent_roundtrip() {
        let ctx = QuotientContext::None;
        let l = ParamLaurent::from_monomial(ParamMonomial::gen_doubled(1, 2))
            .sub(&ParamLaurent::one().scale(3), &ctx)
            .add(
                &ParamLaurent::from_monomial(ParamMonomial::gen_doubled(-2, -1)).scale(2),
                &ctx,
            );
        let back = parse_param_laurent(&l.to_string()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn element_roundtrip_cartan() {
        let backend = Backend::cartan(CartanData::new(DynkinType::A(2)), QuotientContext::Standard);
        let v = crate::groth::fundamental_class_thin(&backend, 1, 0).unwrap();
        roundtrip(&backend, &v);
        let p = v.star(&crate::groth::fundamental_class_thin(&backend, 2, 1).unwrap());
        roundtrip(&backend, &p);
        roundtrip(&backend, &TorusElement::zero(&backend));
        roundtrip(&backend, &TorusElement::one(&backend));
    }

    #[test]
    fn element_roundtrip_finite() {
        let seed = example_seed();
        let rhs = seed.exchange_rhs(0).unwrap();
        roundtrip(&seed.backend, &rhs);
    }

    #[test]
    fn errors() {
        let backend = Backend::cartan(CartanData::new(DynkinType::A(1)), QuotientContext::None);
        assert!(parse_element(&backend, "X[1]").is_err());
        assert!(parse_element(&backend, "Y[1,0] +").is_err());
        assert!(parse_element(&backend, "Y[1;0]").is_err());
        assert!(parse_param_monomial("t[1]").is_err());
    }
}

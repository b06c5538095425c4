//! Text format for presentations, and the scalar-literal grammar shared with
//! the command line.
//!
//! ```text
//! # comment
//! gens: u v w
//! rel: u*u
//! rel: (1/2 + 3*w)*x*y - z*z
//! ```
//!
//! A relation is a signed sum of terms `[coef*]gen(*gen)*`. A coefficient is
//! `p`, `p/q`, `w`, `w^k`, or a parenthesized sum such as `(1 - 2*w)`; `w`
//! denotes the cube root of unity. A bare `w` at the head of a term refers to
//! the generator when one is named `w`; inside parentheses it is always the
//! scalar unit.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{EisensteinScalar, Rational};

use super::ncpoly::NCPoly;
use super::presentation::Presentation;
use super::word::Word;
use super::NcError;

/// Parses the presentation file format.
pub fn parse_presentation(text: &str) -> Result<Presentation, NcError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations: Vec<NCPoly> = Vec::new();
    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            if names.is_some() {
                return Err(syntax(line_no, indent + 1, "duplicate gens: line"));
            }
            let mut declared = Vec::new();
            for name in rest.split_whitespace() {
                if !is_identifier(name) {
                    return Err(syntax(line_no, indent + 1, &format!("invalid generator name `{}`", name)));
                }
                declared.push(name.to_string());
            }
            if declared.is_empty() {
                return Err(syntax(line_no, indent + 1, "gens: line declares no generators"));
            }
            names = Some(declared);
        } else if let Some(rest) = trimmed.strip_prefix("rel:") {
            let Some(names) = names.as_ref() else {
                return Err(syntax(line_no, indent + 1, "rel: before gens:"));
            };
            let col0 = indent + "rel:".len();
            let mut lex = Lexer::new(rest, line_no, col0);
            let poly = parse_relation(&mut lex, names)?;
            lex.expect_end()?;
            if poly.is_zero() {
                return Err(syntax(line_no, indent + 1, "relation reduces to zero"));
            }
            if !poly.is_homogeneous() {
                return Err(NcError::InhomogeneousRelation { index: relations.len() });
            }
            relations.push(poly);
        } else {
            return Err(syntax(line_no, indent + 1, "expected `gens:` or `rel:`"));
        }
    }
    let Some(names) = names else {
        return Err(syntax(1, 1, "missing gens: line"));
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Presentation::new(&refs, relations)
}

/// Parses a scalar literal: `3`, `-1/2`, `w`, `w^2`, `2*w`, `(1/2 + 3*w)`,
/// or an unparenthesized sum of such terms.
pub fn parse_scalar(text: &str) -> Result<EisensteinScalar, NcError> {
    let mut lex = Lexer::new(text, 1, 0);
    let value = if lex.peek()? == Some(Token::LParen) {
        lex.next()?;
        let v = parse_scalar_sum(&mut lex)?;
        lex.expect(Token::RParen)?;
        v
    } else {
        parse_scalar_sum(&mut lex)?
    };
    lex.expect_end()?;
    Ok(value)
}

fn syntax(line: usize, col: usize, message: &str) -> NcError {
    NcError::Syntax { line, col, message: message.to_string() }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Star,
    Slash,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
}

struct Lexer<'a> {
    chars: core::iter::Peekable<core::str::CharIndices<'a>>,
    line: usize,
    col_offset: usize,
    last_col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str, line: usize, col_offset: usize) -> Self {
        Lexer { chars: text.char_indices().peekable(), line, col_offset, last_col: col_offset + 1 }
    }

    fn error(&self, message: &str) -> NcError {
        syntax(self.line, self.last_col, message)
    }

    fn peek(&mut self) -> Result<Option<Token>, NcError> {
        let mut probe = self.clone_state();
        probe.next()
    }

    fn clone_state(&self) -> Lexer<'a> {
        Lexer {
            chars: self.chars.clone(),
            line: self.line,
            col_offset: self.col_offset,
            last_col: self.last_col,
        }
    }

    fn next(&mut self) -> Result<Option<Token>, NcError> {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() {
                self.chars.next();
            } else {
                break;
            }
        }
        let Some(&(pos, c)) = self.chars.peek() else {
            return Ok(None);
        };
        self.last_col = self.col_offset + pos + 1;
        let simple = match c {
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            self.chars.next();
            return Ok(Some(tok));
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = self.chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    self.chars.next();
                } else {
                    break;
                }
            }
            let n = digits.parse::<BigInt>().expect("digit string parses");
            return Ok(Some(Token::Int(n)));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&(_, d)) = self.chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    ident.push(d);
                    self.chars.next();
                } else {
                    break;
                }
            }
            return Ok(Some(Token::Ident(ident)));
        }
        Err(self.error(&format!("unexpected character `{}`", c)))
    }

    fn expect(&mut self, tok: Token) -> Result<(), NcError> {
        match self.next()? {
            Some(t) if t == tok => Ok(()),
            Some(t) => Err(self.error(&format!("expected {:?}, found {:?}", tok, t))),
            None => Err(self.error(&format!("expected {:?}, found end of input", tok))),
        }
    }

    fn expect_end(&mut self) -> Result<(), NcError> {
        match self.next()? {
            None => Ok(()),
            Some(t) => Err(self.error(&format!("unexpected trailing {:?}", t))),
        }
    }
}

/// `rational := int [ '/' int ]`
fn parse_rational_tail(lex: &mut Lexer, first: BigInt) -> Result<Rational, NcError> {
    if lex.peek()? == Some(Token::Slash) {
        lex.next()?;
        match lex.next()? {
            Some(Token::Int(d)) => {
                if d.is_zero() {
                    Err(lex.error("zero denominator"))
                } else {
                    Ok(Rational::new(first, d))
                }
            }
            _ => Err(lex.error("expected denominator after `/`")),
        }
    } else {
        Ok(Rational::from(first))
    }
}

/// `wfactor := 'w' [ '^' int ]`, entered after the `w` identifier.
fn parse_omega_tail(lex: &mut Lexer) -> Result<EisensteinScalar, NcError> {
    if lex.peek()? == Some(Token::Caret) {
        lex.next()?;
        match lex.next()? {
            Some(Token::Int(k)) => {
                let k = (&k % BigInt::from(3)).try_into().unwrap_or(0u32);
                Ok(EisensteinScalar::omega_pow(k))
            }
            _ => Err(lex.error("expected integer exponent after `^`")),
        }
    } else {
        Ok(EisensteinScalar::omega())
    }
}

/// One signed scalar term: `rational ['*' wfactor] | wfactor`.
fn parse_scalar_term(lex: &mut Lexer, negative: bool) -> Result<EisensteinScalar, NcError> {
    let value = match lex.next()? {
        Some(Token::Int(n)) => {
            let r = parse_rational_tail(lex, n)?;
            if lex.peek()? == Some(Token::Star) {
                let mut probe = lex.clone_state();
                probe.next()?; // star
                if let Some(Token::Ident(id)) = probe.next()? {
                    if id == "w" {
                        lex.next()?;
                        lex.next()?;
                        let w = parse_omega_tail(lex)?;
                        w.scale_rational(&r)
                    } else {
                        EisensteinScalar::from_rational(r)
                    }
                } else {
                    EisensteinScalar::from_rational(r)
                }
            } else {
                EisensteinScalar::from_rational(r)
            }
        }
        Some(Token::Ident(id)) if id == "w" => parse_omega_tail(lex)?,
        Some(t) => return Err(lex.error(&format!("expected scalar term, found {:?}", t))),
        None => return Err(lex.error("expected scalar term, found end of input")),
    };
    Ok(if negative { -&value } else { value })
}

/// `sum := ['-'] sterm (('+'|'-') sterm)*`
fn parse_scalar_sum(lex: &mut Lexer) -> Result<EisensteinScalar, NcError> {
    let mut negative = false;
    if lex.peek()? == Some(Token::Minus) {
        lex.next()?;
        negative = true;
    }
    let mut acc = parse_scalar_term(lex, negative)?;
    loop {
        match lex.peek()? {
            Some(Token::Plus) => {
                lex.next()?;
                acc = &acc + &parse_scalar_term(lex, false)?;
            }
            Some(Token::Minus) => {
                lex.next()?;
                acc = &acc + &parse_scalar_term(lex, true)?;
            }
            _ => return Ok(acc),
        }
    }
}

/// One relation term: optional coefficient factors followed by generators.
fn parse_term(lex: &mut Lexer, names: &[String]) -> Result<(EisensteinScalar, Word), NcError> {
    let mut coeff = EisensteinScalar::one();
    let mut letters: Vec<usize> = Vec::new();
    loop {
        match lex.next()? {
            Some(Token::Int(n)) => {
                if !letters.is_empty() {
                    return Err(lex.error("coefficient must precede generators"));
                }
                let r = parse_rational_tail(lex, n)?;
                coeff = &coeff * &EisensteinScalar::from_rational(r);
            }
            Some(Token::LParen) => {
                if !letters.is_empty() {
                    return Err(lex.error("coefficient must precede generators"));
                }
                let inner = parse_scalar_sum(lex)?;
                lex.expect(Token::RParen)?;
                coeff = &coeff * &inner;
            }
            Some(Token::Ident(id)) => {
                if let Some(idx) = names.iter().position(|n| *n == id) {
                    letters.push(idx);
                } else if id == "w" {
                    if !letters.is_empty() {
                        return Err(lex.error("coefficient must precede generators"));
                    }
                    coeff = &coeff * &parse_omega_tail(lex)?;
                } else {
                    return Err(NcError::UnknownGenerator {
                        name: id,
                        line: lex.line,
                        col: lex.last_col,
                    });
                }
            }
            Some(t) => return Err(lex.error(&format!("unexpected {:?} in term", t))),
            None => return Err(lex.error("unexpected end of term")),
        }
        if lex.peek()? == Some(Token::Star) {
            lex.next()?;
        } else {
            break;
        }
    }
    if letters.is_empty() {
        return Err(lex.error("term has no generator"));
    }
    Ok((coeff, Word::new(letters)))
}

/// `relation := ['-'] term (('+'|'-') term)*`
fn parse_relation(lex: &mut Lexer, names: &[String]) -> Result<NCPoly, NcError> {
    let mut poly = NCPoly::zero();
    let mut negative = false;
    if lex.peek()? == Some(Token::Minus) {
        lex.next()?;
        negative = true;
    }
    loop {
        let (coeff, word) = parse_term(lex, names)?;
        let signed = if negative { -&coeff } else { coeff };
        poly.add_term(word, signed);
        match lex.peek()? {
            Some(Token::Plus) => {
                lex.next()?;
                negative = false;
            }
            Some(Token::Minus) => {
                lex.next()?;
                negative = true;
            }
            _ => return Ok(poly),
        }
    }
}

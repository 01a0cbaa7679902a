//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr    := term { ("+" | "-") term } ;
//! term    := unary { ("*" | "/") unary } ;
//! unary   := "-" unary | postfix ;
//! postfix := atom { "^" integer } ;
//! atom    := number | "x" | ident "(" expr ")" | "(" expr ")" ;
//! number  := integer [ "/" integer ] ;
//! ```
//!
//! `number` is greedy: `2/3` is a single fraction literal, so `x*2/3`
//! parses as `x*(2/3)`. An exponent is a bare integer, so `x^3/6` is
//! `(x^3)/6`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::ast::{Expr, FuncName};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected { found: String, expected: Vec<&'static str> },
    UnknownIdentifier(String),
    ZeroDenominator,
    ExponentTooLarge(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "syntax error: expected ")?;
                for (i, e) in expected.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if i + 1 == expected.len() { " or " } else { ", " })?;
                    }
                    f.write_str(e)?;
                }
                write!(f, ", found {found}")
            }
            ParseErrorKind::UnknownIdentifier(name) => write!(f, "unknown identifier `{name}`"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator in number literal"),
            ParseErrorKind::ExponentTooLarge(e) => write!(f, "exponent {e} is too large"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
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
    Invalid(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number `{n}`"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Invalid(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(input: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let n = input[start..end].parse().expect("ascii digits");
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push((start, Tok::Ident(input[start..end].to_string())));
            continue;
        }
        chars.next();
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => Tok::Invalid(other),
        };
        out.push((start, tok));
    }
    out.push((input.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const ATOM_START: &[&str] = &["a number", "`x`", "a function name", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Unexpected {
                found: self.peek().to_string(),
                expected: expected.to_vec(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, label: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[label]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::add(lhs, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::mul(lhs, self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::div(lhs, self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::neg(self.unary()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let offset = self.offset();
            match self.bump().1 {
                Tok::Int(n) => {
                    let k = n.to_u32().ok_or(ParseError {
                        offset,
                        kind: ParseErrorKind::ExponentTooLarge(n.to_string()),
                    })?;
                    base = Expr::pow(base, k);
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.unexpected(&["an integer exponent"]));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (offset, tok) = (self.offset(), self.peek().clone());
        match tok {
            Tok::Int(numer) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(denom) = self.peek_at(1).clone() {
                        self.bump();
                        let denom_offset = self.offset();
                        self.bump();
                        if denom.is_zero() {
                            return Err(ParseError {
                                offset: denom_offset,
                                kind: ParseErrorKind::ZeroDenominator,
                            });
                        }
                        return Ok(Expr::Const(Rational::new(numer, denom)));
                    }
                }
                Ok(Expr::Const(Rational::from_integer(numer)))
            }
            Tok::Ident(name) if name == "x" => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::Ident(name) => {
                let func = FuncName::from_ident(&name);
                if func.is_none() && name != "inverse" {
                    return Err(ParseError {
                        offset,
                        kind: ParseErrorKind::UnknownIdentifier(name),
                    });
                }
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(match func {
                    Some(f) => Expr::apply(f, arg),
                    None => Expr::inverse(arg),
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected(&["`+`", "`-`", "`*`", "`/`", "`^`", "`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(input),
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(&["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"]));
    }
    Ok(e)
}

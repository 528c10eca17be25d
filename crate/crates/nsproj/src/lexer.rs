//! Tokenizer for construction scripts.
//!
//! Number literals are exact rationals. Decimal notation is rejected
//! unless explicitly allowed, in which case it converts to the exact
//! fraction it denotes (3.25 becomes 13/4), never to a float.

use std::fmt;

use nsproj_core::Rational;
use num_bigint::BigInt;
use num_traits::pow::Pow;

use crate::ast::Span;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(Rational),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Semi,
    Equals,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(n) => format!("identifier `{}`", n),
            Tok::Number(_) => "number".to_string(),
            Tok::LBracket => "`[`".to_string(),
            Tok::RBracket => "`]`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Semi => "`;`".to_string(),
            Tok::Equals => "`=`".to_string(),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Slash => "`/`".to_string(),
            Tok::Caret => "`^`".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Lexical or grammatical error with its position and, when known, the
/// set of token shapes that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: u32,
    pub col: u32,
    pub message: String,
    pub expected: Vec<String>,
}

impl SyntaxError {
    pub fn new(span: Span, message: impl Into<String>) -> Self {
        SyntaxError {
            line: span.line,
            col: span.col,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    pub fn expecting(span: Span, message: impl Into<String>, expected: Vec<String>) -> Self {
        SyntaxError {
            line: span.line,
            col: span.col,
            message: message.into(),
            expected,
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {}: {}",
            self.line, self.col, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for SyntaxError {}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
    allow_decimal: bool,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn span(&self) -> Span {
        Span::new(self.line, self.col)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn lex_number(&mut self, start: Span) -> Result<Token, SyntaxError> {
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c as char);
                self.bump();
            } else {
                break;
            }
        }
        let mut frac = String::new();
        if self.peek() == Some(b'.') {
            if !self.allow_decimal {
                return Err(SyntaxError::new(
                    self.span(),
                    "decimal literals are disabled; write an exact fraction or pass --allow-decimal",
                ));
            }
            self.bump();
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    frac.push(c as char);
                    self.bump();
                } else {
                    break;
                }
            }
            if frac.is_empty() {
                return Err(SyntaxError::new(
                    self.span(),
                    "expected digits after decimal point",
                ));
            }
        }
        let whole: BigInt = digits.parse().expect("digit string");
        let value = if frac.is_empty() {
            Rational::from_integer(whole)
        } else {
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_digits: BigInt = frac.parse().expect("digit string");
            Rational::new(whole * &scale + frac_digits, scale)
        };
        Ok(Token {
            tok: Tok::Number(value),
            span: start,
        })
    }
}

/// Tokenize a script. Comments run from `#` to end of line.
pub fn lex(source: &str, allow_decimal: bool) -> Result<Vec<Token>, SyntaxError> {
    let mut lx = Lexer {
        src: source.as_bytes(),
        pos: 0,
        line: 1,
        col: 1,
        allow_decimal,
    };
    let mut out = Vec::new();
    loop {
        lx.skip_trivia();
        let span = lx.span();
        let Some(c) = lx.peek() else { break };
        let tok = match c {
            b'[' => {
                lx.bump();
                Tok::LBracket
            }
            b']' => {
                lx.bump();
                Tok::RBracket
            }
            b'(' => {
                lx.bump();
                Tok::LParen
            }
            b')' => {
                lx.bump();
                Tok::RParen
            }
            b',' => {
                lx.bump();
                Tok::Comma
            }
            b';' => {
                lx.bump();
                Tok::Semi
            }
            b'=' => {
                lx.bump();
                Tok::Equals
            }
            b'+' => {
                lx.bump();
                Tok::Plus
            }
            b'-' => {
                lx.bump();
                Tok::Minus
            }
            b'*' => {
                lx.bump();
                Tok::Star
            }
            b'/' => {
                lx.bump();
                Tok::Slash
            }
            b'^' => {
                lx.bump();
                Tok::Caret
            }
            b'0'..=b'9' => {
                out.push(lx.lex_number(span)?);
                continue;
            }
            b'.' => {
                return Err(SyntaxError::new(
                    span,
                    "number literals must start with a digit",
                ));
            }
            c if c == b'_' || c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(c) = lx.peek() {
                    if c == b'_' || c.is_ascii_alphanumeric() {
                        name.push(c as char);
                        lx.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(name)
            }
            other => {
                return Err(SyntaxError::new(
                    span,
                    format!("unexpected character `{}`", other as char),
                ));
            }
        };
        out.push(Token { tok, span });
    }
    Ok(out)
}

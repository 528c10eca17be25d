//! Recursive descent parser with static kind checking.
//!
//! Name resolution happens here, not at evaluation time: every identifier
//! must be bound before use, rebinding is an error, and each binding
//! carries a kind (number, point, line, matrix, conic, class) that the
//! checker uses to reject ill-sorted statements up front. Evaluation can
//! then assume all names resolve and all operands have the right shape.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::ast::{Arg, ConicRhs, Expr, Program, Span, Statement, StmtKind, VectorRhs};
use crate::lexer::{lex, SyntaxError, Tok, Token};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax(SyntaxError),
    UnknownIdentifier { line: u32, col: u32, name: String },
    Redefinition { line: u32, col: u32, name: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(e) => write!(f, "{}", e),
            ParseError::UnknownIdentifier { line, col, name } => write!(
                f,
                "unknown identifier `{}` at line {}, column {}",
                name, line, col
            ),
            ParseError::Redefinition { line, col, name } => write!(
                f,
                "`{}` is already defined; second binding at line {}, column {}",
                name, line, col
            ),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<SyntaxError> for ParseError {
    fn from(e: SyntaxError) -> Self {
        ParseError::Syntax(e)
    }
}

/// Kind attached to a bound name or inferred for an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Number,
    Point,
    Line,
    Matrix,
    Conic,
    Class,
}

impl SymKind {
    fn describe(self) -> &'static str {
        match self {
            SymKind::Number => "a number",
            SymKind::Point => "a point",
            SymKind::Line => "a line",
            SymKind::Matrix => "a matrix",
            SymKind::Conic => "a conic",
            SymKind::Class => "a classification",
        }
    }
}

/// Argument sort demanded by a predicate slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ArgClass {
    /// A point, a line, or an inline vector literal.
    Vec,
    Mat,
    Con,
}

const PREDICATES: &[(&str, &[ArgClass])] = &[
    ("almost_incident", &[ArgClass::Vec, ArgClass::Vec]),
    ("almost_parallel", &[ArgClass::Vec, ArgClass::Vec]),
    ("almost_collinear", &[ArgClass::Vec, ArgClass::Vec, ArgClass::Vec]),
    ("almost_equivalent", &[ArgClass::Vec, ArgClass::Vec]),
    ("almost_far", &[ArgClass::Vec]),
    (
        "almost_cocircular",
        &[ArgClass::Vec, ArgClass::Vec, ArgClass::Vec, ArgClass::Vec],
    ),
    ("almost_singular", &[ArgClass::Mat]),
    ("non_singular", &[ArgClass::Mat]),
    ("almost_affine", &[ArgClass::Mat]),
    ("conic_contains", &[ArgClass::Con, ArgClass::Vec]),
    ("in_eps_kernel", &[ArgClass::Mat, ArgClass::Vec]),
];

const RESERVED: &[&str] = &[
    "let", "point", "line", "matrix", "conic", "assert", "print", "not", "join", "meet", "apply",
    "through", "root", "shadow", "classify", "eps", "i",
];

/// Parse a script and run the static checks. `allow_decimal` lets number
/// literals use decimal notation (converted to exact fractions).
pub fn parse(source: &str, allow_decimal: bool) -> Result<Program, ParseError> {
    let tokens = lex(source, allow_decimal)?;
    let mut p = Parser {
        toks: tokens,
        pos: 0,
        symbols: HashMap::new(),
    };
    p.program()
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    symbols: HashMap<String, SymKind>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> Span {
        match self.toks.get(self.pos) {
            Some(t) => t.span,
            None => self
                .toks
                .last()
                .map(|t| t.span)
                .unwrap_or(Span::new(1, 1)),
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<String>) -> ParseError {
        let span = self.here();
        let msg = match self.peek() {
            Some(t) => format!("unexpected {}", t.tok.describe()),
            None => "unexpected end of input".to_string(),
        };
        ParseError::Syntax(SyntaxError::expecting(span, msg, expected))
    }

    fn expect(&mut self, want: &Tok) -> Result<Span, ParseError> {
        match self.peek() {
            Some(t) if t.tok == *want => Ok(self.bump().unwrap().span),
            _ => Err(self.unexpected(vec![want.describe()])),
        }
    }

    fn expect_name(&mut self) -> Result<(String, Span), ParseError> {
        match self.peek() {
            Some(Token {
                tok: Tok::Ident(n),
                span,
            }) => {
                let n = n.clone();
                let span = *span;
                if RESERVED.contains(&n.as_str()) {
                    return Err(ParseError::Syntax(SyntaxError::new(
                        span,
                        format!("`{}` is a reserved word and cannot be bound", n),
                    )));
                }
                self.bump();
                Ok((n, span))
            }
            _ => Err(self.unexpected(vec!["identifier".to_string()])),
        }
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let mut statements = Vec::new();
        while self.peek().is_some() {
            statements.push(self.statement()?);
        }
        Ok(Program { statements })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let span = self.here();
        let keyword = match self.peek() {
            Some(Token {
                tok: Tok::Ident(n), ..
            }) => n.clone(),
            _ => {
                return Err(self.unexpected(statement_keywords()));
            }
        };
        let kind = match keyword.as_str() {
            "let" => self.let_stmt()?,
            "point" => self.vector_stmt(false)?,
            "line" => self.vector_stmt(true)?,
            "matrix" => self.matrix_stmt()?,
            "conic" => self.conic_stmt()?,
            "assert" => self.assert_stmt(span)?,
            "print" => self.print_stmt()?,
            _ => {
                return Err(self.unexpected(statement_keywords()));
            }
        };
        Ok(Statement { span, kind })
    }

    fn bind(&mut self, name: String, span: Span, kind: SymKind) -> Result<(), ParseError> {
        if self.symbols.contains_key(&name) {
            return Err(ParseError::Redefinition {
                line: span.line,
                col: span.col,
                name,
            });
        }
        self.symbols.insert(name, kind);
        Ok(())
    }

    fn let_stmt(&mut self) -> Result<StmtKind, ParseError> {
        self.bump();
        let (name, name_span) = self.expect_name()?;
        if self.symbols.contains_key(&name) {
            return Err(ParseError::Redefinition {
                line: name_span.line,
                col: name_span.col,
                name,
            });
        }
        self.expect(&Tok::Equals)?;
        let value_span = self.here();
        let value = self.expr()?;
        let kind = self.kind_of(&value, value_span)?;
        let bound = match kind {
            SymKind::Number => SymKind::Number,
            SymKind::Class => SymKind::Class,
            other => {
                return Err(kind_error(
                    value_span,
                    format!(
                        "let binds a number or a classification, not {}; use point or line bindings for projective elements",
                        other.describe()
                    ),
                ));
            }
        };
        self.expect(&Tok::Semi)?;
        self.bind(name.clone(), name_span, bound)?;
        Ok(StmtKind::Let { name, value })
    }

    fn vector_stmt(&mut self, is_line: bool) -> Result<StmtKind, ParseError> {
        self.bump();
        let (name, name_span) = self.expect_name()?;
        self.expect(&Tok::Equals)?;
        let rhs_span = self.here();
        let rhs = self.vector_rhs()?;
        match (&rhs, is_line) {
            (VectorRhs::Join(..), false) => {
                return Err(kind_error(
                    rhs_span,
                    "join produces a line; a point binding needs a literal, meet, or apply",
                ));
            }
            (VectorRhs::Meet(..), true) => {
                return Err(kind_error(
                    rhs_span,
                    "meet produces a point; a line binding needs a literal, join, or apply",
                ));
            }
            _ => {}
        }
        match &rhs {
            VectorRhs::Literal(v) => {
                for e in v.iter() {
                    self.require_number(e, rhs_span)?;
                }
            }
            VectorRhs::Join(a, b) | VectorRhs::Meet(a, b) => {
                self.require_vector_arg(a, rhs_span)?;
                self.require_vector_arg(b, rhs_span)?;
            }
            VectorRhs::Apply(m, x) => {
                self.require_arg_class(m, ArgClass::Mat, rhs_span)?;
                self.require_vector_arg(x, rhs_span)?;
            }
        }
        self.expect(&Tok::Semi)?;
        let kind = if is_line { SymKind::Line } else { SymKind::Point };
        self.bind(name.clone(), name_span, kind)?;
        Ok(if is_line {
            StmtKind::Line { name, rhs }
        } else {
            StmtKind::Point { name, rhs }
        })
    }

    fn vector_rhs(&mut self) -> Result<VectorRhs, ParseError> {
        match self.peek() {
            Some(Token {
                tok: Tok::LBracket, ..
            }) => Ok(VectorRhs::Literal(self.vector_literal()?)),
            Some(Token {
                tok: Tok::Ident(n), ..
            }) if n == "join" || n == "meet" || n == "apply" => {
                let which = n.clone();
                self.bump();
                self.expect(&Tok::LParen)?;
                let a = self.arg()?;
                self.expect(&Tok::Comma)?;
                let b = self.arg()?;
                self.expect(&Tok::RParen)?;
                Ok(match which.as_str() {
                    "join" => VectorRhs::Join(a, b),
                    "meet" => VectorRhs::Meet(a, b),
                    _ => VectorRhs::Apply(a, b),
                })
            }
            _ => Err(self.unexpected(vec![
                "`[`".to_string(),
                "`join`".to_string(),
                "`meet`".to_string(),
                "`apply`".to_string(),
            ])),
        }
    }

    fn matrix_stmt(&mut self) -> Result<StmtKind, ParseError> {
        self.bump();
        let (name, name_span) = self.expect_name()?;
        self.expect(&Tok::Equals)?;
        let rows_span = self.here();
        let rows = self.matrix_literal()?;
        for row in rows.iter() {
            for e in row.iter() {
                self.require_number(e, rows_span)?;
            }
        }
        self.expect(&Tok::Semi)?;
        self.bind(name.clone(), name_span, SymKind::Matrix)?;
        Ok(StmtKind::Matrix { name, rows })
    }

    fn conic_stmt(&mut self) -> Result<StmtKind, ParseError> {
        self.bump();
        let (name, name_span) = self.expect_name()?;
        self.expect(&Tok::Equals)?;
        let rhs_span = self.here();
        let rhs = match self.peek() {
            Some(Token {
                tok: Tok::LBracket, ..
            }) => {
                let rows = self.matrix_literal()?;
                for row in rows.iter() {
                    for e in row.iter() {
                        self.require_number(e, rhs_span)?;
                    }
                }
                ConicRhs::Literal(rows)
            }
            Some(Token {
                tok: Tok::Ident(n), ..
            }) if n == "through" => {
                self.bump();
                self.expect(&Tok::LParen)?;
                let mut args = Vec::with_capacity(5);
                args.push(self.arg()?);
                for _ in 0..4 {
                    self.expect(&Tok::Comma)?;
                    args.push(self.arg()?);
                }
                self.expect(&Tok::RParen)?;
                for a in &args {
                    self.require_vector_arg(a, rhs_span)?;
                }
                let boxed: Box<[Arg; 5]> = match args.try_into() {
                    Ok(a) => Box::new(a),
                    Err(_) => unreachable!("exactly five arguments were parsed"),
                };
                ConicRhs::Through(boxed)
            }
            _ => {
                return Err(self.unexpected(vec!["`[`".to_string(), "`through`".to_string()]));
            }
        };
        self.expect(&Tok::Semi)?;
        self.bind(name.clone(), name_span, SymKind::Conic)?;
        Ok(StmtKind::Conic { name, rhs })
    }

    fn assert_stmt(&mut self, span: Span) -> Result<StmtKind, ParseError> {
        self.bump();
        let negated = matches!(
            self.peek(),
            Some(Token { tok: Tok::Ident(n), .. }) if n == "not"
        );
        if negated {
            self.bump();
        }
        let (pred, pred_span) = match self.peek() {
            Some(Token {
                tok: Tok::Ident(n),
                span,
            }) => (n.clone(), *span),
            _ => {
                return Err(self.unexpected(vec!["predicate name".to_string()]));
            }
        };
        let Some((_, classes)) = PREDICATES.iter().find(|(n, _)| *n == pred) else {
            return Err(ParseError::Syntax(SyntaxError::new(
                pred_span,
                format!("unknown predicate `{}`", pred),
            )));
        };
        self.bump();
        self.expect(&Tok::LParen)?;
        let mut args = Vec::new();
        if !matches!(self.peek(), Some(Token { tok: Tok::RParen, .. })) {
            args.push(self.arg()?);
            while matches!(self.peek(), Some(Token { tok: Tok::Comma, .. })) {
                self.bump();
                args.push(self.arg()?);
            }
        }
        self.expect(&Tok::RParen)?;
        self.expect(&Tok::Semi)?;
        if args.len() != classes.len() {
            return Err(kind_error(
                pred_span,
                format!(
                    "{} takes {} argument{}, got {}",
                    pred,
                    classes.len(),
                    if classes.len() == 1 { "" } else { "s" },
                    args.len()
                ),
            ));
        }
        for (a, class) in args.iter().zip(classes.iter()) {
            self.require_arg_class(a, *class, span)?;
        }
        Ok(StmtKind::Assert {
            negated,
            predicate: pred,
            args,
        })
    }

    fn print_stmt(&mut self) -> Result<StmtKind, ParseError> {
        self.bump();
        let target_span = self.here();
        let target = self.arg()?;
        if let Arg::Vector(v) = &target {
            for e in v.iter() {
                self.require_number(e, target_span)?;
            }
        } else if let Arg::Scalar(e) = &target {
            self.kind_of(e, target_span)?;
        }
        self.expect(&Tok::Semi)?;
        Ok(StmtKind::Print { target })
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        if matches!(self.peek(), Some(Token { tok: Tok::LBracket, .. })) {
            Ok(Arg::Vector(self.vector_literal()?))
        } else {
            Ok(Arg::Scalar(self.expr()?))
        }
    }

    fn vector_literal(&mut self) -> Result<Box<[Expr; 3]>, ParseError> {
        self.expect(&Tok::LBracket)?;
        let a = self.expr()?;
        self.expect(&Tok::Comma)?;
        let b = self.expr()?;
        self.expect(&Tok::Comma)?;
        let c = self.expr()?;
        self.expect(&Tok::RBracket)?;
        Ok(Box::new([a, b, c]))
    }

    fn matrix_literal(&mut self) -> Result<Box<[[Expr; 3]; 3]>, ParseError> {
        self.expect(&Tok::LBracket)?;
        let r0 = *self.vector_literal()?;
        self.expect(&Tok::Comma)?;
        let r1 = *self.vector_literal()?;
        self.expect(&Tok::Comma)?;
        let r2 = *self.vector_literal()?;
        self.expect(&Tok::RBracket)?;
        Ok(Box::new([r0, r1, r2]))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Token { tok: Tok::Minus, .. })) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token { tok: Tok::Caret, .. })) {
            self.bump();
            let negative = if matches!(self.peek(), Some(Token { tok: Tok::Minus, .. })) {
                self.bump();
                true
            } else {
                false
            };
            let n = self.integer_literal("exponent")?;
            let n = if negative { -n } else { n };
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn integer_literal(&mut self, what: &str) -> Result<i64, ParseError> {
        let span = self.here();
        match self.peek() {
            Some(Token {
                tok: Tok::Number(r),
                ..
            }) => {
                let r = r.clone();
                if !r.is_integer() {
                    return Err(ParseError::Syntax(SyntaxError::new(
                        span,
                        format!("{} must be an integer", what),
                    )));
                }
                let Some(n) = r.to_integer().to_i64() else {
                    return Err(ParseError::Syntax(SyntaxError::new(
                        span,
                        format!("{} is out of range", what),
                    )));
                };
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected(vec!["integer".to_string()])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let span = self.here();
        match self.peek() {
            Some(Token {
                tok: Tok::Number(r),
                ..
            }) => {
                let r = r.clone();
                self.bump();
                Ok(Expr::Number(r))
            }
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some(Token {
                tok: Tok::Ident(n), ..
            }) => {
                let name = n.clone();
                match name.as_str() {
                    "eps" => {
                        self.bump();
                        Ok(Expr::Eps)
                    }
                    "i" => {
                        self.bump();
                        Ok(Expr::Imag)
                    }
                    "root" => {
                        self.bump();
                        self.expect(&Tok::LParen)?;
                        let x = self.expr()?;
                        self.expect(&Tok::Comma)?;
                        let idx_span = self.here();
                        let n = self.integer_literal("root index")?;
                        if n < 1 {
                            return Err(ParseError::Syntax(SyntaxError::new(
                                idx_span,
                                "root index must be a positive integer",
                            )));
                        }
                        self.expect(&Tok::RParen)?;
                        Ok(Expr::Root(Box::new(x), n as u32))
                    }
                    "shadow" => {
                        self.bump();
                        self.expect(&Tok::LParen)?;
                        let x = self.expr()?;
                        self.expect(&Tok::RParen)?;
                        Ok(Expr::Shadow(Box::new(x)))
                    }
                    "classify" => {
                        self.bump();
                        self.expect(&Tok::LParen)?;
                        let x = self.expr()?;
                        self.expect(&Tok::RParen)?;
                        Ok(Expr::Classify(Box::new(x)))
                    }
                    _ if RESERVED.contains(&name.as_str()) => Err(ParseError::Syntax(
                        SyntaxError::new(
                            span,
                            format!("`{}` cannot appear inside an expression", name),
                        ),
                    )),
                    _ => {
                        if !self.symbols.contains_key(&name) {
                            return Err(ParseError::UnknownIdentifier {
                                line: span.line,
                                col: span.col,
                                name,
                            });
                        }
                        self.bump();
                        Ok(Expr::Var(name))
                    }
                }
            }
            _ => Err(self.unexpected(vec![
                "number".to_string(),
                "identifier".to_string(),
                "`(`".to_string(),
                "`-`".to_string(),
            ])),
        }
    }

    /// Infer the kind of an expression. Mismatches are reported at `span`,
    /// the start of the enclosing construct.
    fn kind_of(&self, e: &Expr, span: Span) -> Result<SymKind, ParseError> {
        match e {
            Expr::Number(_) | Expr::Eps | Expr::Imag => Ok(SymKind::Number),
            Expr::Var(n) => match self.symbols.get(n) {
                Some(k) => Ok(*k),
                None => Err(ParseError::UnknownIdentifier {
                    line: span.line,
                    col: span.col,
                    name: n.clone(),
                }),
            },
            Expr::Neg(a) => {
                self.require_number(a, span)?;
                Ok(SymKind::Number)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                self.require_number(a, span)?;
                self.require_number(b, span)?;
                Ok(SymKind::Number)
            }
            Expr::Pow(a, _) | Expr::Root(a, _) => {
                self.require_number(a, span)?;
                Ok(SymKind::Number)
            }
            Expr::Shadow(a) => match self.kind_of(a, span)? {
                SymKind::Number => Ok(SymKind::Number),
                SymKind::Point => Ok(SymKind::Point),
                SymKind::Line => Ok(SymKind::Line),
                other => Err(kind_error(
                    span,
                    format!(
                        "shadow applies to numbers, points, and lines, not {}",
                        other.describe()
                    ),
                )),
            },
            Expr::Classify(a) => {
                self.kind_of_classify(a, span)?;
                Ok(SymKind::Class)
            }
        }
    }

    fn kind_of_classify(&self, a: &Expr, span: Span) -> Result<(), ParseError> {
        match self.kind_of(a, span)? {
            SymKind::Number | SymKind::Point | SymKind::Line | SymKind::Matrix => Ok(()),
            other => Err(kind_error(
                span,
                format!(
                    "classify applies to numbers, points, lines, and matrices, not {}",
                    other.describe()
                ),
            )),
        }
    }

    fn require_number(&self, e: &Expr, span: Span) -> Result<(), ParseError> {
        match self.kind_of(e, span)? {
            SymKind::Number => Ok(()),
            other => Err(kind_error(
                span,
                format!("expected a number expression, got {}", other.describe()),
            )),
        }
    }

    fn require_vector_arg(&self, a: &Arg, span: Span) -> Result<(), ParseError> {
        match a {
            Arg::Vector(v) => {
                for e in v.iter() {
                    self.require_number(e, span)?;
                }
                Ok(())
            }
            Arg::Scalar(e) => match self.kind_of(e, span)? {
                SymKind::Point | SymKind::Line => Ok(()),
                other => Err(kind_error(
                    span,
                    format!(
                        "expected a point, a line, or a vector literal, got {}",
                        other.describe()
                    ),
                )),
            },
        }
    }

    fn require_arg_class(&self, a: &Arg, class: ArgClass, span: Span) -> Result<(), ParseError> {
        match class {
            ArgClass::Vec => self.require_vector_arg(a, span),
            ArgClass::Mat => match a {
                Arg::Scalar(e) if self.kind_of(e, span)? == SymKind::Matrix => Ok(()),
                _ => Err(kind_error(span, "expected a matrix name")),
            },
            ArgClass::Con => match a {
                Arg::Scalar(e) if self.kind_of(e, span)? == SymKind::Conic => Ok(()),
                _ => Err(kind_error(span, "expected a conic name")),
            },
        }
    }
}

fn kind_error(span: Span, message: impl Into<String>) -> ParseError {
    ParseError::Syntax(SyntaxError::new(span, message))
}

fn statement_keywords() -> Vec<String> {
    ["let", "point", "line", "matrix", "conic", "assert", "print"]
        .iter()
        .map(|k| format!("`{}`", k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bindings_and_asserts() {
        let src = "\
let a = 1/2 + eps;\n\
point P = [1, a, 0];\n\
line l = [0, 0, 1];\n\
assert almost_incident(P, l);\n\
print classify(P);\n";
        let prog = parse(src, false).unwrap();
        assert_eq!(prog.statements.len(), 5);
        assert_eq!(prog.statements[3].span.line, 4);
    }

    #[test]
    fn unknown_identifier_is_located() {
        let err = parse("point P = [1, q, 0];", false).unwrap_err();
        match err {
            ParseError::UnknownIdentifier { line, col, name } => {
                assert_eq!((line, col, name.as_str()), (1, 15, "q"));
            }
            other => panic!("wrong error: {:?}", other),
        }
    }

    #[test]
    fn redefinition_is_rejected() {
        let err = parse("let a = 1;\nlet a = 2;", false).unwrap_err();
        match err {
            ParseError::Redefinition { line, name, .. } => {
                assert_eq!((line, name.as_str()), (2, "a"));
            }
            other => panic!("wrong error: {:?}", other),
        }
    }

    #[test]
    fn join_needs_a_line_binding() {
        let err = parse("point P = join([1,0,0], [0,1,0]);", false).unwrap_err();
        let ParseError::Syntax(e) = err else {
            panic!("expected syntax error")
        };
        assert!(e.message.contains("join produces a line"));
    }

    #[test]
    fn predicate_arity_is_checked() {
        let err = parse("assert almost_collinear([1,0,0], [0,1,0]);", false).unwrap_err();
        let ParseError::Syntax(e) = err else {
            panic!("expected syntax error")
        };
        assert!(e.message.contains("takes 3 arguments"));
    }

    #[test]
    fn arithmetic_on_points_is_rejected() {
        let err = parse("point P = [1,0,0];\nlet a = P + 1;", false).unwrap_err();
        let ParseError::Syntax(e) = err else {
            panic!("expected syntax error")
        };
        assert_eq!(e.line, 2);
    }

    #[test]
    fn expected_tokens_are_reported() {
        let err = parse("point P [1,0,0];", false).unwrap_err();
        let ParseError::Syntax(e) = err else {
            panic!("expected syntax error")
        };
        assert_eq!(e.expected, vec!["`=`".to_string()]);
    }

    #[test]
    fn negative_exponents_parse() {
        let prog = parse("let h = eps^-1;", false).unwrap();
        match &prog.statements[0].kind {
            StmtKind::Let { value, .. } => {
                assert_eq!(*value, Expr::Pow(Box::new(Expr::Eps), -1));
            }
            other => panic!("wrong statement: {:?}", other),
        }
    }
}

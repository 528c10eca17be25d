//! Syntax tree for construction scripts.
//!
//! Statements are kept in source order with their spans. Display impls
//! print canonical script text; reparsing that text yields structurally
//! equal statements, which the round-trip tests rely on.

use std::fmt;

use nsproj_core::Rational;

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl Span {
    pub fn new(line: u32, col: u32) -> Self {
        Span { line, col }
    }
}

/// Scalar expression. Arithmetic stays in the series field; `shadow` and
/// `classify` are the two observers that leave it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Eps,
    Imag,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Root(Box<Expr>, u32),
    Shadow(Box<Expr>),
    Classify(Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.prec();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Number(r) => write!(f, "{}", r)?,
            Expr::Eps => write!(f, "eps")?,
            Expr::Imag => write!(f, "i")?,
            Expr::Var(n) => write!(f, "{}", n)?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 4)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, n) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{}", n)?;
            }
            Expr::Root(a, n) => write!(f, "root({}, {})", a, n)?,
            Expr::Shadow(a) => write!(f, "shadow({})", a)?,
            Expr::Classify(a) => write!(f, "classify({})", a)?,
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Argument position: a scalar expression (which covers bare identifiers)
/// or an inline three-entry vector literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Scalar(Expr),
    Vector(Box<[Expr; 3]>),
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Scalar(e) => write!(f, "{}", e),
            Arg::Vector(v) => write!(f, "[{}, {}, {}]", v[0], v[1], v[2]),
        }
    }
}

/// Right-hand side of a point or line binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VectorRhs {
    Literal(Box<[Expr; 3]>),
    /// Connecting line of two points; line bindings only.
    Join(Arg, Arg),
    /// Intersection of two lines; point bindings only.
    Meet(Arg, Arg),
    /// Image under a transformation: points map directly, lines by the
    /// incidence-preserving transport.
    Apply(Arg, Arg),
}

impl fmt::Display for VectorRhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorRhs::Literal(v) => write!(f, "[{}, {}, {}]", v[0], v[1], v[2]),
            VectorRhs::Join(a, b) => write!(f, "join({}, {})", a, b),
            VectorRhs::Meet(a, b) => write!(f, "meet({}, {})", a, b),
            VectorRhs::Apply(m, x) => write!(f, "apply({}, {})", m, x),
        }
    }
}

/// Right-hand side of a conic binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicRhs {
    Literal(Box<[[Expr; 3]; 3]>),
    Through(Box<[Arg; 5]>),
}

impl fmt::Display for ConicRhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicRhs::Literal(rows) => fmt_rows(f, rows),
            ConicRhs::Through(a) => {
                write!(f, "through({}, {}, {}, {}, {})", a[0], a[1], a[2], a[3], a[4])
            }
        }
    }
}

fn fmt_rows(f: &mut fmt::Formatter<'_>, rows: &[[Expr; 3]; 3]) -> fmt::Result {
    write!(f, "[")?;
    for (k, row) in rows.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
    }
    write!(f, "]")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Let { name: String, value: Expr },
    Point { name: String, rhs: VectorRhs },
    Line { name: String, rhs: VectorRhs },
    Matrix { name: String, rows: Box<[[Expr; 3]; 3]> },
    Conic { name: String, rhs: ConicRhs },
    Assert { negated: bool, predicate: String, args: Vec<Arg> },
    Print { target: Arg },
}

impl StmtKind {
    /// Statement keyword, used as the kind tag in reports.
    pub fn keyword(&self) -> &'static str {
        match self {
            StmtKind::Let { .. } => "let",
            StmtKind::Point { .. } => "point",
            StmtKind::Line { .. } => "line",
            StmtKind::Matrix { .. } => "matrix",
            StmtKind::Conic { .. } => "conic",
            StmtKind::Assert { .. } => "assert",
            StmtKind::Print { .. } => "print",
        }
    }

    /// Name bound by this statement, if any.
    pub fn binding(&self) -> Option<&str> {
        match self {
            StmtKind::Let { name, .. }
            | StmtKind::Point { name, .. }
            | StmtKind::Line { name, .. }
            | StmtKind::Matrix { name, .. }
            | StmtKind::Conic { name, .. } => Some(name),
            _ => None,
        }
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Let { name, value } => write!(f, "let {} = {};", name, value),
            StmtKind::Point { name, rhs } => write!(f, "point {} = {};", name, rhs),
            StmtKind::Line { name, rhs } => write!(f, "line {} = {};", name, rhs),
            StmtKind::Matrix { name, rows } => {
                write!(f, "matrix {} = ", name)?;
                fmt_rows(f, rows)?;
                write!(f, ";")
            }
            StmtKind::Conic { name, rhs } => write!(f, "conic {} = {};", name, rhs),
            StmtKind::Assert {
                negated,
                predicate,
                args,
            } => {
                write!(f, "assert ")?;
                if *negated {
                    write!(f, "not ")?;
                }
                write!(f, "{}(", predicate)?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", a)?;
                }
                write!(f, ");")
            }
            StmtKind::Print { target } => write!(f, "print {};", target),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub span: Span,
    pub kind: StmtKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}

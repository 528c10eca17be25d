//! Script language and reporting layer on top of nsproj-core.
//!
//! A construction script is a list of statements: bindings for numbers,
//! points, lines, matrices, and conics, assertions over the almost
//! predicates, and print requests. [`parse`] turns source text into a
//! checked [`ast::Program`], [`evaluate`] runs it, and the resulting
//! [`report::EvaluationReport`] renders as aligned text or as
//! deterministic JSON.

pub mod ast;
pub mod interp;
pub mod lexer;
pub mod parser;
pub mod report;

pub use ast::Program;
pub use interp::{error_code, evaluate};
pub use lexer::SyntaxError;
pub use parser::{parse, ParseError};
pub use report::EvaluationReport;

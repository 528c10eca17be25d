//! Evaluation reports in text and JSON form.
//!
//! The JSON emitter is deterministic: field order follows struct
//! declaration order, map-free, and rationals print as canonical
//! fraction strings, so the same program always serializes to the same
//! bytes. Consumers can diff reports directly.

use nsproj_core::{ConicForm, HyperMatrix, HyperNumber, HyperVector, Rational, Role};
use serde::Serialize;

/// A value carried by a report row, still in exact form.
#[derive(Clone, Debug)]
pub enum ReportValue {
    Number(HyperNumber),
    Vector(HyperVector),
    Matrix(HyperMatrix),
    Conic(ConicForm),
    Class {
        label: &'static str,
        det_leading: Option<HyperNumber>,
    },
    Bool(bool),
}

impl ReportValue {
    /// Render for the text report. `with_role` controls whether vectors
    /// carry their point/line tag; binding rows drop it because the
    /// statement keyword already says which it is.
    pub fn text(&self, with_role: bool) -> String {
        match self {
            ReportValue::Number(n) => n.to_string(),
            ReportValue::Vector(v) => {
                let body = bracketed(v.entries());
                if with_role {
                    format!("{} {}", role_tag(v.role()), body)
                } else {
                    body
                }
            }
            ReportValue::Matrix(m) => matrix_text(m),
            ReportValue::Conic(c) => {
                if with_role {
                    format!("conic {}", matrix_text(c.matrix()))
                } else {
                    matrix_text(c.matrix())
                }
            }
            ReportValue::Class { label, det_leading } => match det_leading {
                Some(d) => format!("{} (leading determinant term {})", label, d),
                None => (*label).to_string(),
            },
            ReportValue::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> JsonValue {
        match self {
            ReportValue::Number(n) => JsonValue::Number { terms: terms_of(n) },
            ReportValue::Vector(v) => {
                let entries: Vec<Vec<JsonTerm>> = v.entries().iter().map(terms_of).collect();
                match v.role() {
                    Role::Point => JsonValue::Point { entries },
                    Role::Line => JsonValue::Line { entries },
                    Role::Plain => JsonValue::Vector { entries },
                }
            }
            ReportValue::Matrix(m) => JsonValue::Matrix {
                rows: matrix_terms(m),
            },
            ReportValue::Conic(c) => JsonValue::Conic {
                rows: matrix_terms(c.matrix()),
            },
            ReportValue::Class { label, det_leading } => JsonValue::Class {
                value: label,
                determinant_leading_term: det_leading.as_ref().map(terms_of),
            },
            ReportValue::Bool(b) => JsonValue::Bool { value: *b },
        }
    }
}

fn role_tag(role: Role) -> &'static str {
    match role {
        Role::Point => "point",
        Role::Line => "line",
        Role::Plain => "vector",
    }
}

fn bracketed(entries: &[HyperNumber]) -> String {
    let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn matrix_text(m: &HyperMatrix) -> String {
    let rows: Vec<String> = m.rows().iter().map(|r| bracketed(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn terms_of(n: &HyperNumber) -> Vec<JsonTerm> {
    n.terms()
        .iter()
        .map(|t| JsonTerm {
            exp: rational_str(&t.exponent),
            re: rational_str(&t.coefficient.re),
            im: rational_str(&t.coefficient.im),
        })
        .collect()
}

fn matrix_terms(m: &HyperMatrix) -> Vec<Vec<Vec<JsonTerm>>> {
    m.rows()
        .iter()
        .map(|row| row.iter().map(terms_of).collect())
        .collect()
}

/// Diagnostic quantity attached to a predicate verdict: the number the
/// decision was read off from.
#[derive(Clone, Debug)]
pub struct Witness {
    pub label: &'static str,
    pub value: ReportValue,
}

#[derive(Clone, Debug)]
pub enum StatementStatus {
    /// Binding or print that completed.
    Ok,
    Pass,
    Fail,
    Error {
        code: &'static str,
        message: String,
    },
    /// Not run because a referenced name failed to evaluate earlier.
    Skipped {
        on: Vec<String>,
    },
}

#[derive(Clone, Debug)]
pub struct StatementRecord {
    pub index: usize,
    pub line: u32,
    pub kind: &'static str,
    pub name: Option<String>,
    pub summary: String,
    pub status: StatementStatus,
    pub value: Option<ReportValue>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct EvaluationReport {
    pub statements: Vec<StatementRecord>,
}

impl EvaluationReport {
    pub fn has_errors(&self) -> bool {
        self.statements.iter().any(|s| {
            matches!(
                s.status,
                StatementStatus::Error { .. } | StatementStatus::Skipped { .. }
            )
        })
    }

    pub fn has_failures(&self) -> bool {
        self.statements
            .iter()
            .any(|s| matches!(s.status, StatementStatus::Fail))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.statements {
            out.push_str(&self.row_text(s));
            out.push('\n');
        }
        out
    }

    fn row_text(&self, s: &StatementRecord) -> String {
        let stripped = s.summary.strip_suffix(';').unwrap_or(&s.summary);
        match &s.status {
            StatementStatus::Ok => {
                let mut row = match (s.kind, &s.value) {
                    ("print", Some(v)) => {
                        let target = stripped.strip_prefix("print ").unwrap_or(stripped);
                        format!("{} = {}", target, v.text(true))
                    }
                    (_, Some(v)) => match &s.name {
                        Some(name) => format!("{} {} = {}", s.kind, name, v.text(false)),
                        None => format!("{} .. ok", stripped),
                    },
                    _ => format!("{} .. ok", stripped),
                };
                if let Some(note) = &s.note {
                    row.push_str(&format!("  ({})", note));
                }
                row
            }
            StatementStatus::Pass => {
                let body = stripped.strip_prefix("assert ").unwrap_or(stripped);
                format!("ASSERT {} .. PASS", body)
            }
            StatementStatus::Fail => {
                let body = stripped.strip_prefix("assert ").unwrap_or(stripped);
                let mut row = format!("ASSERT {} .. FAIL", body);
                if let Some(w) = &s.witness {
                    row.push_str(&format!("  ({} = {})", w.label, w.value.text(true)));
                }
                row
            }
            StatementStatus::Error { code, message } => {
                format!("{} .. ERROR {}: {}", stripped, code, message)
            }
            StatementStatus::Skipped { on } => {
                format!("{} .. SKIP (needs {})", stripped, on.join(", "))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            schema: 1,
            statements: self.statements.iter().map(json_statement).collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("report serialization cannot fail");
        s.push('\n');
        s
    }
}

fn json_statement(s: &StatementRecord) -> JsonStatement {
    let (status, error_code, error_message, skipped_on) = match &s.status {
        StatementStatus::Ok => ("ok", None, None, None),
        StatementStatus::Pass => ("pass", None, None, None),
        StatementStatus::Fail => ("fail", None, None, None),
        StatementStatus::Error { code, message } => {
            ("error", Some(*code), Some(message.clone()), None)
        }
        StatementStatus::Skipped { on } => ("skipped", None, None, Some(on.clone())),
    };
    JsonStatement {
        index: s.index,
        line: s.line,
        kind: s.kind,
        name: s.name.clone(),
        summary: s.summary.clone(),
        status,
        value: s.value.as_ref().map(ReportValue::to_json),
        witness: s.witness.as_ref().map(|w| JsonWitness {
            label: w.label,
            value: w.value.to_json(),
        }),
        note: s.note.clone(),
        error_code,
        error_message,
        skipped_on,
    }
}

#[derive(Serialize)]
struct JsonReport {
    schema: u32,
    statements: Vec<JsonStatement>,
}

#[derive(Serialize)]
struct JsonStatement {
    index: usize,
    line: u32,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    summary: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<JsonValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<JsonWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_code: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped_on: Option<Vec<String>>,
}

#[derive(Serialize)]
struct JsonWitness {
    label: &'static str,
    value: JsonValue,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum JsonValue {
    Number {
        terms: Vec<JsonTerm>,
    },
    Point {
        entries: Vec<Vec<JsonTerm>>,
    },
    Line {
        entries: Vec<Vec<JsonTerm>>,
    },
    Vector {
        entries: Vec<Vec<JsonTerm>>,
    },
    Matrix {
        rows: Vec<Vec<Vec<JsonTerm>>>,
    },
    Conic {
        rows: Vec<Vec<Vec<JsonTerm>>>,
    },
    Class {
        value: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        determinant_leading_term: Option<Vec<JsonTerm>>,
    },
    Bool {
        value: bool,
    },
}

#[derive(Serialize)]
struct JsonTerm {
    exp: String,
    re: String,
    im: String,
}

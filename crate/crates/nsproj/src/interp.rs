//! Statement-by-statement evaluator.
//!
//! Statements run in source order. A failed binding poisons its name:
//! later statements that mention the name are skipped and, if they bind,
//! poison their own name in turn, so one error never cascades into a
//! wall of spurious diagnostics. A failed assertion does not poison
//! anything; evaluation continues with the environment unchanged.

use std::collections::HashMap;

use nsproj_core::{
    almost_collinear, almost_incident, almost_parallel, cocircularity_residual,
    is_almost_cocircular, normalized_determinant, ConicForm, Error, FieldConfig, FieldMode,
    HyperMatrix, HyperNumber, HyperVector, MatrixClass, Role,
};

use crate::ast::{Arg, ConicRhs, Expr, Program, StmtKind, VectorRhs};
use crate::report::{EvaluationReport, ReportValue, StatementRecord, StatementStatus, Witness};

/// Stable machine-readable code for an evaluation error.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::NotRealPositive => "not_real_positive",
        Error::IrrationalRoot => "irrational_root",
        Error::UnlimitedNumber => "unlimited_number",
        Error::ZeroArgument => "zero_argument",
        Error::EvaluationError => "evaluation_error",
        Error::ZeroVector => "zero_vector",
        Error::DimensionMismatch => "dimension_mismatch",
        Error::DegeneratePair => "degenerate_pair",
        Error::UnsupportedArity => "unsupported_arity",
        Error::ZeroMatrix => "zero_matrix",
        Error::SingularMatrix => "singular_matrix",
        Error::ComplexModeUnsupported => "complex_mode_unsupported",
        Error::RealModeUnsupported => "real_mode_unsupported",
        Error::DegenerateCrossRatio => "degenerate_cross_ratio",
        Error::DegenerateFivePoints => "degenerate_five_points",
        Error::AsymmetricConic => "asymmetric_conic",
        Error::UnsupportedExponent => "unsupported_exponent",
        _ => "error",
    }
}

#[derive(Clone, Debug)]
enum Value {
    Number(HyperNumber),
    Vector(HyperVector),
    Matrix(HyperMatrix),
    Conic(ConicForm),
    Class {
        label: &'static str,
        det_leading: Option<HyperNumber>,
    },
}

enum Slot {
    Ready(Value),
    Poisoned,
}

/// Evaluate a parsed program and collect one record per statement.
pub fn evaluate(prog: &Program, cfg: FieldConfig) -> EvaluationReport {
    let mut env: HashMap<String, Slot> = HashMap::new();
    let mut report = EvaluationReport::default();
    for (index, stmt) in prog.statements.iter().enumerate() {
        let mut record = StatementRecord {
            index,
            line: stmt.span.line,
            kind: stmt.kind.keyword(),
            name: stmt.kind.binding().map(str::to_string),
            summary: stmt.kind.to_string(),
            status: StatementStatus::Ok,
            value: None,
            witness: None,
            note: None,
        };
        let mut blocked = poisoned_refs(&stmt.kind, &env);
        if !blocked.is_empty() {
            blocked.sort();
            blocked.dedup();
            record.status = StatementStatus::Skipped { on: blocked };
            if let Some(name) = stmt.kind.binding() {
                env.insert(name.to_string(), Slot::Poisoned);
            }
            report.statements.push(record);
            continue;
        }
        run_statement(&stmt.kind, cfg, &mut env, &mut record);
        report.statements.push(record);
    }
    report
}

fn run_statement(
    kind: &StmtKind,
    cfg: FieldConfig,
    env: &mut HashMap<String, Slot>,
    record: &mut StatementRecord,
) {
    let ev = Evaluator { cfg, env };
    match kind {
        StmtKind::Let { name, value } => {
            bind(ev.eval_expr(value), name, env, record);
        }
        StmtKind::Point { name, rhs } => {
            let result = ev.eval_vector_rhs(rhs, Role::Point, record);
            bind(result.map(Value::Vector), name, env, record);
        }
        StmtKind::Line { name, rhs } => {
            let result = ev.eval_vector_rhs(rhs, Role::Line, record);
            bind(result.map(Value::Vector), name, env, record);
        }
        StmtKind::Matrix { name, rows } => {
            let result = ev.eval_matrix(rows);
            bind(result.map(Value::Matrix), name, env, record);
        }
        StmtKind::Conic { name, rhs } => {
            let result = match rhs {
                ConicRhs::Literal(rows) => ev.eval_matrix(rows).and_then(ConicForm::new),
                ConicRhs::Through(args) => ev.eval_through(args),
            };
            bind(result.map(Value::Conic), name, env, record);
        }
        StmtKind::Assert {
            negated,
            predicate,
            args,
        } => match ev.eval_predicate(predicate, args) {
            Ok((verdict, witness)) => {
                record.witness = witness;
                record.status = if verdict != *negated {
                    StatementStatus::Pass
                } else {
                    StatementStatus::Fail
                };
            }
            Err(e) => {
                record.status = StatementStatus::Error {
                    code: error_code(&e),
                    message: e.to_string(),
                };
            }
        },
        StmtKind::Print { target } => match ev.eval_arg(target, Role::Plain) {
            Ok(v) => {
                record.value = Some(to_report(&v));
            }
            Err(e) => {
                record.status = StatementStatus::Error {
                    code: error_code(&e),
                    message: e.to_string(),
                };
            }
        },
    }
}

fn bind(
    result: Result<Value, Error>,
    name: &str,
    env: &mut HashMap<String, Slot>,
    record: &mut StatementRecord,
) {
    match result {
        Ok(v) => {
            record.value = Some(to_report(&v));
            env.insert(name.to_string(), Slot::Ready(v));
        }
        Err(e) => {
            record.status = StatementStatus::Error {
                code: error_code(&e),
                message: e.to_string(),
            };
            env.insert(name.to_string(), Slot::Poisoned);
        }
    }
}

fn to_report(v: &Value) -> ReportValue {
    match v {
        Value::Number(n) => ReportValue::Number(n.clone()),
        Value::Vector(x) => ReportValue::Vector(x.clone()),
        Value::Matrix(m) => ReportValue::Matrix(m.clone()),
        Value::Conic(c) => ReportValue::Conic(c.clone()),
        Value::Class { label, det_leading } => ReportValue::Class {
            label,
            det_leading: det_leading.clone(),
        },
    }
}

struct Evaluator<'a> {
    cfg: FieldConfig,
    env: &'a HashMap<String, Slot>,
}

impl Evaluator<'_> {
    fn lookup(&self, name: &str) -> Result<Value, Error> {
        match self.env.get(name) {
            Some(Slot::Ready(v)) => Ok(v.clone()),
            _ => Err(Error::EvaluationError),
        }
    }

    fn eval_expr(&self, e: &Expr) -> Result<Value, Error> {
        let cfg = self.cfg;
        match e {
            Expr::Number(r) => Ok(Value::Number(HyperNumber::from_rational(r.clone()))),
            Expr::Eps => Ok(Value::Number(HyperNumber::epsilon())),
            Expr::Imag => {
                if cfg.mode() == FieldMode::Real {
                    Err(Error::RealModeUnsupported)
                } else {
                    Ok(Value::Number(HyperNumber::imaginary()))
                }
            }
            Expr::Var(n) => self.lookup(n),
            Expr::Neg(a) => Ok(Value::Number(self.number(a)?.neg())),
            Expr::Add(a, b) => Ok(Value::Number(self.number(a)?.add(&self.number(b)?, cfg))),
            Expr::Sub(a, b) => Ok(Value::Number(self.number(a)?.sub(&self.number(b)?, cfg))),
            Expr::Mul(a, b) => Ok(Value::Number(self.number(a)?.mul(&self.number(b)?, cfg))),
            Expr::Div(a, b) => Ok(Value::Number(self.number(a)?.div(&self.number(b)?, cfg)?)),
            Expr::Pow(a, n) => Ok(Value::Number(self.number(a)?.pow(*n, cfg)?)),
            Expr::Root(a, n) => Ok(Value::Number(self.number(a)?.nth_root(*n, cfg)?)),
            Expr::Shadow(a) => match self.eval_expr(a)? {
                Value::Number(n) => {
                    let sh = n.shadow()?;
                    Ok(Value::Number(HyperNumber::from_complex(sh)))
                }
                Value::Vector(v) => {
                    let sh = v.projective_shadow()?;
                    let entries: Vec<HyperNumber> =
                        sh.into_iter().map(HyperNumber::from_complex).collect();
                    Ok(Value::Vector(HyperVector::new(entries, v.role())))
                }
                _ => Err(Error::EvaluationError),
            },
            Expr::Classify(a) => match self.eval_expr(a)? {
                Value::Number(n) => Ok(Value::Class {
                    label: n.classify().as_str(),
                    det_leading: None,
                }),
                Value::Vector(v) => Ok(Value::Class {
                    label: v.classify().as_str(),
                    det_leading: None,
                }),
                Value::Matrix(m) => {
                    let label = m.classify(cfg)?.as_str();
                    Ok(Value::Class {
                        label,
                        det_leading: Some(self.det_leading(&m)?),
                    })
                }
                _ => Err(Error::EvaluationError),
            },
        }
    }

    fn det_leading(&self, m: &HyperMatrix) -> Result<HyperNumber, Error> {
        let rep = m.appreciable_representative()?;
        Ok(rep.determinant(self.cfg).leading_term())
    }

    fn number(&self, e: &Expr) -> Result<HyperNumber, Error> {
        match self.eval_expr(e)? {
            Value::Number(n) => Ok(n),
            _ => Err(Error::EvaluationError),
        }
    }

    fn eval_arg(&self, a: &Arg, role: Role) -> Result<Value, Error> {
        match a {
            Arg::Scalar(e) => self.eval_expr(e),
            Arg::Vector(v) => {
                let entries: Vec<HyperNumber> = v
                    .iter()
                    .map(|e| self.number(e))
                    .collect::<Result<_, _>>()?;
                Ok(Value::Vector(HyperVector::new(entries, role)))
            }
        }
    }

    fn vector_arg(&self, a: &Arg) -> Result<HyperVector, Error> {
        match self.eval_arg(a, Role::Plain)? {
            Value::Vector(v) => Ok(v),
            _ => Err(Error::EvaluationError),
        }
    }

    fn matrix_arg(&self, a: &Arg) -> Result<HyperMatrix, Error> {
        match self.eval_arg(a, Role::Plain)? {
            Value::Matrix(m) => Ok(m),
            _ => Err(Error::EvaluationError),
        }
    }

    fn conic_arg(&self, a: &Arg) -> Result<ConicForm, Error> {
        match self.eval_arg(a, Role::Plain)? {
            Value::Conic(c) => Ok(c),
            _ => Err(Error::EvaluationError),
        }
    }

    fn eval_vector_rhs(
        &self,
        rhs: &VectorRhs,
        role: Role,
        record: &mut StatementRecord,
    ) -> Result<HyperVector, Error> {
        let cfg = self.cfg;
        match rhs {
            VectorRhs::Literal(entries) => {
                let es: Vec<HyperNumber> = entries
                    .iter()
                    .map(|e| self.number(e))
                    .collect::<Result<_, _>>()?;
                Ok(HyperVector::new(es, role))
            }
            VectorRhs::Join(a, b) => {
                let va = self.vector_arg(a)?;
                let vb = self.vector_arg(b)?;
                va.join(&vb, cfg)
            }
            VectorRhs::Meet(a, b) => {
                let va = self.vector_arg(a)?;
                let vb = self.vector_arg(b)?;
                va.meet(&vb, cfg)
            }
            VectorRhs::Apply(m, x) => {
                let mat = self.matrix_arg(m)?;
                let vx = self.vector_arg(x)?;
                if role == Role::Line {
                    if mat.classify(cfg)? == MatrixClass::AlmostSingular {
                        record.note =
                            Some("line transport through an almost singular matrix".to_string());
                    }
                    mat.apply_to_line(&vx, cfg)
                } else {
                    mat.apply_to_point(&vx, cfg)
                }
            }
        }
    }

    fn eval_matrix(&self, rows: &[[Expr; 3]; 3]) -> Result<HyperMatrix, Error> {
        let mut out: Vec<[HyperNumber; 3]> = Vec::with_capacity(3);
        for row in rows.iter() {
            out.push([
                self.number(&row[0])?,
                self.number(&row[1])?,
                self.number(&row[2])?,
            ]);
        }
        let rows: [[HyperNumber; 3]; 3] = match out.try_into() {
            Ok(r) => r,
            Err(_) => return Err(Error::DimensionMismatch),
        };
        Ok(HyperMatrix::new(rows))
    }

    fn eval_through(&self, args: &[Arg; 5]) -> Result<ConicForm, Error> {
        let mut pts: Vec<HyperVector> = Vec::with_capacity(5);
        for a in args.iter() {
            pts.push(self.vector_arg(a)?);
        }
        let pts: [HyperVector; 5] = match pts.try_into() {
            Ok(p) => p,
            Err(_) => return Err(Error::DimensionMismatch),
        };
        ConicForm::through_five(&pts, self.cfg)
    }

    fn eval_predicate(
        &self,
        predicate: &str,
        args: &[Arg],
    ) -> Result<(bool, Option<Witness>), Error> {
        let cfg = self.cfg;
        match predicate {
            "almost_incident" => {
                let x = self.vector_arg(&args[0])?;
                let y = self.vector_arg(&args[1])?;
                let verdict = almost_incident(&x, &y, cfg)?;
                let witness = x.scalar_product(&y, cfg).ok().map(|sp| Witness {
                    label: "scalar_product",
                    value: ReportValue::Number(sp),
                });
                Ok((verdict, witness))
            }
            "almost_parallel" => {
                let l = self.vector_arg(&args[0])?;
                let m = self.vector_arg(&args[1])?;
                let verdict = almost_parallel(&l, &m, cfg)?;
                let witness = l
                    .meet(&m, cfg)
                    .ok()
                    .and_then(|p| p.appreciable_representative().ok())
                    .map(|rep| Witness {
                        label: "intersection_last_coordinate",
                        value: ReportValue::Number(rep.entries()[2].clone()),
                    });
                Ok((verdict, witness))
            }
            "almost_collinear" => {
                let x = self.vector_arg(&args[0])?;
                let y = self.vector_arg(&args[1])?;
                let z = self.vector_arg(&args[2])?;
                let verdict = almost_collinear(&x, &y, &z, cfg)?;
                let witness = normalized_determinant(&x, &y, &z, cfg).ok().map(|nd| Witness {
                    label: "normalized_determinant",
                    value: ReportValue::Number(nd),
                });
                Ok((verdict, witness))
            }
            "almost_equivalent" => {
                let x = self.vector_arg(&args[0])?;
                let y = self.vector_arg(&args[1])?;
                let verdict = x.almost_equivalent(&y, cfg)?;
                let witness = x.cross_product(&y, cfg).ok().map(|c| Witness {
                    label: "cross_product",
                    value: ReportValue::Vector(c),
                });
                Ok((verdict, witness))
            }
            "almost_far" => {
                let x = self.vector_arg(&args[0])?;
                let verdict = x.is_almost_far_point()?;
                let witness = x.appreciable_representative().ok().map(|rep| Witness {
                    label: "last_coordinate",
                    value: ReportValue::Number(rep.entries()[2].clone()),
                });
                Ok((verdict, witness))
            }
            "almost_cocircular" => {
                let a = self.vector_arg(&args[0])?;
                let b = self.vector_arg(&args[1])?;
                let c = self.vector_arg(&args[2])?;
                let d = self.vector_arg(&args[3])?;
                let verdict = is_almost_cocircular(&a, &b, &c, &d, cfg)?;
                let witness = cocircularity_residual(&a, &b, &c, &d, cfg)
                    .ok()
                    .map(|r| Witness {
                        label: "residual",
                        value: ReportValue::Number(r),
                    });
                Ok((verdict, witness))
            }
            "almost_singular" | "non_singular" => {
                let m = self.matrix_arg(&args[0])?;
                let class = m.classify(cfg)?;
                let verdict = if predicate == "non_singular" {
                    class == MatrixClass::NonSingular
                } else {
                    class != MatrixClass::NonSingular
                };
                let witness = self.det_leading(&m).ok().map(|d| Witness {
                    label: "determinant_leading_term",
                    value: ReportValue::Number(d),
                });
                Ok((verdict, witness))
            }
            "almost_affine" => {
                let m = self.matrix_arg(&args[0])?;
                Ok((m.is_almost_affine(cfg)?, None))
            }
            "conic_contains" => {
                let c = self.conic_arg(&args[0])?;
                let x = self.vector_arg(&args[1])?;
                let verdict = c.almost_contains(&x, cfg)?;
                let witness = c.value_at(&x, cfg).ok().map(|v| Witness {
                    label: "conic_value",
                    value: ReportValue::Number(v),
                });
                Ok((verdict, witness))
            }
            "in_eps_kernel" => {
                let m = self.matrix_arg(&args[0])?;
                let x = self.vector_arg(&args[1])?;
                let verdict = m.eps_kernel_member(&x, cfg)?;
                let witness = m.apply_to_point(&x, cfg).ok().map(|img| Witness {
                    label: "image",
                    value: ReportValue::Vector(img.with_role(Role::Plain)),
                });
                Ok((verdict, witness))
            }
            _ => Err(Error::EvaluationError),
        }
    }
}

fn poisoned_refs(kind: &StmtKind, env: &HashMap<String, Slot>) -> Vec<String> {
    let mut refs = Vec::new();
    stmt_refs(kind, &mut refs);
    refs.retain(|n| matches!(env.get(n), Some(Slot::Poisoned)));
    refs
}

fn stmt_refs(kind: &StmtKind, out: &mut Vec<String>) {
    match kind {
        StmtKind::Let { value, .. } => expr_refs(value, out),
        StmtKind::Point { rhs, .. } | StmtKind::Line { rhs, .. } => match rhs {
            VectorRhs::Literal(v) => {
                for e in v.iter() {
                    expr_refs(e, out);
                }
            }
            VectorRhs::Join(a, b) | VectorRhs::Meet(a, b) | VectorRhs::Apply(a, b) => {
                arg_refs(a, out);
                arg_refs(b, out);
            }
        },
        StmtKind::Matrix { rows, .. } => {
            for row in rows.iter() {
                for e in row.iter() {
                    expr_refs(e, out);
                }
            }
        }
        StmtKind::Conic { rhs, .. } => match rhs {
            ConicRhs::Literal(rows) => {
                for row in rows.iter() {
                    for e in row.iter() {
                        expr_refs(e, out);
                    }
                }
            }
            ConicRhs::Through(args) => {
                for a in args.iter() {
                    arg_refs(a, out);
                }
            }
        },
        StmtKind::Assert { args, .. } => {
            for a in args {
                arg_refs(a, out);
            }
        }
        StmtKind::Print { target } => arg_refs(target, out),
    }
}

fn arg_refs(a: &Arg, out: &mut Vec<String>) {
    match a {
        Arg::Scalar(e) => expr_refs(e, out),
        Arg::Vector(v) => {
            for e in v.iter() {
                expr_refs(e, out);
            }
        }
    }
}

fn expr_refs(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Number(_) | Expr::Eps | Expr::Imag => {}
        Expr::Var(n) => out.push(n.clone()),
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Root(a, _) | Expr::Shadow(a) | Expr::Classify(a) => {
            expr_refs(a, out)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            expr_refs(a, out);
            expr_refs(b, out);
        }
    }
}

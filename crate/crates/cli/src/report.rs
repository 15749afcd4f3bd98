use std::fmt::Write as _;
use std::sync::Arc;

use hnash::groebner::GroebnerError;
use hnash::hilbert::HilbertError;
use hnash::{HjacError, LimitError, MultiIndex, ParseError, PolyError, Polynomial, Rational, Ring};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    InputError,
    PreconditionViolation,
    ResourceBudgetExceeded,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::InputError => "input-error",
            Status::PreconditionViolation => "precondition-violation",
            Status::ResourceBudgetExceeded => "resource-budget-exceeded",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 2,
            Status::PreconditionViolation => 3,
            Status::ResourceBudgetExceeded => 4,
        }
    }
}

/// A classified error from one of the core modules.
#[derive(Debug, Clone)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            status: Status::InputError,
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Failure {
            status: Status::PreconditionViolation,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<HjacError> for Failure {
    fn from(e: HjacError) -> Self {
        match e {
            HjacError::ZeroPolynomial | HjacError::ZeroOrder | HjacError::Poly(_) => {
                Failure::input(e.to_string())
            }
            _ => Failure::precondition(e.to_string()),
        }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExceeded(_) => Failure {
                status: Status::ResourceBudgetExceeded,
                message: e.to_string(),
            },
            GroebnerError::Poly(p) => p.into(),
        }
    }
}

impl From<LimitError> for Failure {
    fn from(e: LimitError) -> Self {
        match e {
            LimitError::Hjac(h) => h.into(),
            LimitError::Groebner(g) => g.into(),
            LimitError::Poly(p) => p.into(),
            other => Failure::precondition(other.to_string()),
        }
    }
}

impl From<HilbertError> for Failure {
    fn from(e: HilbertError) -> Self {
        match e {
            HilbertError::NotThroughOrigin | HilbertError::NotOnHypersurface(_) => {
                Failure::precondition(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

/// Outcome of one command: a structured payload and its text rendering.
pub struct CommandResult {
    pub command: &'static str,
    pub status: Status,
    pub payload: Value,
    pub text: String,
}

impl CommandResult {
    pub fn ok(command: &'static str, payload: Value, text: String) -> Self {
        CommandResult {
            command,
            status: Status::Ok,
            payload,
            text,
        }
    }

    /// A failed command; `partial` carries whatever was computed before the
    /// failure.
    pub fn failed(
        command: &'static str,
        failure: Failure,
        partial: Option<(Value, String)>,
    ) -> Self {
        let (mut payload, text) = partial.unwrap_or((json!({}), String::new()));
        payload["error"] = json!(failure.message);
        CommandResult {
            command,
            status: failure.status,
            payload,
            text,
        }
    }

    pub fn error(&self) -> Option<&str> {
        self.payload.get("error").and_then(Value::as_str)
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "status": self.status.name(),
            "payload": self.payload,
        });
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    }
}

pub fn monomial_label(ring: &Arc<Ring>, exp: &MultiIndex) -> String {
    Polynomial::monomial(ring, exp.clone(), Rational::from_integer(1.into())).to_string()
}

pub fn poly_strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

pub fn vector_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

pub fn vector_text(v: &[Rational]) -> String {
    format!("({})", vector_strings(v).join(", "))
}

/// Left-aligned table with a header row.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = (0..ncols)
            .map(|i| format!("{:<width$}", row[i], width = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Certified, true, or a match.
    Positive,
    Negative,
    /// Two independent routes gave different answers.
    Disagreement,
    Error,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Positive => 0,
            Status::Negative => 1,
            Status::Error => 2,
            Status::Disagreement => 3,
        }
    }
}

/// What a command hands back before it is wrapped in a report.
pub struct Outcome {
    pub status: Status,
    pub result: Value,
    pub capacity: Value,
    /// Human-readable lines for `--format table`.
    pub table: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub parameters: Value,
    pub status: Status,
    pub exit_code: u8,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub capacity: Value,
    pub wall_time_ms: f64,
    #[serde(skip)]
    table: Vec<String>,
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    use wreathkit::Error as E;
    match e.downcast_ref::<E>() {
        Some(E::Precondition(_)) => "precondition",
        Some(E::Capacity { .. }) => "capacity",
        Some(E::Domain(_)) => "domain",
        Some(E::Parse(_)) => "parse",
        Some(E::MalformedPresentation(_)) => "malformed_presentation",
        Some(E::MalformedTable(_) | E::NotAssociative { .. } | E::NotIdentity { .. }) => "invalid_monoid",
        Some(E::InvalidAction { .. }) => "invalid_action",
        Some(E::DegreeMismatch { .. } | E::InvalidArgument(_)) => "argument",
        None if e.downcast_ref::<std::io::Error>().is_some() => "io",
        None => "other",
    }
}

impl RunReport {
    pub fn new(command: &'static str, parameters: Value, outcome: anyhow::Result<Outcome>, wall: Duration) -> Self {
        let wall_time_ms = (wall.as_secs_f64() * 1e6).round() / 1e3;
        match outcome {
            Ok(o) => RunReport {
                command,
                parameters,
                status: o.status,
                exit_code: o.status.exit_code(),
                result: o.result,
                error: None,
                capacity: o.capacity,
                wall_time_ms,
                table: o.table,
            },
            Err(e) => RunReport {
                command,
                parameters,
                status: Status::Error,
                exit_code: Status::Error.exit_code(),
                result: Value::Null,
                error: Some(ErrorInfo {
                    kind: error_kind(&e),
                    message: format!("{e:#}"),
                }),
                capacity: Value::Null,
                wall_time_ms,
                table: Vec::new(),
            },
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => {
                let mut s = String::new();
                let _ = writeln!(s, "command: {}", self.command);
                for line in &self.table {
                    let _ = writeln!(s, "{line}");
                }
                if let Some(e) = &self.error {
                    let _ = writeln!(s, "error ({}): {}", e.kind, e.message);
                }
                let status = serde_json::to_value(self.status).expect("status serializes");
                let _ = writeln!(
                    s,
                    "status: {} (exit {})",
                    status.as_str().unwrap_or_default(),
                    self.exit_code
                );
                let _ = writeln!(s, "wall time: {:.3} ms", self.wall_time_ms);
                s
            }
        }
    }
}

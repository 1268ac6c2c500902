pub mod classify;
pub mod hopf;
pub mod lambda;
pub mod matrix;
pub mod qnum;
pub mod sweep;
pub mod verify;

use serde::Serialize;

use gdo_core::VerificationReport;

use crate::config::{Mode, OutputFormat};
use crate::error::CliError;
use crate::json::{fmt_f64, to_csv};

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Default)]
pub struct Globals {
    pub mode: Mode,
    pub tol: Option<f64>,
    pub output: OutputFormat,
    pub out_dir: Option<std::path::PathBuf>,
}

/// What a subcommand produced: the text for stdout, extra files for the
/// output directory, and the ids of failed checks.
#[derive(Clone, Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub files: Vec<(String, String)>,
    pub failures: Vec<String>,
}

impl Output {
    pub fn text(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }
}

/// Kebab-case name of a unit enum value (or the tag of a tagged one).
pub(crate) fn tag<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(serde_json::Value::Object(map)) => match map.get("kind") {
            Some(serde_json::Value::String(kind)) => {
                match map.get("value").and_then(|v| v.as_f64()) {
                    Some(x) => format!("{kind}:{}", fmt_f64(x)),
                    None => kind.clone(),
                }
            }
            _ => String::new(),
        },
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

pub(crate) fn failures(reports: &[VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.relation_id.clone())
        .collect()
}

pub(crate) fn reports_csv(reports: &[VerificationReport]) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.relation_id.clone(),
                fmt_f64(r.max_residual),
                r.rows_checked.start.to_string(),
                r.rows_checked.end.to_string(),
                fmt_f64(r.tolerance),
                r.pass.to_string(),
            ]
        })
        .collect();
    to_csv(
        &[
            "relation_id",
            "max_residual",
            "rows_start",
            "rows_end",
            "tolerance",
            "pass",
        ],
        &rows,
    )
}

/// A pass/fail fact recorded as a report with residual 0 or 1.
pub(crate) fn boolean_report(
    id: &str,
    ok: bool,
    rows: std::ops::Range<usize>,
) -> VerificationReport {
    VerificationReport::new(id, if ok { 0.0 } else { 1.0 }, rows, 0.5)
}

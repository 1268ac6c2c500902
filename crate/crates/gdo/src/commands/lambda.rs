use clap::Args;
use serde::{Deserialize, Serialize};

use gdo_core::repcls::{lambda_at, lambda_at_exact, lambda_by_recurrence};

use super::{Globals, Output};
use crate::config::{
    exact_spec, float_spec, parse_index_range, parse_scalar, Mode, OutputFormat, ParamArgs,
    ParamsOut, SeedArgs,
};
use crate::error::CliError;
use crate::json::{fmt_f64, to_csv, to_json};

#[derive(Args, Clone, Debug)]
pub struct LambdaArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Index or inclusive range relative to the seed.
    #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
    pub n: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaRow {
    pub n: i64,
    /// Eigenvalue of `N`, `ν₀ + n`.
    pub nu: f64,
    /// `λ_n` from the closed form.
    pub lambda: f64,
    /// `λ_n` by stepping the recurrence from the seed.
    pub lambda_recurrence: f64,
    /// Eigenvalue of `aa⁺` on the same vector, `λ_{n+1}`.
    pub mu: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub nu0: f64,
    pub lambda0: f64,
    pub rows: Vec<LambdaRow>,
}

pub fn run(args: &LambdaArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let nu0 = parse_scalar("nu0", &args.seed.nu0)?;
    let lambda0 = parse_scalar("lambda0", &args.seed.lambda0)?;
    let (lo, hi) = parse_index_range(&args.n)?;
    let spec = float_spec(&r, &nu0, &lambda0)?;
    let exact = match g.mode {
        Mode::Exact => Some(exact_spec(&r, &nu0, &lambda0)?),
        Mode::Float => None,
    };
    let rows = (lo..=hi)
        .map(|n| LambdaRow {
            n,
            nu: spec.nu0 + n as f64,
            lambda: lambda_at(&spec, n),
            lambda_recurrence: lambda_by_recurrence(&spec, n),
            mu: lambda_at(&spec, n + 1),
            exact: exact.as_ref().and_then(|e| {
                lambda_at_exact(&e.exponents, e.nu0, &e.lambda0, n)
                    .at_rational(&e.q)
                    .ok()
                    .and_then(|v| v.as_rational())
                    .map(|v| v.to_string())
            }),
        })
        .collect();
    let doc = LambdaDoc {
        command: "lambda".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
        nu0: spec.nu0,
        lambda0: spec.lambda0,
        rows,
    };
    let stdout = match g.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = doc
                .rows
                .iter()
                .map(|row| {
                    vec![
                        row.n.to_string(),
                        fmt_f64(row.nu),
                        fmt_f64(row.lambda),
                        fmt_f64(row.lambda_recurrence),
                        fmt_f64(row.mu),
                        row.exact.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            to_csv(
                &["n", "nu", "lambda", "lambda_recurrence", "mu", "exact"],
                &rows,
            )?
        }
    };
    Ok(Output::text(stdout))
}

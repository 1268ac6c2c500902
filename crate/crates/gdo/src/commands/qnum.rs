use clap::Args;
use serde::{Deserialize, Serialize};

use gdo_core::qnum::{f_number, f_number_exact, recurrence_defect, recurrence_defect_exact};

use super::{Globals, Output};
use crate::config::{parse_index_range, Mode, OutputFormat, ParamArgs, ParamsOut};
use crate::error::CliError;
use crate::json::{fmt_f64, to_csv, to_json};

#[derive(Args, Clone, Debug)]
pub struct QnumArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Index or inclusive range, e.g. `0..4` or `-3`.
    #[arg(long, default_value = "0..10", allow_hyphen_values = true)]
    pub n: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QnumRow {
    pub n: i64,
    pub value: f64,
    /// `|F(n+1) − q^γF(n) − q^{αn+β}|` relative to the largest term; exactly
    /// 0 in exact mode when the identity holds symbolically.
    pub recurrence_residual: f64,
    /// `F(n)` as a Laurent polynomial in `q` (exact mode).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    /// `F(n)` at the given rational `q`, when that value is rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QnumDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub rows: Vec<QnumRow>,
}

pub fn run(args: &QnumArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let (lo, hi) = parse_index_range(&args.n)?;
    let p = r.float()?;
    let exact = match g.mode {
        Mode::Exact => Some(r.exact()?),
        Mode::Float => None,
    };
    let rows = (lo..=hi)
        .map(|n| match &exact {
            None => QnumRow {
                n,
                value: f_number(n, &p),
                recurrence_residual: recurrence_defect(n, &p),
                expression: None,
                exact: None,
            },
            Some((e, q)) => {
                let expr = f_number_exact(n, e);
                let at_q = expr.at_rational(q).ok().and_then(|f| f.as_rational());
                let value = at_q
                    .as_ref()
                    .map(|v| v.to_complex().re)
                    .unwrap_or_else(|| expr.eval_real(p.q));
                let defect = recurrence_defect_exact(n, e);
                QnumRow {
                    n,
                    value,
                    recurrence_residual: if defect.is_zero() {
                        0.0
                    } else {
                        defect.eval_real(p.q).abs()
                    },
                    expression: Some(expr.to_string()),
                    exact: at_q.map(|v| v.to_string()),
                }
            }
        })
        .collect::<Vec<_>>();
    let doc = QnumDoc {
        command: "qnum".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
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
                        fmt_f64(row.value),
                        fmt_f64(row.recurrence_residual),
                        row.exact.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            to_csv(&["n", "value", "recurrence_residual", "exact"], &rows)?
        }
    };
    Ok(Output::text(stdout))
}

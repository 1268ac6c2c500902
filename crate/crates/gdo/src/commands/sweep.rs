use std::collections::BTreeMap;

use clap::Args;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use gdo_core::repcls::{RepDescriptor, DEFAULT_TOL};

use super::classify::{descriptor, descriptor_cells, descriptor_header};
use super::{Globals, Output};
use crate::config::{check_tol, parse_list, Mode, OutputFormat, ParamArgs, Resolved, Scalar};
use crate::error::CliError;
use crate::json::{fmt_f64, to_csv, to_json};

/// Upper bound on the number of grid points in one sweep.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Args, Clone, Debug)]
pub struct SweepArgs {
    /// Base parameters; any axis without a list uses these.
    #[command(flatten)]
    pub params: ParamArgs,
    /// Values of q: `a,b,c` or `start:stop:count`.
    #[arg(long, allow_hyphen_values = true)]
    pub q_list: Option<String>,
    /// Values of α, same syntax; the other lists follow suit.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_list: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta_list: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_list: Option<String>,
    /// Seed N-eigenvalues.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub nu0_list: String,
    /// Seed a⁺a-eigenvalues.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda0_list: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub index: usize,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub nu0: f64,
    pub lambda0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<RepDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub command: String,
    pub mode: Mode,
    pub points: Vec<SweepPoint>,
    /// Number of points per family; failed points are counted under `error`.
    pub histogram: BTreeMap<String, usize>,
}

fn axis(name: &str, list: &Option<String>, base: Option<&Scalar>) -> Result<Vec<Scalar>, CliError> {
    match (list, base) {
        (Some(text), _) => parse_list(name, text),
        (None, Some(s)) => Ok(vec![s.clone()]),
        (None, None) => Err(CliError::parse(format!(
            "missing --{name}-list (or a base value)"
        ))),
    }
}

/// Base values that exist; a sweep may leave some of them to the lists.
fn partial_base(args: &ParamArgs) -> Result<[Option<Scalar>; 4], CliError> {
    let preset = args.preset()?;
    let exps = preset.map(|p| p.exponents());
    let one = |name: &str,
               text: &Option<String>,
               d: Option<gdo_core::Rational>|
     -> Result<Option<Scalar>, CliError> {
        match (text, d) {
            (Some(t), _) => crate::config::parse_scalar(name, t).map(Some),
            (None, Some(r)) => Ok(Some(Scalar::from_ratio(r))),
            (None, None) => Ok(None),
        }
    };
    Ok([
        one("q", &args.q, None)?,
        one("alpha", &args.alpha, exps.map(|e| e.alpha))?,
        one("beta", &args.beta, exps.map(|e| e.beta))?,
        one("gamma", &args.gamma, exps.map(|e| e.gamma))?,
    ])
}

pub fn run(args: &SweepArgs, g: &Globals) -> Result<Output, CliError> {
    let tol = check_tol(g.tol, DEFAULT_TOL)?;
    let [bq, ba, bb, bg] = partial_base(&args.params)?;
    let axes = [
        axis("q", &args.q_list, bq.as_ref())?,
        axis("alpha", &args.alpha_list, ba.as_ref())?,
        axis("beta", &args.beta_list, bb.as_ref())?,
        axis("gamma", &args.gamma_list, bg.as_ref())?,
        parse_list("nu0", &args.nu0_list)?,
        parse_list("lambda0", &args.lambda0_list)?,
    ];
    let total = axes
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
        .filter(|n| *n <= MAX_POINTS);
    let total =
        total.ok_or_else(|| CliError::parse(format!("sweep grid exceeds {MAX_POINTS} points")))?;
    if g.mode == Mode::Exact {
        for (name, values) in ["q", "alpha", "beta", "gamma", "nu0", "lambda0"]
            .iter()
            .zip(&axes)
        {
            for v in values {
                v.require_exact(name)?;
            }
        }
    }

    // Row-major over (q, α, β, γ, ν₀, λ₀); the last axis varies fastest.
    let coords = |mut index: usize| {
        let mut c = [0usize; 6];
        for (slot, a) in c.iter_mut().zip(&axes).rev() {
            *slot = index % a.len();
            index /= a.len();
        }
        c
    };
    let points: Vec<SweepPoint> = (0..total)
        .into_par_iter()
        .map(|index| {
            let c = coords(index);
            let pick = |i: usize| axes[i][c[i]].clone();
            let r = Resolved {
                preset: None,
                q: pick(0),
                alpha: pick(1),
                beta: pick(2),
                gamma: pick(3),
            };
            let (nu0, lambda0) = (pick(4), pick(5));
            let outcome = descriptor(&r, &nu0, &lambda0, g.mode, tol);
            SweepPoint {
                index,
                q: r.q.float,
                alpha: r.alpha.float,
                beta: r.beta.float,
                gamma: r.gamma.float,
                nu0: nu0.float,
                lambda0: lambda0.float,
                error: outcome.as_ref().err().map(|e| e.to_string()),
                descriptor: outcome.ok(),
            }
        })
        .collect();

    let mut histogram = BTreeMap::new();
    for p in &points {
        let key = p
            .descriptor
            .map(|d| d.family.name().to_string())
            .unwrap_or_else(|| "error".into());
        *histogram.entry(key).or_insert(0) += 1;
    }
    let doc = SweepDoc {
        command: "sweep".into(),
        mode: g.mode,
        points,
        histogram,
    };
    let stdout = match g.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let mut header = vec!["index", "q", "alpha", "beta", "gamma", "nu0", "lambda0"];
            header.extend(descriptor_header());
            header.push("error");
            let rows: Vec<Vec<String>> = doc
                .points
                .iter()
                .map(|p| {
                    let mut row = vec![p.index.to_string()];
                    row.extend([p.q, p.alpha, p.beta, p.gamma, p.nu0, p.lambda0].map(fmt_f64));
                    match &p.descriptor {
                        Some(d) => row.extend(descriptor_cells(d)),
                        None => row.extend(std::iter::repeat_n(
                            String::new(),
                            descriptor_header().len(),
                        )),
                    }
                    row.push(p.error.clone().unwrap_or_default());
                    row
                })
                .collect();
            to_csv(&header, &rows)?
        }
    };
    Ok(Output::text(stdout))
}

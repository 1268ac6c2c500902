use clap::Args;
use serde::{Deserialize, Serialize};

use gdo_core::repcls::{classify, classify_exact, threshold, RepDescriptor, DEFAULT_TOL};

use super::{tag, Globals, Output};
use crate::config::{
    check_tol, exact_spec, float_spec, parse_scalar, Mode, OutputFormat, ParamArgs, ParamsOut,
    Resolved, Scalar, SeedArgs,
};
use crate::error::CliError;
use crate::json::{fmt_f64, to_csv, to_json};

#[derive(Args, Clone, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub nu0: f64,
    pub lambda0: f64,
    /// `q^{αν₀+β}/(q^α − q^γ)` when it separates the subcases.
    pub threshold: Option<f64>,
    pub descriptor: RepDescriptor,
}

/// Classifies one seed in the requested mode.
pub fn descriptor(
    r: &Resolved,
    nu0: &Scalar,
    lambda0: &Scalar,
    mode: Mode,
    tol: f64,
) -> Result<RepDescriptor, CliError> {
    Ok(match mode {
        Mode::Float => classify(&float_spec(r, nu0, lambda0)?, tol)?,
        Mode::Exact => classify_exact(&exact_spec(r, nu0, lambda0)?)?,
    })
}

pub fn descriptor_header() -> [&'static str; 8] {
    [
        "domain_case",
        "subcase",
        "family",
        "k_sign",
        "asym_plus",
        "asym_minus",
        "operator_class",
        "fock_additional_relation_holds",
    ]
}

pub fn descriptor_cells(d: &RepDescriptor) -> Vec<String> {
    vec![
        d.domain_case.to_string(),
        tag(&d.subcase),
        d.family.name().to_string(),
        tag(&d.k_sign),
        tag(&d.asym_plus),
        tag(&d.asym_minus),
        tag(&d.operator_class),
        d.fock_additional_relation_holds.to_string(),
    ]
}

pub fn run(args: &ClassifyArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let nu0 = parse_scalar("nu0", &args.seed.nu0)?;
    let lambda0 = parse_scalar("lambda0", &args.seed.lambda0)?;
    let tol = check_tol(g.tol, DEFAULT_TOL)?;
    let d = descriptor(&r, &nu0, &lambda0, g.mode, tol)?;
    let spec = float_spec(&r, &nu0, &lambda0)?;
    let doc = ClassifyDoc {
        command: "classify".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
        nu0: nu0.float,
        lambda0: lambda0.float,
        threshold: threshold(&spec),
        descriptor: d,
    };
    let stdout = match g.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let mut header = vec!["nu0", "lambda0", "threshold"];
            header.extend(descriptor_header());
            let mut row = vec![
                fmt_f64(doc.nu0),
                fmt_f64(doc.lambda0),
                doc.threshold.map(fmt_f64).unwrap_or_default(),
            ];
            row.extend(descriptor_cells(&d));
            to_csv(&header, &[row])?
        }
    };
    Ok(Output::text(stdout))
}

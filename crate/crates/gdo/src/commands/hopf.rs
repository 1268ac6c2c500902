use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use gdo_core::hopf::{
    antipode_antihom_check, branch_identity_defect, commutator_rhs_check, counit_identity_defect,
    restricted_rep, solve_constants, verify_axioms_on, verify_homomorphism_on, HopfConstants,
    Variant,
};
use gdo_core::VerificationReport;

use super::matrix::RELATION_TOL;
use super::{boolean_report, failures, reports_csv, Globals, Output};
use crate::config::{check_tol, Mode, OutputFormat, ParamArgs, ParamsOut};
use crate::error::CliError;
use crate::json::to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum VariantArg {
    /// Relations with right-hand sides `q^{αN+β}` and `q^{−αN−β}`.
    #[default]
    ExpExp,
    /// Relations with right-hand sides `q^{−γN+β}` and `q^{γN+β}`.
    Commutator,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::ExpExp => Variant::ExpExp,
            VariantArg::Commutator => Variant::Commutator,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct HopfArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::ExpExp)]
    pub variant: VariantArg,
    /// Branch of the logarithm fixing `γ₁`.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub k: i64,
    /// Size of each tensor factor's truncation.
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub variant: Variant,
    pub k: i64,
    pub dim: usize,
    pub constants: HopfConstants,
    pub reports: Vec<VerificationReport>,
}

pub fn run(args: &HopfArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let tol = check_tol(g.tol, RELATION_TOL)?;
    let p = r.float()?;
    let variant = Variant::from(args.variant);
    let k = solve_constants(&p, args.k, variant)?;
    let rep = restricted_rep(&p, variant, args.dim)?;

    let mut reports = verify_axioms_on(&k, &rep, tol)?;
    reports.push(verify_homomorphism_on(&k, &rep, tol)?);
    reports.push(antipode_antihom_check(&k, &rep, tol));
    reports.push(commutator_rhs_check(&rep, &p, variant, tol));
    if g.mode == Mode::Exact {
        let (e, _) = r.exact()?;
        let zero = |defect: Option<gdo_core::QExpr>| defect.is_some_and(|d| d.is_zero());
        reports.push(boolean_report(
            "branch-identity",
            zero(branch_identity_defect(&e, variant, args.k)),
            0..0,
        ));
        reports.push(boolean_report(
            "counit-identity",
            zero(counit_identity_defect(&e, variant, args.k)),
            0..0,
        ));
    }

    let doc = HopfDoc {
        command: "hopf".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
        variant,
        k: args.k,
        dim: args.dim,
        constants: k,
        reports,
    };
    let stdout = match g.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => reports_csv(&doc.reports)?,
    };
    let failed = failures(&doc.reports);
    Ok(Output {
        stdout,
        files: Vec::new(),
        failures: failed,
    })
}

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use gdo_core::repcls::{grows_both_ways, threshold, Family, RepSpec, DEFAULT_TOL};
use gdo_core::repmat::{
    build_family, spectrum_check, verify_relations, LadderExport, LadderMatrices,
};
use gdo_core::{AlgebraParams, VerificationReport};

use super::classify::descriptor;
use super::{failures, reports_csv, Globals, Output};
use crate::config::{
    check_tol, parse_scalar, Mode, OutputFormat, ParamArgs, ParamsOut, Resolved, Scalar, SeedArgs,
};
use crate::error::CliError;
use crate::json::{matrix_csv, to_json};

/// Relation residuals at or below this count as satisfied.
pub const RELATION_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum FamilyChoice {
    /// Use the family the classifier assigns to the seed.
    #[default]
    Auto,
    /// Lowest-weight family with vacuum at `--nu0`.
    QuasiFock,
    /// Two-sided chain through the seed `(--nu0, --lambda0)`.
    TwoParam,
    /// Strange family through `--nu0`.
    Strange,
}

#[derive(Args, Clone, Debug)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Truncation size; two-sided families use the window `[−dim/2, dim/2]`.
    #[arg(long, default_value_t = 16)]
    pub dim: usize,
    #[arg(long, value_enum, default_value_t = FamilyChoice::Auto)]
    pub family: FamilyChoice,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub family: Family,
    pub dim: usize,
    pub index_base: i64,
    pub reports: Vec<VerificationReport>,
    /// Files written to the output directory.
    pub files: Vec<String>,
    /// The matrices themselves when no output directory is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<LadderExport>,
}

/// A built truncation together with the seed its spectrum is checked against.
pub struct Built {
    pub family: Family,
    pub rep: LadderMatrices,
    pub spec: RepSpec,
}

/// The seed whose closed-form chain a family realizes: the vacuum for
/// quasi-Fock, the stored seed for two-parameter, the threshold for strange.
pub fn family_chain(family: &Family, p: &AlgebraParams) -> Result<RepSpec, CliError> {
    Ok(match *family {
        Family::QuasiFock { nu0_prime } => RepSpec::new(*p, nu0_prime, 0.0)?,
        Family::TwoParamSingular {
            nu0_star,
            lambda0_star,
            ..
        } => RepSpec::new(*p, nu0_star, lambda0_star)?,
        Family::Strange { nu0 } => {
            let seed = RepSpec::new(*p, nu0, 0.0)?;
            let b = threshold(&seed).ok_or_else(|| {
                CliError::NegativeUnderRoot("no strange family: q^α ≤ q^γ".into())
            })?;
            RepSpec { lambda0: b, ..seed }
        }
    })
}

pub fn build(
    r: &Resolved,
    nu0: &Scalar,
    lambda0: &Scalar,
    choice: FamilyChoice,
    dim: usize,
    mode: Mode,
) -> Result<Built, CliError> {
    let p: AlgebraParams = r.float()?;
    if p.is_classical() {
        return Err(CliError::ClassicalPoint);
    }
    let family = match choice {
        FamilyChoice::Auto => descriptor(r, nu0, lambda0, mode, DEFAULT_TOL)?.family,
        FamilyChoice::QuasiFock => Family::QuasiFock {
            nu0_prime: nu0.float,
        },
        FamilyChoice::TwoParam => {
            RepSpec::new(p, nu0.float, lambda0.float)?;
            Family::TwoParamSingular {
                nu0_star: nu0.float,
                lambda0_star: lambda0.float,
                constrained: grows_both_ways(&p),
            }
        }
        FamilyChoice::Strange => Family::Strange { nu0: nu0.float },
    };
    let spec = family_chain(&family, &p)?;
    if dim == 0 {
        return Err(CliError::parse("--dim must be positive"));
    }
    let rep = build_family(&family, dim, &p)?;
    Ok(Built { family, rep, spec })
}

pub fn run(args: &MatrixArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let nu0 = parse_scalar("nu0", &args.seed.nu0)?;
    let lambda0 = parse_scalar("lambda0", &args.seed.lambda0)?;
    let tol = check_tol(g.tol, RELATION_TOL)?;
    let b = build(&r, &nu0, &lambda0, args.family, args.dim, g.mode)?;
    let p = r.float()?;
    let mut reports = verify_relations(&b.rep, &p, tol);
    reports.push(spectrum_check(&b.rep, &b.spec, tol));

    let export = LadderExport::from(&b.rep);
    let mut files = Vec::new();
    if g.out_dir.is_some() {
        match g.output {
            OutputFormat::Json => {
                files.push(("matrices.json".to_string(), to_json(&export)?));
                files.push(("reports.json".to_string(), to_json(&reports)?));
            }
            OutputFormat::Csv => {
                files.push(("n.csv".to_string(), matrix_csv(export.dim, &export.n)?));
                files.push(("a.csv".to_string(), matrix_csv(export.dim, &export.a)?));
                files.push((
                    "a_plus.csv".to_string(),
                    matrix_csv(export.dim, &export.a_plus)?,
                ));
                files.push(("reports.csv".to_string(), reports_csv(&reports)?));
            }
        }
    }
    let doc = MatrixDoc {
        command: "matrix".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
        family: b.family,
        dim: b.rep.dim,
        index_base: b.rep.index_base,
        reports: reports.clone(),
        files: files.iter().map(|(name, _)| name.clone()).collect(),
        matrices: g.out_dir.is_none().then_some(export),
    };
    let stdout = match g.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => reports_csv(&reports)?,
    };
    Ok(Output {
        stdout,
        files,
        failures: failures(&reports),
    })
}

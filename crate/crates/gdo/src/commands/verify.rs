use clap::Args;
use serde::{Deserialize, Serialize};

use gdo_core::algebra::{
    central_element_diagonal, double_relation_solve, double_relation_solve_exact,
    dress_from_undeformed, selector_diagonal, CentralSeries, Pairing, RelationTriple, SelectorSign,
};
use gdo_core::repcls::{Family, RepDescriptor, DEFAULT_TOL};
use gdo_core::repmat::{spectrum_check, verify_relations};
use gdo_core::{ExactParams, VerificationReport};

use super::classify::descriptor;
use super::matrix::{build, FamilyChoice, RELATION_TOL};
use super::{boolean_report, failures, reports_csv, Globals, Output};
use crate::config::{check_tol, parse_scalar, Mode, OutputFormat, ParamArgs, ParamsOut, SeedArgs};
use crate::error::CliError;
use crate::json::to_json;

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Truncation size of the matrices the checks run on.
    #[arg(long, default_value_t = 16)]
    pub dim: usize,
    /// Second relation `aa⁺ − q^γ̃ a⁺a = q^{α̃N+β̃}` as `α̃,β̃,γ̃`; defaults to
    /// the partner relation of the preset, if it has one.
    #[arg(long, allow_hyphen_values = true)]
    pub second: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralSummary {
    /// Diagonal of `(F(N) − a⁺a)·q^{−γN}` on the faithful rows.
    pub values: Vec<f64>,
    pub constant: bool,
    pub commutator_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleSummary {
    pub second: RelationTriple,
    pub pairing: Pairing,
    /// Whether the diagonal forms satisfy both relations identically in `N`
    /// (exact mode only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_identity: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub command: String,
    pub mode: Mode,
    pub params: ParamsOut,
    pub nu0: f64,
    pub lambda0: f64,
    pub dim: usize,
    pub descriptor: RepDescriptor,
    pub selector_sign: SelectorSign,
    pub central: CentralSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double: Option<DoubleSummary>,
    pub reports: Vec<VerificationReport>,
}

fn parse_triple(text: &str) -> Result<(f64, f64, f64, Option<ExactParams>), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [a, b, g] = parts.as_slice() else {
        return Err(CliError::parse(format!(
            "--second expects three comma-separated values, got {text:?}"
        )));
    };
    let (a, b, g) = (
        parse_scalar("second alpha", a)?,
        parse_scalar("second beta", b)?,
        parse_scalar("second gamma", g)?,
    );
    let exact = match (
        a.require_small("a"),
        b.require_small("b"),
        g.require_small("g"),
    ) {
        (Ok(a), Ok(b), Ok(g)) => Some(ExactParams::new(a, b, g)),
        _ => None,
    };
    Ok((a.float, b.float, g.float, exact))
}

pub fn run(args: &VerifyArgs, g: &Globals) -> Result<Output, CliError> {
    let r = args.params.resolve()?;
    let nu0 = parse_scalar("nu0", &args.seed.nu0)?;
    let lambda0 = parse_scalar("lambda0", &args.seed.lambda0)?;
    let tol = check_tol(g.tol, RELATION_TOL)?;
    let p = r.float()?;
    let d = descriptor(&r, &nu0, &lambda0, g.mode, DEFAULT_TOL)?;
    let b = build(&r, &nu0, &lambda0, FamilyChoice::Auto, args.dim, g.mode)?;
    let rep = &b.rep;

    let mut reports = verify_relations(rep, &p, tol);
    reports.push(spectrum_check(rep, &b.spec, tol));

    let selector = selector_diagonal(rep, &p);
    reports.push(boolean_report(
        "k-sign",
        selector.sign == SelectorSign::Definite(d.k_sign),
        selector.rows.clone(),
    ));

    let z = central_element_diagonal(rep, &p, &CentralSeries::balancing(&p));
    reports.push(boolean_report(
        "central-constant",
        z.constant,
        z.rows.clone(),
    ));
    reports.push(VerificationReport::new(
        "central-commutator",
        z.commutator_residual,
        z.rows.clone(),
        tol,
    ));

    if let Family::QuasiFock { nu0_prime } = b.family {
        if nu0_prime == 0.0 {
            // The q-Fock chain must coincide with the dressed undeformed oscillator.
            if let Ok(dressed) = dress_from_undeformed(rep.dim, &p) {
                let scale = rep.a.as_slice().iter().fold(1.0_f64, |m, x| m.max(x.abs()));
                reports.push(VerificationReport::new(
                    "dressing",
                    dressed.a.max_abs_diff(&rep.a) / scale,
                    0..rep.dim,
                    tol,
                ));
            }
        }
    }

    let second = match (&args.second, r.preset.and_then(|pr| pr.second_relation())) {
        (Some(text), _) => Some(parse_triple(text)?),
        (None, Some(e)) => {
            let t = RelationTriple::from(e);
            Some((t.alpha, t.beta, t.gamma, Some(e)))
        }
        (None, None) => None,
    };
    let double = match second {
        None => None,
        Some((alpha, beta, gamma, exact_second)) => {
            let triple = RelationTriple { alpha, beta, gamma };
            let sol = double_relation_solve(&p, triple)?;
            let n_values = rep.n_values();
            let (mut first, mut second) = (0.0_f64, 0.0_f64);
            for n in &n_values {
                let (x, y) = sol.residuals_at(*n);
                first = first.max(x);
                second = second.max(y);
            }
            reports.push(VerificationReport::new(
                "double-first",
                first,
                0..rep.dim,
                tol,
            ));
            reports.push(VerificationReport::new(
                "double-second",
                second,
                0..rep.dim,
                tol,
            ));
            let exact_identity = match (g.mode, exact_second) {
                (Mode::Exact, Some(e2)) => {
                    let (e1, _) = r.exact()?;
                    let holds = double_relation_solve_exact(&e1, &e2)?.holds();
                    reports.push(boolean_report("double-exact", holds, 0..0));
                    Some(holds)
                }
                _ => None,
            };
            Some(DoubleSummary {
                second: triple,
                pairing: sol.pairing,
                exact_identity,
            })
        }
    };

    let doc = VerifyDoc {
        command: "verify".into(),
        mode: g.mode,
        params: ParamsOut::new(&r, g.mode)?,
        nu0: nu0.float,
        lambda0: lambda0.float,
        dim: rep.dim,
        descriptor: d,
        selector_sign: selector.sign,
        central: CentralSummary {
            values: z.values[z.rows.clone()].to_vec(),
            constant: z.constant,
            commutator_residual: z.commutator_residual,
        },
        double,
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

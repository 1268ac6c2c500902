//! Command-line front end for `gdo-core`.
//!
//! The binary is a thin wrapper around [`run`], which turns parsed arguments
//! into an [`commands::Output`]; tests drive the same function directly.

pub mod commands;
pub mod config;
pub mod error;
pub mod json;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{Globals, Output};
use config::{Mode, OutputFormat};
pub use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "gdo",
    version,
    about = "Generalized deformed oscillator algebras: basic numbers, representations, Hopf structure"
)]
pub struct Cli {
    /// Arithmetic for parameters and identities. Exact mode needs every
    /// parameter as an integer or `p/q` literal.
    #[arg(long, value_enum, default_value_t = Mode::Float, global = true)]
    pub mode: Mode,
    /// Tolerance for the command's checks (positive).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    /// Also write the primary output and any extra files here.
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of the generalized basic number F(n).
    Qnum(commands::qnum::QnumArgs),
    /// Classify the representation through a seed (ν₀, λ₀).
    Classify(commands::classify::ClassifyArgs),
    /// Eigenvalues λ_n of a⁺a along the chain through a seed.
    Lambda(commands::lambda::LambdaArgs),
    /// Build truncated N, a, a⁺ and check the relations.
    Matrix(commands::matrix::MatrixArgs),
    /// Every algebra-level check for one seed.
    Verify(commands::verify::VerifyArgs),
    /// Hopf constants and axiom checks for the two-relation algebras.
    Hopf(commands::hopf::HopfArgs),
    /// Classify every point of a parameter grid.
    Sweep(commands::sweep::SweepArgs),
}

impl Cli {
    pub fn globals(&self) -> Globals {
        Globals {
            mode: self.mode,
            tol: self.tol,
            output: self.output,
            out_dir: self.out_dir.clone(),
        }
    }

    fn primary_file(&self) -> String {
        let name = match self.command {
            Command::Qnum(_) => "qnum",
            Command::Classify(_) => "classify",
            Command::Lambda(_) => "lambda",
            Command::Matrix(_) => "matrix",
            Command::Verify(_) => "verify",
            Command::Hopf(_) => "hopf",
            Command::Sweep(_) => "sweep",
        };
        let ext = match self.output {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        };
        format!("{name}.{ext}")
    }
}

/// Runs one command without touching stdout or the file system.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let g = cli.globals();
    match &cli.command {
        Command::Qnum(a) => commands::qnum::run(a, &g),
        Command::Classify(a) => commands::classify::run(a, &g),
        Command::Lambda(a) => commands::lambda::run(a, &g),
        Command::Matrix(a) => commands::matrix::run(a, &g),
        Command::Verify(a) => commands::verify::run(a, &g),
        Command::Hopf(a) => commands::hopf::run(a, &g),
        Command::Sweep(a) => commands::sweep::run(a, &g),
    }
}

/// Runs a command, prints its output, writes files and maps the result to
/// an exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let result = run(cli).and_then(|out| {
        if let Some(dir) = &cli.out_dir {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(cli.primary_file()), &out.stdout)?;
            for (name, body) in &out.files {
                std::fs::write(dir.join(name), body)?;
            }
        }
        print!("{}", out.stdout);
        if out.failures.is_empty() {
            Ok(())
        } else {
            Err(CliError::VerificationFailed(out.failures))
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gdo: {e}");
            e.exit_code()
        }
    }
}

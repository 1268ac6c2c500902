use std::fmt;

use gdo_core::algebra::DoubleRelationError;
use gdo_core::hopf::HopfError;
use gdo_core::repcls::ClassifyError;
use gdo_core::repmat::BuildError;
use gdo_core::ParamError;

/// Everything that ends a run with a nonzero exit status.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input. Exit 2.
    Parse(String),
    /// The requested operation is undefined at `q = 1`. Exit 3.
    ClassicalPoint,
    /// A matrix element would need the root of a negative number. Exit 4.
    NegativeUnderRoot(String),
    /// Parameters outside the domain of the Hopf construction. Exit 5.
    Degenerate(String),
    /// Everything was computed but at least one check failed. Exit 6.
    VerificationFailed(Vec<String>),
    Io(std::io::Error),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::ClassicalPoint => 3,
            CliError::NegativeUnderRoot(_) => 4,
            CliError::Degenerate(_) => 5,
            CliError::VerificationFailed(_) => 6,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "invalid input: {m}"),
            CliError::ClassicalPoint => write!(f, "undefined at the classical point q = 1"),
            CliError::NegativeUnderRoot(m) => write!(f, "not buildable: {m}"),
            CliError::Degenerate(m) => write!(f, "{m}"),
            CliError::VerificationFailed(ids) => {
                write!(f, "verification failed: {}", ids.join(", "))
            }
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        match e {
            ParamError::ClassicalPoint => CliError::ClassicalPoint,
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::ClassicalPoint => CliError::ClassicalPoint,
            ClassifyError::Param(p) => p.into(),
            ClassifyError::NegativeSeed(_) | ClassifyError::InvalidNu0(_) => {
                CliError::Parse(e.to_string())
            }
            ClassifyError::NoLowestWeight(_) | ClassifyError::Exact(_) => {
                CliError::Internal(e.to_string())
            }
        }
    }
}

impl From<BuildError> for CliError {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::NegativeUnderRoot { .. } => CliError::NegativeUnderRoot(e.to_string()),
            BuildError::EmptyTruncation => CliError::Parse(e.to_string()),
        }
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::DegenerateParameters(_) | HopfError::InconsistentRelations { .. } => {
                CliError::Degenerate(e.to_string())
            }
            HopfError::NegativeWeight { .. } => CliError::NegativeUnderRoot(e.to_string()),
            HopfError::TruncationTooSmall(_) => CliError::Parse(e.to_string()),
        }
    }
}

impl From<DoubleRelationError> for CliError {
    fn from(e: DoubleRelationError) -> Self {
        match e {
            DoubleRelationError::ClassicalPoint => CliError::ClassicalPoint,
            DoubleRelationError::DegenerateRelations => CliError::Degenerate(e.to_string()),
        }
    }
}

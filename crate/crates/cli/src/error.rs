use std::fmt;

use locinv::coeff::CoeffError;
use locinv::fibres::FibreError;
use locinv::invariants::InvariantError;
use locinv::mora::MoraError;
use locinv::poly::PolyError;

/// Exit status 1: the input was understood but the requested quantity does
/// not exist or could not be computed.
pub const EXIT_MATH: i32 = 1;
/// Exit status 2: malformed flags, expressions or files.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(_) => EXIT_MATH,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Math(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CoeffError> for CliError {
    fn from(e: CoeffError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MoraError> for CliError {
    fn from(e: MoraError) -> Self {
        CliError::Math(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::EmptyGeneratorList
            | InvariantError::TooManyGenerators(_)
            | InvariantError::RingMismatch => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<FibreError> for CliError {
    fn from(e: FibreError) -> Self {
        match e {
            FibreError::Mora(m) => m.into(),
            FibreError::Invariant(i) => i.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

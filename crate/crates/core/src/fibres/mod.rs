//! Families over ℤ and k[t]: specialization to fibres, completed fibre
//! dimensions, modular scans and semicontinuity checks.

mod family;
mod point;
mod scan;
mod specialize;

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::invariants::InvariantError;
use crate::mora::MoraError;
use crate::poly::PolyError;

pub use family::{BaseCoeff, BasePoly, BaseRing, FamilyKind, FamilySpec};
pub use point::FibrePoint;
pub use scan::{
    default_nearby, default_primes, fibre_invariant_scan, modular_scan, semicontinuity_check, Comparison, FibreReport,
    ModularReport, ScanOptions, SemicontinuityReport, Verdict,
};
pub use specialize::{completed_fibre_dimension, completed_fibre_dimension_with, specialize, FibreData, Specialized};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibreError {
    #[error("point {point} does not lie on base {base}")]
    IncompatiblePoint { point: String, base: String },
    #[error("this operation needs a family over {0}")]
    WrongBase(&'static str),
    #[error("this operation needs a {0} family")]
    WrongKind(&'static str),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("empty prime list")]
    EmptyPrimeList,
    #[error("entry {0} has a coefficient outside the base ring")]
    NotInBaseRing(usize),
    #[error("bad family shape: {0}")]
    Shape(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("invalid fibre point `{0}`")]
    BadPoint(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Mora(#[from] MoraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

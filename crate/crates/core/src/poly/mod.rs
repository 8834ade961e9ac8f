//! Sparse multivariate polynomials under local orderings.

mod matrix;
mod module;
mod monomial;
mod parse;
mod polynomial;

use thiserror::Error;

use crate::coeff::CoeffError;

pub use matrix::{determinant, exact_div, jacobian_matrix, minors, PolyMatrix};
pub use module::{FreeModuleVector, ModTerm, ModuleOrdering};
pub use monomial::{ExponentVector, LocalOrdering, OrderingKind};
pub use parse::parse_polynomial;
pub use polynomial::{poly_arith, PolyOp, PolyRing, Polynomial, Term, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("division by an expression containing ring variables at position {pos}")]
    DivisionNotAllowed { pos: usize },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("length mismatch")]
    LengthMismatch,
    #[error("minor size {size} exceeds a {rows}x{cols} matrix")]
    SizeTooLarge { size: usize, rows: usize, cols: usize },
    #[error("variable index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("unsupported variable count {0} (must be 1..=16)")]
    TooManyVariables(usize),
    #[error("invalid or duplicate variable name `{0}`")]
    InvalidVariableName(String),
    #[error("polynomial division is not exact")]
    NotExact,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

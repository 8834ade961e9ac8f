//! Exact coefficient fields.
//!
//! Every field element carries enough context (the modulus, for prime
//! fields) to be combined with other elements of the same field without a
//! separate ring object. The [`Field`] trait additionally exposes an
//! associated context type so that zero and one can be produced for an
//! empty polynomial.

mod prime_field;
mod primes;
mod ratfun;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use prime_field::{Fp, PrimeModulus, MAX_MODULUS};
pub use primes::{is_prime, next_prime, primes_from};
pub use ratfun::{RationalFunction, UniPoly};
pub use rational::{reduce_mod_p, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("prime {0} divides a denominator")]
    BadPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (must be below 2^61)")]
    ModulusOutOfRange(u64),
    #[error("unknown field descriptor `{0}`")]
    UnknownField(String),
}

/// The four coefficient fields supported by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Q,
    Fp(u64),
    Qt,
    Fpt(u64),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldDescriptor::Q | FieldDescriptor::Qt => 0,
            FieldDescriptor::Fp(p) | FieldDescriptor::Fpt(p) => p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDescriptor::Fp(_))
    }

    pub fn has_parameter(&self) -> bool {
        matches!(self, FieldDescriptor::Qt | FieldDescriptor::Fpt(_))
    }

    /// The rational function field k(t) over this field's prime field.
    pub fn function_field(&self) -> FieldDescriptor {
        match *self {
            FieldDescriptor::Q | FieldDescriptor::Qt => FieldDescriptor::Qt,
            FieldDescriptor::Fp(p) | FieldDescriptor::Fpt(p) => FieldDescriptor::Fpt(p),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Q => write!(f, "Q"),
            FieldDescriptor::Fp(p) => write!(f, "F:{p}"),
            FieldDescriptor::Qt => write!(f, "Qt"),
            FieldDescriptor::Fpt(p) => write!(f, "Ft:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let prime = |text: &str| -> Result<u64, CoeffError> {
            let p: u64 = text.trim().parse().map_err(|_| CoeffError::UnknownField(s.to_string()))?;
            PrimeModulus::new(p).map(|m| m.get())
        };
        match s {
            "Q" => Ok(FieldDescriptor::Q),
            "Qt" => Ok(FieldDescriptor::Qt),
            _ => {
                if let Some(rest) = s.strip_prefix("Ft:") {
                    Ok(FieldDescriptor::Fpt(prime(rest)?))
                } else if let Some(rest) = s.strip_prefix("F:") {
                    Ok(FieldDescriptor::Fp(prime(rest)?))
                } else {
                    Err(CoeffError::UnknownField(s.to_string()))
                }
            }
        }
    }
}

/// An exact field whose elements carry their own context.
///
/// Arithmetic through the operator traits panics when the operands come from
/// different fields (e.g. two prime fields with different moduli); use
/// [`field_arith`] for a checked variant.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to build constants: `()` for ℚ, the modulus for 𝔽_p.
    type Ctx: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_integer(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// Image of a rational number; fails with `BadPrime` when the
    /// denominator vanishes in the field.
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Result<Self, CoeffError>;
    /// The transcendental `t` of a function field, if any.
    fn parameter(ctx: &Self::Ctx) -> Option<Self>;
    fn descriptor(ctx: &Self::Ctx) -> FieldDescriptor;

    fn context(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Result<Self, CoeffError>;

    fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.clone() * other.inv()?)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.context());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_integer(ctx, &BigInt::from(n))
    }

    /// Printing hint: whether the element should be printed with a leading
    /// minus sign (its negation is then printed instead).
    fn is_negative(&self) -> bool {
        false
    }

    /// Printing hint: whether `Display` output can stand in front of `*`
    /// without parentheses.
    fn is_atomic(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary field arithmetic.
pub fn field_arith<F: Field>(a: &F, b: &F, op: FieldOp) -> Result<F, CoeffError> {
    if a.context() != b.context() {
        return Err(CoeffError::FieldMismatch);
    }
    Ok(match op {
        FieldOp::Add => a.clone() + b.clone(),
        FieldOp::Sub => a.clone() - b.clone(),
        FieldOp::Mul => a.clone() * b.clone(),
        FieldOp::Div => a.div(b)?,
    })
}

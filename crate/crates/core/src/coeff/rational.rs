use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CoeffError, Field, FieldDescriptor, Fp, PrimeModulus};

/// Rational numbers in lowest terms with positive denominator.
pub type Rational = BigRational;

impl Field for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }

    fn from_integer(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(_: &(), q: &BigRational) -> Result<Self, CoeffError> {
        Ok(q.clone())
    }

    fn parameter(_: &()) -> Option<Self> {
        None
    }

    fn descriptor(_: &()) -> FieldDescriptor {
        FieldDescriptor::Q
    }

    fn context(&self) {}

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inv(&self) -> Result<Self, CoeffError> {
        if Zero::is_zero(self) {
            Err(CoeffError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Image of `q` in 𝔽_p: numerator times the inverse of the denominator.
pub fn reduce_mod_p(q: &Rational, p: u64) -> Result<Fp, CoeffError> {
    let m = PrimeModulus::new(p)?;
    Fp::from_rational(&m, q)
}

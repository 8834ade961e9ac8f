use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{is_prime, CoeffError, Field, FieldDescriptor};

/// Exclusive upper bound on prime moduli, so that products fit in `u128`.
pub const MAX_MODULUS: u64 = 1 << 61;

/// A prime below 2^61, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        if p >= MAX_MODULUS {
            return Err(CoeffError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    fn reduce_big(self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.0));
        r.to_u64().expect("residue fits in u64")
    }
}

/// Element of the prime field 𝔽_p, stored as its residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: PrimeModulus,
}

impl Fp {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        Fp { value: value % modulus.0, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    fn check(&self, other: &Fp) {
        assert_eq!(self.modulus, other.modulus, "prime field mismatch");
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.modulus.0;
        let s = self.value + rhs.value;
        Fp { value: if s >= p { s - p } else { s }, modulus: self.modulus }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.modulus.0;
        let v = if self.value >= rhs.value { self.value - rhs.value } else { self.value + p - rhs.value };
        Fp { value: v, modulus: self.modulus }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus.0 as u128;
        Fp { value: v as u64, modulus: self.modulus }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 { 0 } else { self.modulus.0 - self.value };
        Fp { value: v, modulus: self.modulus }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Ctx = PrimeModulus;

    fn zero(ctx: &PrimeModulus) -> Self {
        Fp { value: 0, modulus: *ctx }
    }

    fn one(ctx: &PrimeModulus) -> Self {
        Fp { value: 1, modulus: *ctx }
    }

    fn from_integer(ctx: &PrimeModulus, n: &BigInt) -> Self {
        Fp { value: ctx.reduce_big(n), modulus: *ctx }
    }

    fn from_rational(ctx: &PrimeModulus, q: &BigRational) -> Result<Self, CoeffError> {
        let den = Fp::from_integer(ctx, q.denom());
        if den.value == 0 {
            return Err(CoeffError::BadPrime(ctx.0));
        }
        Ok(Fp::from_integer(ctx, q.numer()) * den.inv()?)
    }

    fn parameter(_: &PrimeModulus) -> Option<Self> {
        None
    }

    fn descriptor(ctx: &PrimeModulus) -> FieldDescriptor {
        FieldDescriptor::Fp(ctx.0)
    }

    fn context(&self) -> PrimeModulus {
        self.modulus
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn inv(&self) -> Result<Self, CoeffError> {
        if self.value == 0 {
            return Err(CoeffError::DivisionByZero);
        }
        let e = BigInt::from(self.value).extended_gcd(&BigInt::from(self.modulus.0));
        debug_assert!(e.gcd == BigInt::from(1));
        let x = if e.x.is_negative() { e.x + BigInt::from(self.modulus.0) } else { e.x };
        Ok(Fp::from_integer(&self.modulus, &x))
    }
}

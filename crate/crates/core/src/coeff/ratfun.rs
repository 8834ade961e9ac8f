//! Univariate polynomials in `t` and the rational function field k(t).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CoeffError, Field, FieldDescriptor};

/// Dense univariate polynomial over `K` in the parameter `t`, coefficients
/// in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<K: Field> {
    ctx: K::Ctx,
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn from_coeffs(ctx: &K::Ctx, coeffs: Vec<K>) -> Self {
        let mut p = UniPoly { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: &K::Ctx) -> Self {
        UniPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn constant(ctx: &K::Ctx, c: K) -> Self {
        Self::from_coeffs(ctx, vec![c])
    }

    pub fn one(ctx: &K::Ctx) -> Self {
        Self::constant(ctx, K::one(ctx))
    }

    /// The polynomial `t`.
    pub fn var(ctx: &K::Ctx) -> Self {
        Self::from_coeffs(ctx, vec![K::zero(ctx), K::one(ctx)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn context(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// Euclidean division over the field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), CoeffError> {
        let dd = divisor.degree().ok_or(CoeffError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![K::zero(&self.ctx); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].clone() - c.clone() * b.clone();
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(&self.ctx, quot), Self::from_coeffs(&self.ctx, rem)))
    }

    /// Monic gcd via the subresultant polynomial remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) =
            if self.degree() >= other.degree() { (self.clone(), other.clone()) } else { (other.clone(), self.clone()) };
        let one = K::one(&self.ctx);
        let mut g = one.clone();
        let mut h = one.clone();
        loop {
            let d = (a.degree().unwrap() - b.degree().unwrap()) as u64;
            let lc_b = b.leading_coeff().unwrap().clone();
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            // pseudo-remainder: lc(b)^(d+1) * (a mod b)
            let r = r.scale(&lc_b.pow(d + 1));
            match r.degree() {
                None => return b.monic(),
                Some(0) => return Self::one(&self.ctx),
                Some(_) => {}
            }
            let divisor = g.clone() * h.pow(d);
            a = b;
            b = r.scale(&divisor.inv().expect("nonzero subresultant divisor"));
            g = a.leading_coeff().unwrap().clone();
            if d > 0 {
                h = g.pow(d).div(&h.pow(d - 1)).expect("nonzero h");
            }
        }
    }
}

impl<K: Field> Add for UniPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        for (i, c) in short.coeffs.into_iter().enumerate() {
            long.coeffs[i] = long.coeffs[i].clone() + c;
        }
        long.trim();
        long
    }
}

impl<K: Field> Neg for UniPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly { ctx: self.ctx, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<K: Field> Sub for UniPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Field> Mul for UniPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![K::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(&self.ctx, out)
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if k == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

/// Element of k(t): a reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<K: Field> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Field> RationalFunction<K> {
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let ctx = num.ctx.clone();
        if num.is_zero() {
            return Ok(RationalFunction { num, den: UniPoly::one(&ctx) });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc_inv = den.leading_coeff().unwrap().inv()?;
        Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        let ctx = p.ctx.clone();
        RationalFunction { num: p, den: UniPoly::one(&ctx) }
    }

    pub fn numerator(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<K> {
        &self.den
    }

    /// Whether this element lies in k[t].
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `t = c`; fails when `c` is a pole.
    pub fn evaluate(&self, at: &K) -> Result<K, CoeffError> {
        let d = self.den.eval(at);
        self.num.eval(at).div(&d)
    }
}

impl<K: Field> Add for RationalFunction<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::new(self.num + rhs.num, self.den).expect("nonzero denominator");
        }
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        RationalFunction::new(num, self.den * rhs.den).expect("nonzero denominator")
    }
}

impl<K: Field> Neg for RationalFunction<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl<K: Field> Sub for RationalFunction<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Field> Mul for RationalFunction<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(self.num * rhs.num);
        }
        RationalFunction::new(self.num * rhs.num, self.den * rhs.den).expect("nonzero denominator")
    }
}

impl<K: Field> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<K: Field> Field for RationalFunction<K> {
    type Ctx = K::Ctx;

    fn zero(ctx: &K::Ctx) -> Self {
        RationalFunction::from_poly(UniPoly::zero(ctx))
    }

    fn one(ctx: &K::Ctx) -> Self {
        RationalFunction::from_poly(UniPoly::one(ctx))
    }

    fn from_integer(ctx: &K::Ctx, n: &BigInt) -> Self {
        RationalFunction::from_poly(UniPoly::constant(ctx, K::from_integer(ctx, n)))
    }

    fn from_rational(ctx: &K::Ctx, q: &BigRational) -> Result<Self, CoeffError> {
        Ok(RationalFunction::from_poly(UniPoly::constant(ctx, K::from_rational(ctx, q)?)))
    }

    fn parameter(ctx: &K::Ctx) -> Option<Self> {
        Some(RationalFunction::from_poly(UniPoly::var(ctx)))
    }

    fn descriptor(ctx: &K::Ctx) -> FieldDescriptor {
        K::descriptor(ctx).function_field()
    }

    fn context(&self) -> K::Ctx {
        self.num.ctx.clone()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn inv(&self) -> Result<Self, CoeffError> {
        if self.num.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }

    fn is_atomic(&self) -> bool {
        if !self.den.is_one() {
            return false;
        }
        let nonzero: Vec<(usize, &K)> = self.num.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        match nonzero.as_slice() {
            [] => true,
            [(0, c)] => c.is_atomic(),
            [(_, c)] => c.is_one() || (-(*c).clone()).is_one(),
            _ => false,
        }
    }
}

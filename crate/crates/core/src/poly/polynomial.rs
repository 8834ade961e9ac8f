use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ExponentVector, LocalOrdering, OrderingKind, PolyError};
use crate::coeff::{Field, FieldDescriptor};

/// Most variables a ring may have.
pub const MAX_VARS: usize = 16;

/// Coefficient field, variable names and local ordering shared by a family
/// of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    ctx: F::Ctx,
    vars: Vec<String>,
    ordering: LocalOrdering,
    _field: PhantomData<F>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(ctx: F::Ctx, vars: &[S], kind: OrderingKind) -> Result<Arc<Self>, PolyError> {
        let ordering = LocalOrdering::new(kind, vars.len());
        Self::with_ordering(ctx, vars, ordering)
    }

    pub fn with_ordering<S: AsRef<str>>(
        ctx: F::Ctx,
        vars: &[S],
        ordering: LocalOrdering,
    ) -> Result<Arc<Self>, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        if ordering.nvars() != vars.len() {
            return Err(PolyError::LengthMismatch);
        }
        for (i, v) in vars.iter().enumerate() {
            let reserved = v == "t" && F::parameter(&ctx).is_some();
            if !valid_identifier(v) || reserved || vars[..i].contains(v) {
                return Err(PolyError::InvalidVariableName(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { ctx, vars, ordering, _field: PhantomData }))
    }

    /// Same field and variables, different ordering.
    pub fn reordered(&self, ordering: LocalOrdering) -> Result<Arc<Self>, PolyError> {
        Self::with_ordering(self.ctx.clone(), &self.vars, ordering)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ordering(&self) -> &LocalOrdering {
        &self.ordering
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        F::descriptor(&self.ctx)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term<F: Field> {
    pub exp: ExponentVector,
    pub coeff: F,
}

/// Sparse polynomial with terms strictly decreasing in the ring ordering.
#[derive(Debug, Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F) -> Self {
        Self::monomial(ring, ExponentVector::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, F::one(ring.ctx()))
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        Self::monomial(ring, ExponentVector::var(ring.nvars(), i), F::one(ring.ctx()))
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, exp: ExponentVector, c: F) -> Self {
        assert_eq!(exp.len(), ring.nvars(), "exponent length");
        let terms = if c.is_zero() { Vec::new() } else { vec![Term { exp, coeff: c }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary terms: duplicates are
    /// summed, zeros dropped, and the result sorted.
    pub fn from_terms(ring: &Arc<PolyRing<F>>, terms: impl IntoIterator<Item = (ExponentVector, F)>) -> Self {
        let mut acc: HashMap<ExponentVector, F> = HashMap::new();
        for (exp, c) in terms {
            assert_eq!(exp.len(), ring.nvars(), "exponent length");
            match acc.get_mut(&exp) {
                Some(slot) => *slot = slot.clone() + c,
                None => {
                    acc.insert(exp, c);
                }
            }
        }
        let mut terms: Vec<Term<F>> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(exp, coeff)| Term { exp, coeff }).collect();
        let ord = ring.ordering();
        terms.sort_by(|a, b| ord.cmp(&b.exp, &a.exp));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.ordering().cmp(&w[0].exp, &w[1].exp) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> F {
        match self.terms.first() {
            Some(t) if t.exp.is_one() => t.coeff.clone(),
            _ => F::zero(self.ring.ctx()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_one())
    }

    /// Lowest total degree of a term; `None` (order ∞) for zero.
    pub fn order(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).min()
    }

    /// Highest total degree of a term.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).max()
    }

    /// Whether this is a unit of k[[x]], i.e. has a nonzero constant term.
    pub fn is_unit_local(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms =
            self.terms.iter().map(|t| Term { exp: t.exp.clone(), coeff: t.coeff.clone() * c.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplication by the single term `c·x^exp`.
    pub fn mul_term(&self, exp: &ExponentVector, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms =
            self.terms.iter().map(|t| Term { exp: t.exp.mul(exp), coeff: t.coeff.clone() * c.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let ord = self.ring.ordering();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &F| if negate_other { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ord.cmp(&a.exp, &b.exp) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { exp: b.exp.clone(), coeff: sign(&b.coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coeff.clone() + sign(&b.coeff);
                    if !c.is_zero() {
                        out.push(Term { exp: a.exp.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| Term { exp: t.exp.clone(), coeff: sign(&t.coeff) }));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.exp, &t.coeff));
        }
        let products = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| (a.exp.mul(&b.exp), a.coeff.clone() * b.coeff.clone())));
        Ok(Self::from_terms(&self.ring, products))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.ring.nvars() {
            return Err(PolyError::IndexOutOfRange(i));
        }
        let ctx = self.ring.ctx();
        let terms = self.terms.iter().filter(|t| t.exp.get(i) > 0).map(|t| {
            let e = t.exp.get(i);
            let mut exp = t.exp.clone();
            exp.set(i, e - 1);
            (exp, t.coeff.clone() * F::from_i64(ctx, e as i64))
        });
        // Lowering one exponent is not order-preserving under every
        // ordering, so re-canonicalize.
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// The same polynomial over a ring with identical field and variables
    /// but possibly a different ordering.
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Self, PolyError> {
        if ring.ctx() != self.ring.ctx() || ring.vars() != self.ring.vars() {
            return Err(PolyError::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let ord = ring.ordering();
        terms.sort_by(|a, b| ord.cmp(&b.exp, &a.exp));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Applies a coefficient map into another ring with the same variables.
    pub fn map_coeffs<G: Field, E>(
        &self,
        ring: &Arc<PolyRing<G>>,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<Polynomial<G>, E> {
        assert_eq!(ring.nvars(), self.ring.nvars(), "variable count");
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((t.exp.clone(), f(&t.coeff)?));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Substitutes `images[i]` for the i-th variable.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::LengthMismatch);
        }
        let ring = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&ring);
        for t in &self.terms {
            let mut m = Polynomial::constant(&ring, t.coeff.clone());
            for (i, img) in images.iter().enumerate() {
                let e = t.exp.get(i);
                if e > 0 {
                    m = m.checked_mul(&img.pow(e))?;
                }
            }
            acc = acc.checked_add(&m)?;
        }
        Ok(acc)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let terms = self.terms.iter().map(|t| Term { exp: t.exp.clone(), coeff: -t.coeff.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, op: PolyOp) -> Result<Polynomial<F>, PolyError> {
    match op {
        PolyOp::Add => f.checked_add(g),
        PolyOp::Sub => f.checked_sub(g),
        PolyOp::Mul => f.checked_mul(g),
    }
}

/// Writes `c` as the coefficient of `mono` (which may be empty for 1).
pub(crate) fn write_term<F: Field>(out: &mut String, first: bool, c: &F, mono: &str) {
    let neg = c.is_negative();
    let abs = if neg { -c.clone() } else { c.clone() };
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if mono.is_empty() {
        if abs.is_atomic() {
            out.push_str(&abs.to_string());
        } else {
            out.push_str(&format!("({abs})"));
        }
        return;
    }
    if !abs.is_one() {
        if abs.is_atomic() {
            out.push_str(&format!("{abs}*"));
        } else {
            out.push_str(&format!("({abs})*"));
        }
    }
    out.push_str(mono);
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            write_term(&mut s, k == 0, &t.coeff, &t.exp.format(self.ring.vars()));
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Fp, PrimeModulus, Rational};
    use crate::poly::parse_polynomial;

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rational>> {
        PolyRing::new((), vars, OrderingKind::Ds).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = qring(&["x"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2 - 1"));
        let f = p("x^3 + 2*x");
        assert!((&f + &(-&f)).is_zero());
        assert!((&f + &(-&f)).terms().is_empty());
        assert_eq!(&p("x - x^2") * &p("1 + x"), p("x - x^3"));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(&qring(&["x"]), 0);
        let b = Polynomial::var(&qring(&["y"]), 0);
        assert_eq!(poly_arith(&a, &b, PolyOp::Add), Err(PolyError::RingMismatch));
        let same = Polynomial::var(&qring(&["x"]), 0);
        assert!(poly_arith(&a, &same, PolyOp::Mul).is_ok());
    }

    #[test]
    fn order_and_units() {
        let r = qring(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        assert_eq!(p("x^2 + y^5").order(), Some(2));
        assert_eq!(p("0").order(), None);
        assert_eq!(p("1 + x").order(), Some(0));
        assert!(p("1 + x").is_unit_local());
        assert!(!p("x*y").is_unit_local());
    }

    #[test]
    fn derivative_examples() {
        let r = qring(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        assert_eq!(p("x^3 + y^2").derivative(0).unwrap(), p("3*x^2"));
        assert_eq!(p("x").derivative(2), Err(PolyError::IndexOutOfRange(2)));

        let f3 = PolyRing::<Fp>::new(PrimeModulus::new(3).unwrap(), &["x", "y"], OrderingKind::Ds).unwrap();
        let q = |s: &str| parse_polynomial(s, &f3).unwrap();
        assert!(q("x^3").derivative(0).unwrap().is_zero());
        assert!(q("x^2 + x^3 + y^3").derivative(1).unwrap().is_zero());
        assert_eq!(q("x^2 + x^3 + y^3").derivative(0).unwrap(), q("2*x"));
    }

    #[test]
    fn unit_detection_over_prime_fields() {
        let f5 = PolyRing::<Fp>::new(PrimeModulus::new(5).unwrap(), &["x"], OrderingKind::Ds).unwrap();
        let f3 = PolyRing::<Fp>::new(PrimeModulus::new(3).unwrap(), &["x"], OrderingKind::Ds).unwrap();
        assert!(!parse_polynomial("x - 5", &f5).unwrap().is_unit_local());
        assert!(parse_polynomial("x - 5", &f3).unwrap().is_unit_local());
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::<Rational>::new((), &["x", "x"], OrderingKind::Ds).is_err());
        assert!(PolyRing::<Rational>::new((), &["2x"], OrderingKind::Ds).is_err());
        assert!(PolyRing::<Rational>::new((), &[] as &[&str], OrderingKind::Ds).is_err());
        let many: Vec<String> = (0..17).map(|i| format!("x{i}")).collect();
        assert_eq!(
            PolyRing::<Rational>::new((), &many, OrderingKind::Ds).unwrap_err(),
            PolyError::TooManyVariables(17)
        );
        assert!(PolyRing::<crate::coeff::RationalFunction<Rational>>::new((), &["t"], OrderingKind::Ds).is_err());
        assert!(PolyRing::<Rational>::new((), &["t"], OrderingKind::Ds).is_ok());
    }

    #[test]
    fn reorder_between_orderings() {
        let r = qring(&["x", "y"]);
        let f = parse_polynomial("x^2 + y", &r).unwrap();
        let ls = r.reordered(LocalOrdering::ls(2)).unwrap();
        let g = f.to_ring(&ls).unwrap();
        assert_eq!(g.leading_term().unwrap().exp, ExponentVector::new([0, 1]));
        assert_eq!(f.leading_term().unwrap().exp, ExponentVector::new([0, 1]));
        let h = parse_polynomial("x + y^2", &r).unwrap().to_ring(&ls).unwrap();
        assert_eq!(h.leading_term().unwrap().exp, ExponentVector::new([0, 2]));
    }
}

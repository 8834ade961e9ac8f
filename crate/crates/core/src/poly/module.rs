use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{ExponentVector, LocalOrdering, PolyError, PolyRing, Polynomial, Term};
use crate::coeff::Field;

/// Term-over-position extension of a local ordering to module monomials
/// `x^α e_j`; at equal `x^α` the lower component index is larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrdering {
    base: LocalOrdering,
}

impl ModuleOrdering {
    pub fn new(base: LocalOrdering) -> Self {
        ModuleOrdering { base }
    }

    pub fn base(&self) -> &LocalOrdering {
        &self.base
    }

    #[inline]
    pub fn cmp(&self, a: (&ExponentVector, usize), b: (&ExponentVector, usize)) -> Ordering {
        self.base.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTerm<F: Field> {
    pub exp: ExponentVector,
    /// Zero-based component index.
    pub comp: usize,
    pub coeff: F,
}

/// Element of the free module `R^rank`, stored as one sparse list of module
/// terms sorted decreasingly in the term-over-position ordering.
#[derive(Debug, Clone)]
pub struct FreeModuleVector<F: Field> {
    ring: Arc<PolyRing<F>>,
    rank: usize,
    terms: Vec<ModTerm<F>>,
}

impl<F: Field> PartialEq for FreeModuleVector<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for FreeModuleVector<F> {}

#[inline]
fn cmp_terms<F: Field>(ord: &LocalOrdering, a: &ModTerm<F>, b: &ModTerm<F>) -> Ordering {
    ord.cmp(&a.exp, &b.exp).then_with(|| b.comp.cmp(&a.comp))
}

impl<F: Field> FreeModuleVector<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>, rank: usize) -> Self {
        FreeModuleVector { ring: ring.clone(), rank, terms: Vec::new() }
    }

    /// Builds `(p_1, …, p_q)`.
    pub fn from_components(ring: &Arc<PolyRing<F>>, comps: &[Polynomial<F>]) -> Result<Self, PolyError> {
        if comps.iter().any(|p| !PolyRing::same(p.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
        let ord = ring.ordering();
        let mut terms: Vec<ModTerm<F>> = comps
            .iter()
            .enumerate()
            .flat_map(|(j, p)| {
                p.terms().iter().map(move |t| ModTerm { exp: t.exp.clone(), comp: j, coeff: t.coeff.clone() })
            })
            .collect();
        terms.sort_by(|a, b| cmp_terms(ord, b, a));
        Ok(FreeModuleVector { ring: ring.clone(), rank: comps.len(), terms })
    }

    /// `p · e_j` in a module of the given rank.
    pub fn from_poly(p: &Polynomial<F>, comp: usize, rank: usize) -> Self {
        assert!(comp < rank);
        let terms = p.terms().iter().map(|t| ModTerm { exp: t.exp.clone(), comp, coeff: t.coeff.clone() }).collect();
        FreeModuleVector { ring: p.ring().clone(), rank, terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[ModTerm<F>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&ModTerm<F>> {
        self.terms.first()
    }

    pub fn component(&self, j: usize) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.comp == j)
            .map(|t| Term { exp: t.exp.clone(), coeff: t.coeff.clone() })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn components(&self) -> Vec<Polynomial<F>> {
        (0..self.rank).map(|j| self.component(j)).collect()
    }

    /// Largest total degree over all terms.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).max()
    }

    pub fn order(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).min()
    }

    /// Total degree minus the degree of the leading monomial.
    pub fn ecart(&self) -> u64 {
        match self.terms.first() {
            None => 0,
            Some(lt) => self.degree().unwrap() - lt.exp.degree(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring, self.rank);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| ModTerm { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.clone() * c.clone() })
            .collect();
        FreeModuleVector { ring: self.ring.clone(), rank: self.rank, terms }
    }

    /// Leading coefficient made 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// `self - c·x^exp·other`, merging in one pass.
    pub fn sub_scaled(&self, c: &F, exp: &ExponentVector, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let ord = self.ring.ordering();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let shifted =
            |t: &ModTerm<F>| ModTerm { exp: t.exp.mul(exp), comp: t.comp, coeff: -(t.coeff.clone() * c.clone()) };
        let (mut i, mut j) = (0, 0);
        let mut pending = b.first().map(shifted);
        while i < a.len() {
            let Some(bt) = pending.as_ref() else { break };
            match cmp_terms(ord, &a[i], bt) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    continue;
                }
                Ordering::Less => out.push(pending.take().unwrap()),
                Ordering::Equal => {
                    let s = a[i].coeff.clone() + bt.coeff.clone();
                    if !s.is_zero() {
                        out.push(ModTerm { exp: a[i].exp.clone(), comp: a[i].comp, coeff: s });
                    }
                    i += 1;
                }
            }
            j += 1;
            pending = b.get(j).map(shifted);
        }
        out.extend(a[i..].iter().cloned());
        if let Some(bt) = pending {
            out.push(bt);
            out.extend(b[j + 1..].iter().map(shifted));
        }
        FreeModuleVector { ring: self.ring.clone(), rank: self.rank, terms: out }
    }

    /// Drops every term of total degree at least `d`.
    pub fn truncate_degree(&mut self, d: u64) {
        self.terms.retain(|t| t.exp.degree() < d);
    }

    pub fn add(&self, other: &Self) -> Self {
        let one = F::one(self.ring.ctx());
        self.sub_scaled(&(-one), &ExponentVector::one(self.ring.nvars()), other)
    }

    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        let mut acc = Self::zero(&self.ring, self.rank);
        for t in p.terms() {
            acc = acc.sub_scaled(&(-t.coeff.clone()), &t.exp, self);
        }
        acc
    }

    /// Same vector over a ring with identical variables and a different
    /// ordering.
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Self, PolyError> {
        if ring.ctx() != self.ring.ctx() || ring.vars() != self.ring.vars() {
            return Err(PolyError::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let ord = ring.ordering();
        terms.sort_by(|a, b| cmp_terms(ord, b, a));
        Ok(FreeModuleVector { ring: ring.clone(), rank: self.rank, terms })
    }
}

impl<F: Field> fmt::Display for FreeModuleVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank == 1 {
            return write!(f, "{}", self.component(0));
        }
        let parts: Vec<String> = self.components().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

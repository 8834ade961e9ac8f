use crate::coeff::Field;
use crate::poly::{ExponentVector, FreeModuleVector, PolyRing, Polynomial};

use super::{Budget, MoraError, MoraOptions};

/// Witness `u·f − Σ a_i g_i = r` for a weak normal form `r` of `f`, with
/// `u` a unit of the local ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<F: Field> {
    pub unit: Polynomial<F>,
    pub coeffs: Vec<Polynomial<F>>,
}

impl<F: Field> Certificate<F> {
    fn shift_sub(&mut self, c: &F, m: &ExponentVector, other: &Certificate<F>) {
        self.unit = &self.unit - &other.unit.mul_term(m, c);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = &*a - &b.mul_term(m, c);
            }
        }
    }
}

/// A weak normal form, optionally with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult<F: Field> {
    pub remainder: FreeModuleVector<F>,
    pub certificate: Option<Certificate<F>>,
}

struct Reductor<F: Field> {
    vec: FreeModuleVector<F>,
    lead: ExponentVector,
    comp: usize,
    coeff: F,
    ecart: u64,
    rep: Option<Certificate<F>>,
}

impl<F: Field> Reductor<F> {
    fn new(vec: FreeModuleVector<F>, rep: Option<Certificate<F>>) -> Self {
        let lt = vec.leading_term().expect("reductors are nonzero");
        let (lead, comp, coeff) = (lt.exp.clone(), lt.comp, lt.coeff.clone());
        let ecart = vec.ecart();
        Reductor { vec, lead, comp, coeff, ecart, rep }
    }
}

pub(crate) fn check_compatible<F: Field>(
    first: &FreeModuleVector<F>,
    rest: &[FreeModuleVector<F>],
) -> Result<(), MoraError> {
    for g in rest {
        if !PolyRing::same(g.ring(), first.ring()) {
            return Err(MoraError::RingMismatch);
        }
        if g.rank() != first.rank() {
            return Err(MoraError::RankMismatch);
        }
    }
    Ok(())
}

/// Reduces `f` against `gens` with the écart-driven T-set strategy. Terms of
/// degree at least `cutoff` are discarded as they appear; callers pass one
/// only when those terms are known to lie in the submodule.
pub(crate) fn reduce<F: Field>(
    f: &FreeModuleVector<F>,
    gens: &[FreeModuleVector<F>],
    certify: bool,
    cutoff: Option<u64>,
    budget: &mut Budget,
) -> Result<(FreeModuleVector<F>, Option<Certificate<F>>), MoraError> {
    let ring = f.ring();
    let zero = Polynomial::zero(ring);
    let mut t_set: Vec<Reductor<F>> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| {
            let rep = certify.then(|| {
                let mut coeffs = vec![zero.clone(); gens.len()];
                coeffs[i] = -&Polynomial::one(ring);
                Certificate { unit: zero.clone(), coeffs }
            });
            Reductor::new(g.clone(), rep)
        })
        .collect();

    let mut h = f.clone();
    if let Some(d) = cutoff {
        h.truncate_degree(d);
    }
    let mut rep = certify.then(|| Certificate { unit: Polynomial::one(ring), coeffs: vec![zero.clone(); gens.len()] });
    while let Some(lt) = h.leading_term() {
        let best = t_set
            .iter()
            .enumerate()
            .filter(|(_, r)| r.comp == lt.comp && r.lead.divides(&lt.exp))
            .min_by_key(|(i, r)| (r.ecart, *i))
            .map(|(i, _)| i);
        let Some(idx) = best else { break };
        budget.tick()?;
        let m = lt.exp.div(&t_set[idx].lead).expect("divisibility checked");
        let c = lt.coeff.clone() * t_set[idx].coeff.inv().expect("leading coefficient is nonzero");
        if t_set[idx].ecart > h.ecart() {
            t_set.push(Reductor::new(h.clone(), rep.clone()));
        }
        let red = &t_set[idx];
        h = h.sub_scaled(&c, &m, &red.vec);
        if let Some(d) = cutoff {
            h.truncate_degree(d);
        }
        if let (Some(rep), Some(other)) = (rep.as_mut(), red.rep.as_ref()) {
            rep.shift_sub(&c, &m, other);
        }
    }
    Ok((h, rep))
}

/// A weak normal form of `f` with respect to `gens`: zero iff `f` lies in
/// the local submodule generated by `gens`, when `gens` is a standard basis.
pub fn mora_normal_form<F: Field>(
    f: &FreeModuleVector<F>,
    gens: &[FreeModuleVector<F>],
) -> Result<NormalFormResult<F>, MoraError> {
    mora_normal_form_with(f, gens, &MoraOptions::default(), false)
}

/// Weak normal form together with a certificate `u·f − Σ a_i g_i = r`.
pub fn mora_normal_form_certified<F: Field>(
    f: &FreeModuleVector<F>,
    gens: &[FreeModuleVector<F>],
) -> Result<NormalFormResult<F>, MoraError> {
    mora_normal_form_with(f, gens, &MoraOptions::default(), true)
}

pub fn mora_normal_form_with<F: Field>(
    f: &FreeModuleVector<F>,
    gens: &[FreeModuleVector<F>],
    opts: &MoraOptions,
    certify: bool,
) -> Result<NormalFormResult<F>, MoraError> {
    check_compatible(f, gens)?;
    let mut budget = Budget::new(opts.step_budget);
    let (remainder, certificate) = reduce(f, gens, certify, None, &mut budget)?;
    Ok(NormalFormResult { remainder, certificate })
}

//! Invariants of a single singularity germ: Milnor and Tjurina numbers, the
//! Tjurina module, order, a contact determinacy bound and the singular
//! locus of complete intersections.

mod report;

use std::sync::Arc;

use thiserror::Error;

use crate::coeff::Field;
use crate::mora::{MoraError, StandardBasis};
use crate::poly::{jacobian_matrix, minors, FreeModuleVector, PolyError, PolyRing, Polynomial};
use crate::Dimension;

pub use report::{full_report, InvariantReport, Warning};

/// Largest generator count accepted.
pub const MAX_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("empty generator list")]
    EmptyGeneratorList,
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("too many generators ({0}, at most 16)")]
    TooManyGenerators(usize),
    #[error("the contact determinacy bound needs a finite Tjurina module")]
    NotFinitelyDetermined,
    #[error("some generator is a unit, so the ideal is not proper")]
    ImproperIdeal,
    #[error("the generators do not form a complete intersection")]
    NotCompleteIntersection,
    #[error("generators live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Mora(#[from] MoraError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_gens<F: Field>(gens: &[Polynomial<F>]) -> Result<&Arc<PolyRing<F>>, InvariantError> {
    let ring = gens.first().ok_or(InvariantError::EmptyGeneratorList)?.ring();
    if gens.len() > MAX_GENERATORS {
        return Err(InvariantError::TooManyGenerators(gens.len()));
    }
    if gens.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
        return Err(InvariantError::RingMismatch);
    }
    Ok(ring)
}

/// The partial derivatives of `f`.
pub fn jacobian_ideal<F: Field>(f: &Polynomial<F>) -> Vec<Polynomial<F>> {
    (0..f.ring().nvars()).map(|i| f.derivative(i).expect("index in range")).collect()
}

/// `dim_K K[[x]]/⟨gens⟩`.
pub fn quotient_dimension<F: Field>(gens: &[Polynomial<F>]) -> Result<Dimension, InvariantError> {
    check_gens(gens)?;
    Ok(StandardBasis::of_ideal(gens)?.vector_space_dimension())
}

/// Krull dimension of `K[[x]]/⟨gens⟩`, −1 for the zero ring.
pub fn quotient_krull_dimension<F: Field>(gens: &[Polynomial<F>]) -> Result<i64, InvariantError> {
    check_gens(gens)?;
    match StandardBasis::of_ideal(gens)?.krull_dimension() {
        Ok(d) => Ok(d as i64),
        Err(MoraError::ZeroModule) => Ok(-1),
        Err(e) => Err(e.into()),
    }
}

/// `μ(f) = dim K[[x]]/j(f)`. A unit has μ = 0 by convention and the zero
/// polynomial has μ = ∞.
pub fn milnor_number<F: Field>(f: &Polynomial<F>) -> Result<Dimension, InvariantError> {
    if f.is_unit_local() {
        return Ok(Dimension::Finite(0));
    }
    quotient_dimension(&jacobian_ideal(f))
}

/// `τ(f) = dim K[[x]]/⟨f, j(f)⟩`.
pub fn tjurina_number<F: Field>(f: &Polynomial<F>) -> Result<Dimension, InvariantError> {
    let mut gens = vec![f.clone()];
    gens.extend(jacobian_ideal(f));
    quotient_dimension(&gens)
}

/// Generators of the submodule of `R^m` spanned by `F_i·e_j` and the rows
/// of the Jacobian matrix.
pub fn tjurina_module_generators<F: Field>(gens: &[Polynomial<F>]) -> Result<Vec<FreeModuleVector<F>>, InvariantError> {
    let ring = check_gens(gens)?;
    let m = gens.len();
    let mut out = Vec::with_capacity(m * m + ring.nvars());
    for f in gens.iter().filter(|f| !f.is_zero()) {
        for j in 0..m {
            out.push(FreeModuleVector::from_poly(f, j, m));
        }
    }
    let jac = jacobian_matrix(gens)?;
    for i in 0..ring.nvars() {
        out.push(FreeModuleVector::from_components(ring, jac.row(i))?);
    }
    Ok(out)
}

/// `dim_K T_I`, the colength of the Tjurina module.
pub fn tjurina_module_dimension<F: Field>(gens: &[Polynomial<F>]) -> Result<Dimension, InvariantError> {
    let vecs = tjurina_module_generators(gens)?;
    if vecs.iter().all(FreeModuleVector::is_zero) {
        return Ok(Dimension::Infinite);
    }
    let nonzero: Vec<_> = vecs.into_iter().filter(|v| !v.is_zero()).collect();
    Ok(crate::mora::standard_basis(&nonzero)?.vector_space_dimension())
}

/// `ord(I) = max {k | I ⊂ ⟨x⟩^k}`, the least order of a generator.
pub fn order_of_ideal<F: Field>(gens: &[Polynomial<F>]) -> Result<u64, InvariantError> {
    check_gens(gens)?;
    gens.iter().filter_map(Polynomial::order).min().ok_or(InvariantError::ZeroIdeal)
}

/// `2·dim T_I − ord(I) + 2`, a contact determinacy degree.
pub fn determinacy_bound<F: Field>(gens: &[Polynomial<F>]) -> Result<u64, InvariantError> {
    let ord = order_of_ideal(gens)?;
    match tjurina_module_dimension(gens)? {
        Dimension::Finite(t) => Ok(t.saturating_mul(2).saturating_add(2).saturating_sub(ord)),
        Dimension::Infinite => Err(InvariantError::NotFinitelyDetermined),
    }
}

/// Whether `K[[x]]/I` has dimension `n − m`.
pub fn is_complete_intersection<F: Field>(gens: &[Polynomial<F>]) -> Result<bool, InvariantError> {
    let ring = check_gens(gens)?;
    if gens.iter().any(Polynomial::is_unit_local) {
        return Err(InvariantError::ImproperIdeal);
    }
    let n = ring.nvars() as i64;
    Ok(quotient_krull_dimension(gens)? == n - gens.len() as i64)
}

/// `I + I_m(Jac)`: the generators followed by the maximal minors of the
/// n × m Jacobian matrix.
pub fn singular_locus_ideal<F: Field>(gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, InvariantError> {
    if !is_complete_intersection(gens)? {
        return Err(InvariantError::NotCompleteIntersection);
    }
    let jac = jacobian_matrix(gens)?;
    let mut out = gens.to_vec();
    out.extend(minors(&jac, gens.len())?);
    Ok(out)
}

/// Whether the complete intersection is smooth outside the origin.
pub fn has_isolated_singularity<F: Field>(gens: &[Polynomial<F>]) -> Result<bool, InvariantError> {
    let sing = singular_locus_ideal(gens)?;
    Ok(quotient_dimension(&sing)?.is_finite())
}

/// `f ∈ j(f)` in the local ring, which for isolated singularities is
/// `μ(f) = τ(f)`.
pub fn mu_equals_tau<F: Field>(f: &Polynomial<F>) -> Result<bool, InvariantError> {
    if f.is_unit_local() {
        return Ok(true);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let j = jacobian_ideal(f);
    let nonzero: Vec<_> = j.into_iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(false);
    }
    let sb = StandardBasis::of_ideal(&nonzero)?;
    Ok(sb.contains(&FreeModuleVector::from_poly(f, 0, 1))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Fp, PrimeModulus, Rational};
    use crate::poly::{parse_polynomial, OrderingKind};

    fn qring(n: usize) -> Arc<PolyRing<Rational>> {
        let vars = ["x", "y", "z"];
        PolyRing::new((), &vars[..n], OrderingKind::Ds).unwrap()
    }

    fn q(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, &qring(2)).unwrap()
    }

    fn fp(p: u64, s: &str) -> Polynomial<Fp> {
        let r = PolyRing::<Fp>::new(PrimeModulus::new(p).unwrap(), &["x", "y"], OrderingKind::Ds).unwrap();
        parse_polynomial(s, &r).unwrap()
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_number(&q("x^2 + x^3 + y^3")), Ok(Dimension::Finite(2)));
        assert_eq!(milnor_number(&fp(2, "x^2 + x^3 + y^3")), Ok(Dimension::Finite(4)));
        assert_eq!(milnor_number(&fp(3, "x^2 + x^3 + y^3")), Ok(Dimension::Infinite));
        assert_eq!(milnor_number(&q("x^2 + y^2")), Ok(Dimension::Finite(1)));
        assert_eq!(milnor_number(&q("x^3 + y^5")), Ok(Dimension::Finite(8)));
        assert_eq!(milnor_number(&q("1 + x")), Ok(Dimension::Finite(0)));
        assert_eq!(milnor_number(&q("0")), Ok(Dimension::Infinite));
    }

    #[test]
    fn tjurina_examples() {
        assert_eq!(tjurina_number(&q("x^3 + y^2")), Ok(Dimension::Finite(2)));
        let t = tjurina_number(&fp(2, "x^2 + x^3 + y^3")).unwrap();
        assert!(t <= Dimension::Finite(4));
        assert_eq!(tjurina_number(&q("1 + x")), Ok(Dimension::Finite(0)));
        // semi-quasihomogeneous but not quasihomogeneous
        let f = q("x^4 + y^5 + x^2*y^3");
        assert!(tjurina_number(&f).unwrap() < milnor_number(&f).unwrap());
    }

    #[test]
    fn tjurina_module_examples() {
        let f = q("x^3 + y^2");
        assert_eq!(tjurina_module_dimension(std::slice::from_ref(&f)), tjurina_number(&f));
        assert_eq!(tjurina_module_dimension(&[q("x"), q("y")]), Ok(Dimension::Finite(0)));
        assert!(tjurina_module_dimension(&[q("x^2 + y^3"), q("x*y")]).unwrap().is_finite());
        assert_eq!(tjurina_module_dimension::<Rational>(&[]), Err(InvariantError::EmptyGeneratorList));
    }

    #[test]
    fn order_and_bound() {
        assert_eq!(order_of_ideal(&[q("x^3 + y^2")]), Ok(2));
        assert_eq!(order_of_ideal(&[q("x^2"), q("y^5")]), Ok(2));
        assert_eq!(order_of_ideal(&[q("x - x^2")]), Ok(1));
        assert_eq!(order_of_ideal(&[q("0")]), Err(InvariantError::ZeroIdeal));
        assert_eq!(determinacy_bound(&[q("x^3 + y^2")]), Ok(4));
        assert_eq!(determinacy_bound(&[q("x^2 + y^2")]), Ok(2));
        assert_eq!(determinacy_bound(&[q("y")]), Ok(1));
        assert_eq!(determinacy_bound(&[q("x^2")]), Err(InvariantError::NotFinitelyDetermined));
    }

    #[test]
    fn complete_intersections() {
        assert_eq!(is_complete_intersection(&[q("x^2 + y^2"), q("x*y")]), Ok(true));
        assert_eq!(is_complete_intersection(&[q("x*y")]), Ok(true));
        assert_eq!(is_complete_intersection(&[q("x"), q("x + x^2")]), Ok(false));
        assert_eq!(is_complete_intersection(&[q("1 + x")]), Err(InvariantError::ImproperIdeal));
    }

    #[test]
    fn singular_locus() {
        assert_eq!(singular_locus_ideal(&[q("x^3 + y^2")]), Ok(vec![q("x^3 + y^2"), q("3*x^2"), q("2*y")]));
        assert_eq!(singular_locus_ideal(&[q("x*y")]), Ok(vec![q("x*y"), q("y"), q("x")]));
        let ci = [q("x^2 + y^2"), q("x*y")];
        assert_eq!(singular_locus_ideal(&ci), Ok(vec![ci[0].clone(), ci[1].clone(), q("2*x^2 - 2*y^2")]));
        assert_eq!(has_isolated_singularity(&ci), Ok(true));
        assert_eq!(has_isolated_singularity(&[q("x^3 + y^2")]), Ok(true));
        assert_eq!(has_isolated_singularity(&[q("x^2")]), Ok(false));
        assert_eq!(has_isolated_singularity(&[q("x"), q("x + x^2")]), Err(InvariantError::NotCompleteIntersection));
        // surfaces need the 1 × 1 minors, not 2 × 2 ones
        let r = qring(3);
        let f = parse_polynomial("x^2 + y^2 + z^2", &r).unwrap();
        assert_eq!(singular_locus_ideal(std::slice::from_ref(&f)).unwrap().len(), 4);
        assert_eq!(has_isolated_singularity(&[f]), Ok(true));
    }

    #[test]
    fn mu_tau_membership() {
        assert_eq!(mu_equals_tau(&q("x^3 + y^2")), Ok(true));
        assert_eq!(mu_equals_tau(&q("x + y")), Ok(true));
        let f = q("x^2 + x^3 + y^3");
        assert_eq!(mu_equals_tau(&f), Ok(milnor_number(&f) == tjurina_number(&f)));
        let g = q("x^4 + y^5 + x^2*y^3");
        assert_eq!(mu_equals_tau(&g), Ok(false));
    }
}

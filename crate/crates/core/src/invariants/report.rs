use std::fmt;

use crate::coeff::{Field, FieldDescriptor};
use crate::poly::Polynomial;
use crate::Dimension;

use super::{
    check_gens, determinacy_bound, has_isolated_singularity, is_complete_intersection, milnor_number, order_of_ideal,
    tjurina_module_dimension, InvariantError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Warning {
    /// Some generator has a nonzero constant term.
    NotSingularAtOrigin,
    /// The ideal is not a complete intersection, so `isolated` is not
    /// meaningful and reported as false.
    NotCompleteIntersection,
    /// The determinacy bound is only proven over infinite fields.
    FiniteFieldDeterminacy,
}

impl Warning {
    pub fn code(&self) -> &'static str {
        match self {
            Warning::NotSingularAtOrigin => "not_singular_at_origin",
            Warning::NotCompleteIntersection => "not_complete_intersection",
            Warning::FiniteFieldDeterminacy => "finite_field_determinacy",
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Warning::NotSingularAtOrigin => "a generator is a unit; the germ is empty at the origin",
            Warning::NotCompleteIntersection => "not a complete intersection; isolatedness not tested",
            Warning::FiniteFieldDeterminacy => {
                "determinacy bound computed over a finite field, where it is not guaranteed"
            }
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub field: FieldDescriptor,
    pub n: usize,
    pub m: usize,
    /// Milnor number, only for hypersurfaces.
    pub mu: Option<Dimension>,
    /// Tjurina number, only for hypersurfaces.
    pub tau: Option<Dimension>,
    pub dim_t: Dimension,
    pub ord: u64,
    pub determinacy_bound: Option<u64>,
    pub is_ci: bool,
    pub isolated: bool,
    pub warnings: Vec<Warning>,
}

/// All invariants of the ideal generated by `gens`.
pub fn full_report<F: Field>(gens: &[Polynomial<F>]) -> Result<InvariantReport, InvariantError> {
    let ring = check_gens(gens)?;
    let ord = order_of_ideal(gens)?;
    let (n, m) = (ring.nvars(), gens.len());
    let mut warnings = Vec::new();

    let dim_t = tjurina_module_dimension(gens)?;
    let (mu, tau) = if m == 1 { (Some(milnor_number(&gens[0])?), Some(dim_t)) } else { (None, None) };
    let determinacy_bound = match dim_t {
        Dimension::Finite(_) => Some(determinacy_bound(gens)?),
        Dimension::Infinite => None,
    };

    let (is_ci, isolated) = if gens.iter().any(Polynomial::is_unit_local) {
        warnings.push(Warning::NotSingularAtOrigin);
        (false, true)
    } else if is_complete_intersection(gens)? {
        (true, has_isolated_singularity(gens)?)
    } else {
        warnings.push(Warning::NotCompleteIntersection);
        (false, false)
    };
    let field = ring.descriptor();
    if field.is_finite() && determinacy_bound.is_some() {
        warnings.push(Warning::FiniteFieldDeterminacy);
    }
    Ok(InvariantReport { field, n, m, mu, tau, dim_t, ord, determinacy_bound, is_ci, isolated, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Fp, PrimeModulus, Rational};
    use crate::poly::{parse_polynomial, OrderingKind, PolyRing};

    fn q(s: &str) -> Polynomial<Rational> {
        let r = PolyRing::<Rational>::new((), &["x", "y"], OrderingKind::Ds).unwrap();
        parse_polynomial(s, &r).unwrap()
    }

    #[test]
    fn cusp_report() {
        let r = full_report(&[q("x^3 + y^2")]).unwrap();
        assert_eq!(r.mu, Some(Dimension::Finite(2)));
        assert_eq!(r.tau, Some(Dimension::Finite(2)));
        assert_eq!(r.dim_t, Dimension::Finite(2));
        assert_eq!(r.ord, 2);
        assert_eq!(r.determinacy_bound, Some(4));
        assert!(r.is_ci && r.isolated);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn smooth_report() {
        let r = full_report(&[q("x"), q("y")]).unwrap();
        assert_eq!((r.mu, r.tau), (None, None));
        assert_eq!(r.dim_t, Dimension::Finite(0));
        assert_eq!((r.ord, r.determinacy_bound), (1, Some(1)));
        assert!(r.is_ci && r.isolated);
    }

    #[test]
    fn degenerate_reports() {
        assert_eq!(full_report(&[q("0")]), Err(InvariantError::ZeroIdeal));
        let r = full_report(&[q("1 + x")]).unwrap();
        assert_eq!(r.mu, Some(Dimension::Finite(0)));
        assert_eq!(r.warnings, vec![Warning::NotSingularAtOrigin]);
        let r = full_report(&[q("x^2")]).unwrap();
        assert_eq!(r.determinacy_bound, None);
        assert!(r.is_ci && !r.isolated);
    }

    #[test]
    fn finite_field_flag() {
        let ring = PolyRing::<Fp>::new(PrimeModulus::new(5).unwrap(), &["x", "y"], OrderingKind::Ds).unwrap();
        let f = parse_polynomial("x^3 + y^2", &ring).unwrap();
        let r = full_report(&[f]).unwrap();
        assert_eq!(r.warnings, vec![Warning::FiniteFieldDeterminacy]);
    }
}

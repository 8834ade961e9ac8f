use std::sync::Arc;

use crate::coeff::{
    reduce_mod_p, CoeffError, Field, FieldDescriptor, Fp, PrimeModulus, Rational, RationalFunction, UniPoly,
};
use crate::mora::{standard_basis_with, MoraOptions};
use crate::poly::{FreeModuleVector, PolyRing, Polynomial};
use crate::Dimension;

use super::{BaseCoeff, BaseRing, FamilyKind, FamilySpec, FibreError, FibrePoint};

/// Family entries pushed to one fibre, in the family's layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialized<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub kind: FamilyKind,
    pub entries: Vec<Polynomial<F>>,
}

/// A fibre over whichever residue field the point has.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibreData {
    Q(Specialized<Rational>),
    Fp(Specialized<Fp>),
    Qt(Specialized<RationalFunction<Rational>>),
    Fpt(Specialized<RationalFunction<Fp>>),
}

/// Runs `$body` with `$s` bound to the inner [`Specialized`].
macro_rules! on_fibre {
    ($data:expr, $s:ident => $body:expr) => {
        match $data {
            $crate::fibres::FibreData::Q($s) => $body,
            $crate::fibres::FibreData::Fp($s) => $body,
            $crate::fibres::FibreData::Qt($s) => $body,
            $crate::fibres::FibreData::Fpt($s) => $body,
        }
    };
}
pub(crate) use on_fibre;

impl FibreData {
    pub fn field(&self) -> FieldDescriptor {
        on_fibre!(self, s => s.ring.descriptor())
    }

    /// Entries printed in the polynomial grammar.
    pub fn entry_strings(&self) -> Vec<String> {
        on_fibre!(self, s => s.entries.iter().map(|e| e.to_string()).collect())
    }
}

fn constant(c: &BaseCoeff) -> Rational {
    c.numerator().coeffs().first().cloned().unwrap_or_else(|| Rational::zero(&()))
}

fn reduce_poly(p: &UniPoly<Rational>, m: PrimeModulus) -> Result<UniPoly<Fp>, CoeffError> {
    let coeffs = p.coeffs().iter().map(|c| reduce_mod_p(c, m.get())).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::from_coeffs(&m, coeffs))
}

fn build<F: Field>(
    family: &FamilySpec,
    ctx: F::Ctx,
    mut map: impl FnMut(&BaseCoeff) -> Result<F, CoeffError>,
) -> Result<Specialized<F>, FibreError> {
    let ring = PolyRing::<F>::new(ctx, family.vars(), family.ordering())?;
    let entries =
        family.entries().iter().map(|e| e.map_coeffs(&ring, &mut map)).collect::<Result<Vec<_>, CoeffError>>()?;
    Ok(Specialized { ring, kind: family.kind(), entries })
}

fn modulus(p: u64) -> Result<PrimeModulus, FibreError> {
    PrimeModulus::new(p).map_err(|_| FibreError::NotPrime(p))
}

/// Pushes every coefficient through the residue map of `point`.
pub fn specialize(family: &FamilySpec, point: &FibrePoint) -> Result<FibreData, FibreError> {
    match (family.base(), point) {
        (BaseRing::Integers, FibrePoint::Prime(p)) => {
            let m = modulus(*p)?;
            Ok(FibreData::Fp(build(family, m, |c| reduce_mod_p(&constant(c), m.get()))?))
        }
        (BaseRing::Integers, FibrePoint::Generic) => Ok(FibreData::Q(build(family, (), |c| Ok(constant(c)))?)),
        (BaseRing::Polynomials(FieldDescriptor::Q), FibrePoint::Value(v)) => {
            Ok(FibreData::Q(build(family, (), |c| c.evaluate(v))?))
        }
        (BaseRing::Polynomials(FieldDescriptor::Q), FibrePoint::Generic) => {
            Ok(FibreData::Qt(build(family, (), |c| Ok(c.clone()))?))
        }
        (BaseRing::Polynomials(FieldDescriptor::Fp(p)), FibrePoint::Value(v)) => {
            let m = modulus(p)?;
            let at = reduce_mod_p(v, p)?;
            Ok(FibreData::Fp(build(family, m, |c| Ok(reduce_poly(c.numerator(), m)?.eval(&at)))?))
        }
        (BaseRing::Polynomials(FieldDescriptor::Fp(p)), FibrePoint::Generic) => {
            let m = modulus(p)?;
            Ok(FibreData::Fpt(build(family, m, |c| Ok(RationalFunction::from_poly(reduce_poly(c.numerator(), m)?)))?))
        }
        (base, point) => Err(FibreError::IncompatiblePoint { point: point.to_string(), base: base.to_string() }),
    }
}

/// Dimension of the module the family kind measures on this fibre:
/// `K[[x]]/j(F)`, `K[[x]]/I` or the cokernel of the matrix.
pub(crate) fn fibre_dimension<F: Field>(s: &Specialized<F>, opts: &MoraOptions) -> Result<Dimension, FibreError> {
    let gens: Vec<FreeModuleVector<F>> = match s.kind {
        FamilyKind::Hypersurface => {
            let f = &s.entries[0];
            if f.is_unit_local() {
                return Ok(Dimension::Finite(0));
            }
            (0..s.ring.nvars())
                .map(|i| Ok(FreeModuleVector::from_poly(&f.derivative(i)?, 0, 1)))
                .collect::<Result<_, FibreError>>()?
        }
        FamilyKind::Ideal => s.entries.iter().map(|e| FreeModuleVector::from_poly(e, 0, 1)).collect(),
        FamilyKind::Presentation { rows, cols } => (0..cols)
            .map(|j| {
                let col: Vec<_> = (0..rows).map(|i| s.entries[i * cols + j].clone()).collect();
                FreeModuleVector::from_components(&s.ring, &col)
            })
            .collect::<Result<_, _>>()?,
    };
    let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Dimension::Infinite);
    }
    Ok(standard_basis_with(&gens, opts)?.vector_space_dimension())
}

/// `d̂_𝔭`: the dimension of the completed fibre at `point`.
pub fn completed_fibre_dimension(family: &FamilySpec, point: &FibrePoint) -> Result<Dimension, FibreError> {
    completed_fibre_dimension_with(family, point, &MoraOptions::default())
}

pub fn completed_fibre_dimension_with(
    family: &FamilySpec,
    point: &FibrePoint,
    opts: &MoraOptions,
) -> Result<Dimension, FibreError> {
    let data = specialize(family, point)?;
    on_fibre!(&data, s => fibre_dimension(s, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(base: &str, kind: &str, entries: &str) -> FamilySpec {
        // presentation examples live on the line, everything else in the plane
        let vars = if kind.starts_with("presentation") { "x" } else { "x, y" };
        FamilySpec::parse(&format!("base: {base}\nvars: {vars}\nkind: {kind}\n{entries}\n")).unwrap()
    }

    fn d(f: &FamilySpec, p: &str) -> Result<Dimension, FibreError> {
        completed_fibre_dimension(f, &p.parse().unwrap())
    }

    #[test]
    fn integer_matrix_family() {
        let f = fam("Z", "presentation 1x1", "x - 5");
        assert_eq!(d(&f, "p=5"), Ok(Dimension::Finite(1)));
        assert_eq!(d(&f, "p=3"), Ok(Dimension::Finite(0)));
        assert_eq!(d(&f, "generic"), Ok(Dimension::Finite(0)));
        assert_eq!(d(&f, "p=4"), Err(FibreError::NotPrime(4)));
        assert!(matches!(d(&f, "t=0"), Err(FibreError::IncompatiblePoint { .. })));
    }

    #[test]
    fn parametric_family() {
        let f = fam("Q[t]", "presentation 1x1", "t - x");
        assert_eq!(d(&f, "t=0"), Ok(Dimension::Finite(1)));
        assert_eq!(d(&f, "t=1"), Ok(Dimension::Finite(0)));
        assert_eq!(d(&f, "generic"), Ok(Dimension::Finite(0)));
        match specialize(&f, &FibrePoint::Value(Rational::zero(&()))).unwrap() {
            FibreData::Q(s) => assert_eq!(s.entries[0].to_string(), "-x"),
            other => panic!("{other:?}"),
        }
        assert_eq!(specialize(&f, &FibrePoint::Generic).unwrap().field(), FieldDescriptor::Qt);
    }

    #[test]
    fn finite_parametric_family() {
        let f = fam("F:3[t]", "ideal", "t*x + y^2\ny - x^2");
        assert_eq!(d(&f, "t=0"), Ok(Dimension::Finite(4)));
        assert_eq!(d(&f, "t=3"), Ok(Dimension::Finite(4)));
        assert_eq!(d(&f, "t=1"), Ok(Dimension::Finite(1)));
        assert_eq!(d(&f, "generic"), Ok(Dimension::Finite(1)));
        assert_eq!(specialize(&f, &FibrePoint::Generic).unwrap().field(), FieldDescriptor::Fpt(3));
    }

    #[test]
    fn hypersurface_family() {
        let f = fam("Z", "hypersurface", "x^2 + x^3 + y^3");
        assert_eq!(d(&f, "generic"), Ok(Dimension::Finite(2)));
        assert_eq!(d(&f, "p=2"), Ok(Dimension::Finite(4)));
        assert_eq!(d(&f, "p=3"), Ok(Dimension::Infinite));
        assert_eq!(d(&f, "p=5"), Ok(Dimension::Finite(2)));
    }

    #[test]
    fn identity_and_bad_primes() {
        let f = fam("Z", "presentation 1x1", "1");
        for p in ["p=2", "p=3", "generic"] {
            assert_eq!(d(&f, p), Ok(Dimension::Finite(0)));
        }
        let g = fam("Z", "ideal", "x/3 + y^2\ny");
        assert_eq!(d(&g, "p=3"), Err(FibreError::Coeff(CoeffError::BadPrime(3))));
        assert_eq!(d(&g, "p=2"), Ok(Dimension::Finite(1)));
    }
}

//! Local invariants of singularities over ℚ, prime fields and rational
//! function fields, computed with Mora standard bases.

pub mod coeff;
mod dimension;
pub mod fibres;
pub mod invariants;
pub mod mora;
pub mod poly;

pub use dimension::Dimension;

pub use coeff::{Field, FieldDescriptor, Fp, Rational, RationalFunction};
pub use poly::{PolyRing, Polynomial};

/// ℚ(t), the generic residue field of ℚ[t].
pub type Qt = RationalFunction<Rational>;
/// 𝔽_p(t), the generic residue field of 𝔽_p[t].
pub type Fpt = RationalFunction<Fp>;

pub type QRing = PolyRing<Rational>;
pub type FpRing = PolyRing<Fp>;
pub type QtRing = PolyRing<Qt>;
pub type FptRing = PolyRing<Fpt>;

pub type QPoly = Polynomial<Rational>;
pub type FpPoly = Polynomial<Fp>;
pub type QtPoly = Polynomial<Qt>;
pub type FptPoly = Polynomial<Fpt>;

//! Family descriptions and their text format.
//!
//! ```text
//! # comments start with '#'
//! base: Z              (or Q[t], F:7[t])
//! vars: x, y
//! ordering: ds         (optional, ds or ls)
//! kind: presentation 1x2   (or hypersurface, ideal)
//! x - 5
//! 0
//! ```
//!
//! Header lines are `key: value`; every other nonblank line is one entry,
//! listed row-major for presentation matrices.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::coeff::{reduce_mod_p, Field, FieldDescriptor, Rational, RationalFunction, UniPoly};
use crate::poly::{parse_polynomial, OrderingKind, PolyRing, Polynomial};

use super::FibreError;

/// Coefficients of family entries, all embedded in ℚ(t).
pub type BaseCoeff = RationalFunction<Rational>;
pub type BasePoly = Polynomial<BaseCoeff>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    /// `k[t]` for `k` = ℚ or 𝔽_p.
    Polynomials(FieldDescriptor),
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::Polynomials(k) => write!(f, "{k}[t]"),
        }
    }
}

impl FromStr for BaseRing {
    type Err = FibreError;

    fn from_str(s: &str) -> Result<Self, FibreError> {
        let s = s.trim();
        if s == "Z" || s == "ZZ" {
            return Ok(BaseRing::Integers);
        }
        let bad = || FibreError::Format { line: 0, msg: format!("unknown base ring `{s}`") };
        let inner = s.strip_suffix("[t]").ok_or_else(bad)?;
        match inner.parse::<FieldDescriptor>().map_err(|_| bad())? {
            k @ (FieldDescriptor::Q | FieldDescriptor::Fp(_)) => Ok(BaseRing::Polynomials(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// One polynomial `F`; fibres measure `K[[x]]/j(F)`.
    Hypersurface,
    /// Generators `F_1, …, F_m`; fibres measure `K[[x]]/I`.
    Ideal,
    /// A `rows × cols` matrix; fibres measure its cokernel.
    Presentation { rows: usize, cols: usize },
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Hypersurface => write!(f, "hypersurface"),
            FamilyKind::Ideal => write!(f, "ideal"),
            FamilyKind::Presentation { rows, cols } => write!(f, "presentation {rows}x{cols}"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = FibreError;

    fn from_str(s: &str) -> Result<Self, FibreError> {
        let bad = || FibreError::Format { line: 0, msg: format!("unknown family kind `{s}`") };
        let mut words = s.split_whitespace();
        let kind = match words.next() {
            Some("hypersurface") => FamilyKind::Hypersurface,
            Some("ideal") => FamilyKind::Ideal,
            Some("presentation") => {
                let (r, c) = words.next().and_then(|d| d.split_once('x')).ok_or_else(bad)?;
                let rows = r.parse().map_err(|_| bad())?;
                let cols = c.parse().map_err(|_| bad())?;
                FamilyKind::Presentation { rows, cols }
            }
            _ => return Err(bad()),
        };
        if words.next().is_some() {
            return Err(bad());
        }
        Ok(kind)
    }
}

/// A family of germs over a one-dimensional base, with entries in `A[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    base: BaseRing,
    ring: Arc<PolyRing<BaseCoeff>>,
    kind: FamilyKind,
    entries: Vec<BasePoly>,
}

impl FamilySpec {
    /// Checks the shape and that every coefficient lies in the base ring.
    /// Over `𝔽_p[t]` coefficients are reduced to representatives in `[0, p)`.
    pub fn new(base: BaseRing, kind: FamilyKind, entries: Vec<BasePoly>) -> Result<Self, FibreError> {
        let ring = entries.first().ok_or_else(|| FibreError::Shape("no entries".into()))?.ring().clone();
        if entries.iter().any(|e| !PolyRing::same(e.ring(), &ring)) {
            return Err(FibreError::Poly(crate::poly::PolyError::RingMismatch));
        }
        match kind {
            FamilyKind::Hypersurface if entries.len() != 1 => {
                return Err(FibreError::Shape(format!("a hypersurface needs 1 entry, got {}", entries.len())));
            }
            FamilyKind::Ideal if entries.len() > crate::invariants::MAX_GENERATORS => {
                return Err(FibreError::Shape(format!("at most 16 generators, got {}", entries.len())));
            }
            FamilyKind::Presentation { rows, cols } if rows == 0 || cols == 0 || rows * cols != entries.len() => {
                return Err(FibreError::Shape(format!(
                    "a {rows}x{cols} matrix needs {} entries, got {}",
                    rows * cols,
                    entries.len()
                )));
            }
            _ => {}
        }
        let mut normalized = Vec::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            let mut ok = true;
            let mapped = e.map_coeffs(&ring, |c| {
                let fits =
                    c.is_polynomial() && (base != BaseRing::Integers || c.numerator().degree().unwrap_or(0) == 0);
                ok &= fits;
                match base {
                    BaseRing::Polynomials(FieldDescriptor::Fp(p)) if fits => canonical_mod_p(c, p),
                    _ => Ok(c.clone()),
                }
            });
            match mapped {
                Ok(m) if ok => normalized.push(m),
                Ok(_) => return Err(FibreError::NotInBaseRing(i)),
                Err(err) => return Err(err.into()),
            }
        }
        Ok(FamilySpec { base, ring, kind, entries: normalized })
    }

    /// Parses entries written in the polynomial grammar.
    pub fn from_strings<V: AsRef<str>, E: AsRef<str>>(
        base: BaseRing,
        vars: &[V],
        ordering: OrderingKind,
        kind: FamilyKind,
        entries: &[E],
    ) -> Result<Self, FibreError> {
        let ring = PolyRing::<BaseCoeff>::new((), vars, ordering)?;
        let parsed = entries.iter().map(|e| parse_entry(base, &ring, e.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Self::new(base, kind, parsed)
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing<BaseCoeff>> {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        self.ring.vars()
    }

    pub fn ordering(&self) -> OrderingKind {
        self.ring.ordering().kind()
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[BasePoly] {
        &self.entries
    }

    /// The same family under another local ordering.
    pub fn with_ordering(&self, ordering: OrderingKind) -> Result<Self, FibreError> {
        let ring = PolyRing::<BaseCoeff>::new((), self.vars(), ordering)?;
        let entries = self.entries.iter().map(|e| e.to_ring(&ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(FamilySpec { base: self.base, ring, kind: self.kind, entries })
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Self, FibreError> {
        let (mut base, mut vars, mut ordering, mut kind) = (None, None, OrderingKind::Ds, None);
        let mut body: Vec<(usize, &str)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: FibreError| match e {
                FibreError::Format { msg, .. } => FibreError::Format { line: line_no, msg },
                other => FibreError::Format { line: line_no, msg: other.to_string() },
            };
            let Some((key, value)) = line.split_once(':') else {
                body.push((line_no, line));
                continue;
            };
            if !body.is_empty() {
                return Err(FibreError::Format { line: line_no, msg: "header after entries".into() });
            }
            let value = value.trim();
            match key.trim() {
                "base" => base = Some(value.parse::<BaseRing>().map_err(at)?),
                "vars" => vars = Some(value.split(',').map(|v| v.trim().to_string()).collect::<Vec<_>>()),
                "ordering" => {
                    ordering = value
                        .parse()
                        .map_err(|_| FibreError::Format { line: line_no, msg: format!("unknown ordering `{value}`") })?
                }
                "kind" => kind = Some(value.parse::<FamilyKind>().map_err(at)?),
                other => return Err(FibreError::Format { line: line_no, msg: format!("unknown header `{other}`") }),
            }
        }
        let missing = |what: &str| FibreError::Format { line: 0, msg: format!("missing `{what}` header") };
        let base = base.ok_or_else(|| missing("base"))?;
        let vars = vars.ok_or_else(|| missing("vars"))?;
        let kind = kind.ok_or_else(|| missing("kind"))?;
        let ring = PolyRing::<BaseCoeff>::new((), &vars, ordering)
            .map_err(|e| FibreError::Format { line: 0, msg: e.to_string() })?;
        let mut entries = Vec::with_capacity(body.len());
        for (line_no, line) in body {
            let e =
                parse_entry(base, &ring, line).map_err(|e| FibreError::Format { line: line_no, msg: e.to_string() })?;
            entries.push(e);
        }
        Self::new(base, kind, entries)
    }
}

impl fmt::Display for FamilySpec {
    /// The text format; parsing it back yields an equal family.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base)?;
        writeln!(f, "vars: {}", self.vars().join(", "))?;
        writeln!(f, "ordering: {}", self.ordering())?;
        writeln!(f, "kind: {}", self.kind)?;
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

fn parse_entry(base: BaseRing, ring: &Arc<PolyRing<BaseCoeff>>, text: &str) -> Result<BasePoly, FibreError> {
    if base == BaseRing::Integers {
        // `t` is not a coefficient symbol over ℤ
        let qring = PolyRing::<Rational>::new((), ring.vars(), ring.ordering().kind())?;
        let p = parse_polynomial(text, &qring)?;
        return Ok(p.map_coeffs(ring, |c| BaseCoeff::from_rational(&(), c))?);
    }
    Ok(parse_polynomial(text, ring)?)
}

fn canonical_mod_p(c: &BaseCoeff, p: u64) -> Result<BaseCoeff, crate::coeff::CoeffError> {
    let coeffs = c
        .numerator()
        .coeffs()
        .iter()
        .map(|a| reduce_mod_p(a, p).map(|r| Rational::from_integer(r.value().into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalFunction::from_poly(UniPoly::from_coeffs(&(), coeffs)))
}

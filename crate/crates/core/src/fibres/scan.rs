use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::coeff::{is_prime, primes_from, FieldDescriptor, Rational};
use crate::invariants::{full_report, tjurina_module_dimension, InvariantReport};
use crate::mora::MoraOptions;
use crate::Dimension;

use super::specialize::{fibre_dimension, on_fibre, specialize};
use super::{BaseRing, FamilyKind, FamilySpec, FibreError, FibrePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub mora: MoraOptions,
    /// Compute independent points on the rayon pool.
    pub parallel: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { mora: MoraOptions::default(), parallel: true }
    }
}

fn point_dimension(family: &FamilySpec, point: &FibrePoint, opts: &MoraOptions) -> Result<Dimension, FibreError> {
    let data = specialize(family, point)?;
    on_fibre!(&data, s => fibre_dimension(s, opts))
}

fn map_points<T: Send>(points: &[FibrePoint], parallel: bool, f: impl Fn(&FibrePoint) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        points.par_iter().map(f).collect()
    } else {
        points.iter().map(f).collect()
    }
}

/// Per-prime values of a family over ℤ compared with the generic fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularReport {
    pub generic: Dimension,
    /// Sampled primes with a computed value, in input order.
    pub values: Vec<(u64, Dimension)>,
    /// Primes where the fibre could not be computed, with the reason.
    pub bad: Vec<(u64, String)>,
    /// Primes whose value equals the generic one.
    pub lucky: Vec<u64>,
    /// Primes with a finite value below the generic one.
    pub violations: Vec<u64>,
}

/// Computes the fibre dimension at the generic point and at each prime.
pub fn modular_scan(family: &FamilySpec, primes: &[u64], opts: &ScanOptions) -> Result<ModularReport, FibreError> {
    if family.base() != BaseRing::Integers {
        return Err(FibreError::WrongBase("Z"));
    }
    if primes.is_empty() {
        return Err(FibreError::EmptyPrimeList);
    }
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(FibreError::NotPrime(p));
    }
    let mut sampled: Vec<u64> = Vec::with_capacity(primes.len());
    for &p in primes {
        if !sampled.contains(&p) {
            sampled.push(p);
        }
    }
    let generic = point_dimension(family, &FibrePoint::Generic, &opts.mora)?;
    let points: Vec<FibrePoint> = sampled.iter().map(|&p| FibrePoint::Prime(p)).collect();
    let results = map_points(&points, opts.parallel, |pt| point_dimension(family, pt, &opts.mora));

    let mut report =
        ModularReport { generic, values: Vec::new(), bad: Vec::new(), lucky: Vec::new(), violations: Vec::new() };
    for (p, r) in sampled.into_iter().zip(results) {
        match r {
            Ok(v) => {
                if v == generic {
                    report.lucky.push(p);
                }
                if v.is_finite() && v < generic {
                    report.violations.push(p);
                }
                report.values.push((p, v));
            }
            Err(e) => report.bad.push((p, e.to_string())),
        }
    }
    Ok(report)
}

fn outer_coefficients(family: &FamilySpec) -> Vec<Rational> {
    let mut out = Vec::new();
    for e in family.entries() {
        for t in [e.terms().first(), e.terms().last()].into_iter().flatten() {
            out.extend(t.coeff.numerator().coeffs().iter().filter(|c| !c.is_zero()).cloned());
        }
    }
    out
}

/// The first `count` primes dividing no numerator or denominator of a
/// first or last coefficient of any entry.
pub fn default_primes(family: &FamilySpec, count: usize) -> Vec<u64> {
    let ints: Vec<BigInt> =
        outer_coefficients(family).into_iter().flat_map(|c| [c.numer().abs(), c.denom().clone()]).collect();
    primes_from(2)
        .filter(|&p| {
            let bp = BigInt::from(p);
            ints.iter().all(|n| !n.is_multiple_of(&bp))
        })
        .take(count)
        .collect()
}

/// Generic point plus default closed points: ten primes over ℤ, or
/// `t = 1, …, 5` over k[t].
pub fn default_nearby(family: &FamilySpec) -> Vec<FibrePoint> {
    let mut out = vec![FibrePoint::Generic];
    match family.base() {
        BaseRing::Integers => out.extend(default_primes(family, 10).into_iter().map(FibrePoint::Prime)),
        BaseRing::Polynomials(_) => out.extend((1..=5).map(|c| FibrePoint::Value(Rational::from_integer(c.into())))),
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `d̂(q) ≤ d̂(special)`.
    Pass,
    /// A closed point above the special value; allowed, since it may lie
    /// outside the neighbourhood where the inequality holds.
    OutsideNeighbourhood,
    /// The generic point above the special value, which contradicts
    /// semicontinuity.
    Violation,
    /// The special value is infinite, so nothing is asserted.
    Vacuous,
    /// The fibre at this point could not be computed.
    Failed(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::OutsideNeighbourhood => "OUTSIDE",
            Verdict::Violation => "VIOLATION",
            Verdict::Vacuous => "VACUOUS",
            Verdict::Failed(_) => "FAILED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub point: FibrePoint,
    pub value: Option<Dimension>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicontinuityReport {
    pub special: FibrePoint,
    pub special_value: Dimension,
    pub comparisons: Vec<Comparison>,
}

impl SemicontinuityReport {
    pub fn violations(&self) -> usize {
        self.comparisons.iter().filter(|c| c.verdict == Verdict::Violation).count()
    }
}

/// Compares `d̂` at each nearby point with its value at `special`.
pub fn semicontinuity_check(
    family: &FamilySpec,
    special: &FibrePoint,
    nearby: &[FibrePoint],
    opts: &ScanOptions,
) -> Result<SemicontinuityReport, FibreError> {
    let special_value = point_dimension(family, special, &opts.mora)?;
    let values = map_points(nearby, opts.parallel, |pt| point_dimension(family, pt, &opts.mora));
    let comparisons = nearby
        .iter()
        .zip(values)
        .map(|(point, r)| {
            let (value, verdict) = match r {
                Err(e) => (None, Verdict::Failed(e.to_string())),
                Ok(v) if !special_value.is_finite() => (Some(v), Verdict::Vacuous),
                Ok(v) if v <= special_value => (Some(v), Verdict::Pass),
                Ok(v) if *point == FibrePoint::Generic => (Some(v), Verdict::Violation),
                Ok(v) => (Some(v), Verdict::OutsideNeighbourhood),
            };
            Comparison { point: point.clone(), value, verdict }
        })
        .collect();
    Ok(SemicontinuityReport { special: special.clone(), special_value, comparisons })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreReport {
    pub point: FibrePoint,
    pub fibre_field: Option<FieldDescriptor>,
    /// Dimension of the Tjurina module of the fibre.
    pub d_hat: Option<Dimension>,
    pub invariants: Option<InvariantReport>,
    /// Why a value is missing.
    pub note: Option<String>,
}

/// Full invariant reports of an ideal family at each point. Failures at a
/// point are recorded in its report rather than aborting the scan.
pub fn fibre_invariant_scan(
    family: &FamilySpec,
    points: &[FibrePoint],
    opts: &ScanOptions,
) -> Result<Vec<FibreReport>, FibreError> {
    if matches!(family.kind(), FamilyKind::Presentation { .. }) {
        return Err(FibreError::WrongKind("hypersurface or ideal"));
    }
    Ok(map_points(points, opts.parallel, |point| {
        let mut report =
            FibreReport { point: point.clone(), fibre_field: None, d_hat: None, invariants: None, note: None };
        let data = match specialize(family, point) {
            Ok(d) => d,
            Err(e) => {
                report.note = Some(e.to_string());
                return report;
            }
        };
        report.fibre_field = Some(data.field());
        on_fibre!(&data, s => {
            match tjurina_module_dimension(&s.entries) {
                Ok(d) => report.d_hat = Some(d),
                Err(e) => report.note = Some(e.to_string()),
            }
            match full_report(&s.entries) {
                Ok(r) => report.invariants = Some(r),
                Err(e) => report.note = Some(e.to_string()),
            }
        });
        report
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(base: &str, kind: &str, entries: &str) -> FamilySpec {
        // presentation examples live on the line, everything else in the plane
        let vars = if kind.starts_with("presentation") { "x" } else { "x, y" };
        FamilySpec::parse(&format!("base: {base}\nvars: {vars}\nkind: {kind}\n{entries}\n")).unwrap()
    }

    #[test]
    fn modular_scan_of_the_cusp_family() {
        let f = fam("Z", "hypersurface", "x^2 + x^3 + y^3");
        let r = modular_scan(&f, &[2, 3, 5, 7], &ScanOptions::default()).unwrap();
        assert_eq!(r.generic, Dimension::Finite(2));
        let want = vec![
            (2, Dimension::Finite(4)),
            (3, Dimension::Infinite),
            (5, Dimension::Finite(2)),
            (7, Dimension::Finite(2)),
        ];
        assert_eq!(r.values, want);
        assert_eq!(r.lucky, vec![5, 7]);
        assert!(r.violations.is_empty() && r.bad.is_empty());
        assert_eq!(modular_scan(&f, &[4], &ScanOptions::default()), Err(FibreError::NotPrime(4)));
        assert_eq!(modular_scan(&f, &[], &ScanOptions::default()), Err(FibreError::EmptyPrimeList));
    }

    #[test]
    fn bad_primes_are_listed() {
        let f = fam("Z", "ideal", "x/3 + y^2\ny");
        let r = modular_scan(&f, &[2, 3, 3], &ScanOptions::default()).unwrap();
        assert_eq!(r.values, vec![(2, Dimension::Finite(1))]);
        assert_eq!(r.bad.len(), 1);
        assert_eq!(r.bad[0].0, 3);
    }

    #[test]
    fn default_prime_choice() {
        let f = fam("Z", "presentation 1x1", "x - 5");
        assert_eq!(default_primes(&f, 4), vec![2, 3, 7, 11]);
        let g = fam("Z", "hypersurface", "6*x^2 + y^3/35");
        assert_eq!(default_primes(&g, 3), vec![11, 13, 17]);
    }

    #[test]
    fn semicontinuity_examples() {
        let kt = fam("Q[t]", "presentation 1x1", "t - x");
        let nearby = [FibrePoint::Generic, "t=1".parse().unwrap()];
        let r = semicontinuity_check(&kt, &"t=0".parse().unwrap(), &nearby, &ScanOptions::default()).unwrap();
        assert_eq!(r.special_value, Dimension::Finite(1));
        assert!(r.comparisons.iter().all(|c| c.verdict == Verdict::Pass));

        // the reverse direction puts closed points above a generic-like value
        let r = semicontinuity_check(&kt, &"t=1".parse().unwrap(), &["t=0".parse().unwrap()], &ScanOptions::default())
            .unwrap();
        assert_eq!(r.comparisons[0].verdict, Verdict::OutsideNeighbourhood);

        let z = fam("Z", "hypersurface", "x^2 + x^3 + y^3");
        let r =
            semicontinuity_check(&z, &FibrePoint::Prime(3), &[FibrePoint::Generic], &ScanOptions::default()).unwrap();
        assert_eq!(r.comparisons[0].verdict, Verdict::Vacuous);
        let r =
            semicontinuity_check(&z, &FibrePoint::Prime(2), &[FibrePoint::Generic], &ScanOptions::default()).unwrap();
        assert_eq!(r.comparisons[0].verdict, Verdict::Pass);
        assert_eq!(r.violations(), 0);
    }

    #[test]
    fn invariant_scan_reports_degenerate_fibres() {
        let f = fam("Q[t]", "ideal", "t*x");
        let pts = [FibrePoint::Generic, "t=0".parse().unwrap()];
        let r = fibre_invariant_scan(&f, &pts, &ScanOptions::default()).unwrap();
        // t is a unit generically, so the fibre there is smooth
        assert_eq!(r[0].d_hat, Some(Dimension::Finite(0)));
        assert!(r[0].invariants.is_some());
        assert_eq!(r[1].d_hat, Some(Dimension::Infinite));
        assert!(r[1].invariants.is_none());
        assert!(r[1].note.is_some());

        let ci = fam("Z", "ideal", "x^2 + y^3\nx*y");
        let pts = [FibrePoint::Generic, FibrePoint::Prime(2), FibrePoint::Prime(3)];
        let r = fibre_invariant_scan(&ci, &pts, &ScanOptions::default()).unwrap();
        let generic = r[0].d_hat.unwrap();
        for rep in &r {
            assert!(rep.invariants.as_ref().unwrap().is_ci);
            assert!(generic <= rep.d_hat.unwrap());
        }
    }
}

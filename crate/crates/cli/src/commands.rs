use std::sync::Arc;

use locinv::coeff::{Field, Fp, PrimeModulus, Rational, RationalFunction};
use locinv::fibres::{
    completed_fibre_dimension, default_nearby, default_primes, modular_scan, semicontinuity_check, specialize,
    BaseRing, FamilyKind, FamilySpec, FibrePoint, ScanOptions,
};
use locinv::invariants::{
    determinacy_bound, full_report, is_complete_intersection, milnor_number, quotient_dimension,
    quotient_krull_dimension, singular_locus_ideal, tjurina_module_dimension, tjurina_number, Warning,
};
use locinv::mora::StandardBasis;
use locinv::poly::{parse_polynomial, PolyRing, Polynomial};
use locinv::FieldDescriptor;
use serde_json::Value;

use crate::args::{Command, PolyInput};
use crate::error::CliError;
use crate::input::{check_single_source, load_family, load_germ, Germ};
use crate::output::{dim, plain, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GermOp {
    Milnor,
    Tjurina,
    Report,
    Determinacy,
    CiCheck,
    SingLocus,
    StdBasis,
    Dim,
}

impl GermOp {
    fn name(self) -> &'static str {
        match self {
            GermOp::Milnor => "milnor",
            GermOp::Tjurina => "tjurina",
            GermOp::Report => "report",
            GermOp::Determinacy => "determinacy",
            GermOp::CiCheck => "ci-check",
            GermOp::SingLocus => "sing-locus",
            GermOp::StdBasis => "std-basis",
            GermOp::Dim => "dim",
        }
    }
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Milnor(i) => germ(GermOp::Milnor, i),
        Command::Tjurina(i) => germ(GermOp::Tjurina, i),
        Command::Report(i) => germ(GermOp::Report, i),
        Command::Determinacy(i) => germ(GermOp::Determinacy, i),
        Command::CiCheck(i) => germ(GermOp::CiCheck, i),
        Command::SingLocus(i) => germ(GermOp::SingLocus, i),
        Command::StdBasis(i) => germ(GermOp::StdBasis, i),
        Command::Dim(i) => germ(GermOp::Dim, i),
        Command::FibreDim { family, point } => fibre_dim(&load_family(family)?, &family.display().to_string(), point),
        Command::ModularScan { input, family, primes } => {
            check_single_source(input, family.is_some())?;
            let (fam, source) = match family {
                Some(path) => (load_family(path)?, path.display().to_string()),
                None => integer_family(input)?,
            };
            scan(&fam, &source, primes.as_deref())
        }
        Command::SemicontCheck { family, special, nearby } => {
            semicont(&load_family(family)?, &family.display().to_string(), special, nearby.as_deref())
        }
    }
}

fn echo_germ(report: &mut Report, op: GermOp, g: &Germ) {
    report.input("subcommand", op.name());
    report.input("source", g.source.clone());
    report.input("vars", g.vars.clone());
    report.input("ordering", g.ordering.to_string());
    report.input("generators", g.gens.clone());
    report.field = Some(g.field.to_string());
}

fn germ(op: GermOp, input: &PolyInput) -> Result<Report, CliError> {
    let g = load_germ(input)?;
    let mut report = Report::default();
    echo_germ(&mut report, op, &g);
    match g.field {
        FieldDescriptor::Q => germ_in(op, PolyRing::<Rational>::new((), &g.vars, g.ordering)?, &g, &mut report)?,
        FieldDescriptor::Fp(p) => {
            germ_in(op, PolyRing::<Fp>::new(PrimeModulus::new(p)?, &g.vars, g.ordering)?, &g, &mut report)?
        }
        FieldDescriptor::Qt => {
            germ_in(op, PolyRing::<RationalFunction<Rational>>::new((), &g.vars, g.ordering)?, &g, &mut report)?
        }
        FieldDescriptor::Fpt(p) => germ_in(
            op,
            PolyRing::<RationalFunction<Fp>>::new(PrimeModulus::new(p)?, &g.vars, g.ordering)?,
            &g,
            &mut report,
        )?,
    }
    Ok(report)
}

fn single<F: Field>(op: GermOp, gens: &[Polynomial<F>]) -> Result<Polynomial<F>, CliError> {
    match gens {
        [f] => Ok(f.clone()),
        _ => Err(CliError::input(format!("{} takes exactly one polynomial, got {}", op.name(), gens.len()))),
    }
}

fn finite_field_warning(report: &mut Report, field: FieldDescriptor) {
    if field.is_finite() {
        report.warnings.push(Warning::FiniteFieldDeterminacy.to_string());
    }
}

fn germ_in<F: Field>(op: GermOp, ring: Arc<PolyRing<F>>, g: &Germ, report: &mut Report) -> Result<(), CliError> {
    let gens = g
        .gens
        .iter()
        .map(|s| parse_polynomial(s, &ring).map_err(|e| CliError::input(format!("`{s}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    match op {
        GermOp::Milnor => report.value("mu", dim(milnor_number(&single(op, &gens)?)?)),
        GermOp::Tjurina if gens.len() == 1 => report.value("tau", dim(tjurina_number(&gens[0])?)),
        GermOp::Tjurina => report.value("dim_T_I", dim(tjurina_module_dimension(&gens)?)),
        GermOp::Determinacy => {
            report.value("determinacy_bound", determinacy_bound(&gens)?);
            finite_field_warning(report, ring.descriptor());
        }
        GermOp::CiCheck => report.value("is_ci", is_complete_intersection(&gens)?),
        GermOp::SingLocus => {
            let locus: Vec<String> = singular_locus_ideal(&gens)?.iter().map(|p| p.to_string()).collect();
            report.text = Some(locus.iter().map(|s| format!("{s}\n")).collect());
            report.value("generators", locus);
        }
        GermOp::StdBasis => {
            let sb = StandardBasis::of_ideal(&gens)?;
            let basis: Vec<String> = sb.elements().iter().map(|e| e.to_string()).collect();
            let one = F::one(ring.ctx());
            let leading: Vec<String> = sb
                .leading_module()
                .component(0)
                .iter()
                .map(|e| Polynomial::monomial(&ring, e.clone(), one.clone()).to_string())
                .collect();
            report.text = Some(basis.iter().map(|s| format!("{s}\n")).collect());
            report.value("basis", basis);
            report.value("leading_ideal", leading);
        }
        GermOp::Dim => {
            report.value("vector_space_dimension", dim(quotient_dimension(&gens)?));
            report.value("krull_dimension", quotient_krull_dimension(&gens)?);
        }
        GermOp::Report => {
            let r = full_report(&gens)?;
            report.value("n", r.n);
            report.value("m", r.m);
            report.value("mu", r.mu.map_or(Value::Null, dim));
            report.value("tau", r.tau.map_or(Value::Null, dim));
            report.value("dim_T_I", dim(r.dim_t));
            report.value("ord", r.ord);
            report.value("determinacy_bound", r.determinacy_bound.map_or(Value::Null, Value::from));
            report.flag("is_ci", r.is_ci);
            report.flag("isolated", r.isolated);
            report.warnings = r.warnings.iter().map(|w| w.to_string()).collect();
            let mut text = String::new();
            for k in ["n", "m", "mu", "tau", "dim_T_I", "ord", "determinacy_bound"] {
                text.push_str(&format!("{k}: {}\n", plain(&report.values[k])));
            }
            for k in ["is_ci", "isolated"] {
                text.push_str(&format!("{k}: {}\n", plain(&report.flags[k])));
            }
            report.text = Some(text);
        }
    }
    Ok(())
}

/// Inline or file generators read as a family over ℤ.
fn integer_family(input: &PolyInput) -> Result<(FamilySpec, String), CliError> {
    let g = load_germ(input)?;
    if g.field != FieldDescriptor::Q {
        return Err(CliError::input("modular-scan works over Z; omit --field"));
    }
    let kind = if g.gens.len() == 1 { FamilyKind::Hypersurface } else { FamilyKind::Ideal };
    let fam = FamilySpec::from_strings(BaseRing::Integers, &g.vars, g.ordering, kind, &g.gens)?;
    Ok((fam, g.source))
}

fn echo_family(report: &mut Report, subcommand: &str, fam: &FamilySpec, source: &str) {
    report.input("subcommand", subcommand);
    report.input("source", source);
    report.input("base", fam.base().to_string());
    report.input("vars", fam.vars().to_vec());
    report.input("ordering", fam.ordering().to_string());
    report.input("kind", fam.kind().to_string());
    report.input("entries", fam.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>());
}

fn fibre_dim(fam: &FamilySpec, source: &str, point: &FibrePoint) -> Result<Report, CliError> {
    let mut report = Report::default();
    echo_family(&mut report, "fibre-dim", fam, source);
    report.input("point", point.to_string());
    report.field = Some(specialize(fam, point)?.field().to_string());
    report.value("d_hat", dim(completed_fibre_dimension(fam, point)?));
    Ok(report)
}

fn pad(cells: &[String], widths: &[usize]) -> String {
    let line: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
    format!("{}\n", line.join("  ").trim_end())
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = pad(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>(), &widths);
    for r in rows {
        out.push_str(&pad(r, &widths));
    }
    out
}

fn list(xs: &[u64]) -> String {
    if xs.is_empty() {
        return "none".to_string();
    }
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

fn scan(fam: &FamilySpec, source: &str, primes: Option<&[u64]>) -> Result<Report, CliError> {
    let primes = match primes {
        Some(p) => p.to_vec(),
        None => default_primes(fam, 10),
    };
    let r = modular_scan(fam, &primes, &ScanOptions::default())?;
    let mut report = Report::default();
    echo_family(&mut report, "modular-scan", fam, source);
    report.input("primes", primes);
    report.field = Some("Z".to_string());
    report.value("generic", dim(r.generic));
    let rows: Vec<Value> = r
        .values
        .iter()
        .map(|(p, v)| serde_json::json!({ "p": p, "value": dim(*v), "lucky": r.lucky.contains(p) }))
        .collect();
    report.value("primes", rows);
    report.value("lucky", r.lucky.clone());
    let bad: Vec<Value> = r.bad.iter().map(|(p, why)| serde_json::json!({ "p": p, "error": why })).collect();
    report.value("failed", bad);
    report.flag("violations", r.violations.clone());

    let mut text = format!("generic: {}\n", r.generic);
    let rows: Vec<Vec<String>> = r
        .values
        .iter()
        .map(|(p, v)| vec![p.to_string(), v.to_string(), if r.lucky.contains(p) { "yes" } else { "no" }.to_string()])
        .collect();
    text.push_str(&table(&["prime", "value", "lucky"], &rows));
    for (p, why) in &r.bad {
        text.push_str(&format!("failed at {p}: {why}\n"));
    }
    text.push_str(&format!("lucky: {}\n", list(&r.lucky)));
    text.push_str(&format!("violations: {}\n", list(&r.violations)));
    report.text = Some(text);
    Ok(report)
}

fn semicont(
    fam: &FamilySpec,
    source: &str,
    special: &FibrePoint,
    nearby: Option<&[FibrePoint]>,
) -> Result<Report, CliError> {
    let nearby = match nearby {
        Some(n) => n.to_vec(),
        None => default_nearby(fam),
    };
    let r = semicontinuity_check(fam, special, &nearby, &ScanOptions::default())?;
    let mut report = Report::default();
    echo_family(&mut report, "semicont-check", fam, source);
    report.input("special", special.to_string());
    report.input("nearby", nearby.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    report.field = Some(fam.base().to_string());
    report.value("special_value", dim(r.special_value));
    let rows: Vec<Value> = r
        .comparisons
        .iter()
        .map(|c| {
            let mut row = serde_json::json!({
                "point": c.point.to_string(),
                "value": c.value.map_or(Value::Null, dim),
                "verdict": c.verdict.label(),
            });
            if let locinv::fibres::Verdict::Failed(why) = &c.verdict {
                row["error"] = Value::from(why.clone());
            }
            row
        })
        .collect();
    report.value("comparisons", rows);
    report.flag("violations", r.violations());

    let mut text = format!("special {}: {}\n", special, r.special_value);
    let rows: Vec<Vec<String>> = r
        .comparisons
        .iter()
        .map(|c| {
            let value = c.value.map_or("n/a".to_string(), |v| v.to_string());
            vec![c.point.to_string(), value, c.verdict.label().to_string()]
        })
        .collect();
    text.push_str(&table(&["point", "value", "verdict"], &rows));
    text.push_str(&format!("violations: {}\n", r.violations()));
    report.text = Some(text);
    Ok(report)
}

#![allow(dead_code)]

use std::sync::Arc;

use locinv::coeff::{Field, Fp, PrimeModulus, Rational};
use locinv::poly::{parse_polynomial, ExponentVector, OrderingKind, PolyRing, Polynomial};
use proptest::prelude::*;

pub const VARS: [&str; 3] = ["x", "y", "z"];

/// Sparse term list: exponents and a small integer coefficient.
pub type RawPoly = Vec<(Vec<u32>, i64)>;

pub fn qring(n: usize, kind: OrderingKind) -> Arc<PolyRing<Rational>> {
    PolyRing::new((), &VARS[..n], kind).unwrap()
}

pub fn fpring(p: u64, n: usize, kind: OrderingKind) -> Arc<PolyRing<Fp>> {
    PolyRing::new(PrimeModulus::new(p).unwrap(), &VARS[..n], kind).unwrap()
}

pub fn build<F: Field>(ring: &Arc<PolyRing<F>>, raw: &[(Vec<u32>, i64)]) -> Polynomial<F> {
    let ctx = ring.ctx();
    Polynomial::from_terms(
        ring,
        raw.iter().map(|(e, c)| (ExponentVector::new(e.iter().copied()), F::from_i64(ctx, *c))),
    )
}

pub fn parse<F: Field>(ring: &Arc<PolyRing<F>>, s: &str) -> Polynomial<F> {
    parse_polynomial(s, ring).unwrap()
}

/// Terms with total degree in `min_deg..=max_deg`.
pub fn arb_raw(n: usize, min_deg: u32, max_deg: u32, max_terms: usize, coeff: i64) -> impl Strategy<Value = RawPoly> {
    let term = (prop::collection::vec(0..=max_deg, n), (-coeff..=coeff).prop_filter("nonzero", |c| *c != 0));
    prop::collection::vec(term, 1..=max_terms).prop_map(move |ts| {
        ts.into_iter()
            .filter(|(e, _)| {
                let d: u32 = e.iter().sum();
                d >= min_deg && d <= max_deg
            })
            .collect()
    })
}

/// `x^a + y^b (+ z^c)` plus random higher terms: always an isolated singularity
/// in characteristic zero when the random part has high enough weight.
pub fn arb_isolated(n: usize) -> impl Strategy<Value = RawPoly> {
    let powers = prop::collection::vec(2u32..=5, n);
    (powers, arb_raw(n, 2, 5, 3, 3)).prop_map(move |(pw, extra)| {
        let mut raw: RawPoly = pw
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut e = vec![0; n];
                e[i] = a;
                (e, 1)
            })
            .collect();
        // keep only terms above the Newton diagonal so the pure powers dominate
        raw.extend(
            extra.into_iter().filter(|(e, _)| e.iter().zip(&pw).map(|(&k, &a)| k as f64 / a as f64).sum::<f64>() > 1.0),
        );
        raw
    })
}

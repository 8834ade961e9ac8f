mod common;

use common::*;
use locinv::coeff::{Field, Rational, RationalFunction, UniPoly};
use locinv::poly::{determinant, minors, OrderingKind, PolyMatrix, PolyRing, Polynomial};
use proptest::prelude::*;

/// Laplace expansion along the first row, written independently of the
/// library's determinant.
fn laplace(m: &[Vec<Polynomial<Rational>>], ring: &std::sync::Arc<PolyRing<Rational>>) -> Polynomial<Rational> {
    if m.is_empty() {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for c in 0..m.len() {
        let sub: Vec<Vec<_>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &laplace(&sub, ring);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(arb_raw(2, 0, 2, 2, 3), rows * cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip_q(raw in arb_raw(3, 0, 4, 6, 20), den in 1i64..7) {
        for kind in [OrderingKind::Ds, OrderingKind::Ls] {
            let r = qring(3, kind);
            let f = build(&r, &raw).scale(&Rational::new(1.into(), den.into()));
            prop_assert_eq!(parse(&r, &f.to_string()), f);
        }
    }

    #[test]
    fn print_parse_round_trip_fp(raw in arb_raw(2, 0, 5, 6, 100)) {
        let r = fpring(31, 2, OrderingKind::Ds);
        let f = build(&r, &raw);
        prop_assert_eq!(parse(&r, &f.to_string()), f);
    }

    #[test]
    fn print_parse_round_trip_qt(raw in arb_raw(2, 0, 3, 4, 5), num in prop::collection::vec(-3i64..4, 1..3), den in prop::collection::vec(-3i64..4, 1..3)) {
        let r = PolyRing::<RationalFunction<Rational>>::new((), &["x", "y"], OrderingKind::Ds).unwrap();
        let up = |c: &[i64]| UniPoly::from_coeffs(&(), c.iter().map(|&a| Rational::from_i64(&(), a)).collect());
        prop_assume!(!up(&den).is_zero());
        let c = RationalFunction::new(up(&num), up(&den)).unwrap();
        let f = &build(&r, &raw).scale(&c) + &Polynomial::constant(&r, c.clone());
        prop_assert_eq!(parse(&r, &f.to_string()), f);
    }

    #[test]
    fn leibniz(a in arb_raw(3, 0, 4, 5, 5), b in arb_raw(3, 0, 4, 5, 5), i in 0usize..3) {
        let r = qring(3, OrderingKind::Ds);
        let (f, g) = (build(&r, &a), build(&r, &b));
        let lhs = (&f * &g).derivative(i).unwrap();
        let rhs = &(&f * &g.derivative(i).unwrap()) + &(&g * &f.derivative(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_axioms(a in arb_raw(2, 0, 3, 4, 5), b in arb_raw(2, 0, 3, 4, 5), c in arb_raw(2, 0, 3, 4, 5)) {
        let r = qring(2, OrderingKind::Ls);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn determinants_match_laplace(raw in arb_matrix(4, 4)) {
        let r = qring(2, OrderingKind::Ds);
        let entries: Vec<_> = raw.iter().map(|t| build(&r, t)).collect();
        for n in 1..=4 {
            let m: Vec<Vec<_>> = (0..n).map(|i| entries[i * 4..i * 4 + n].to_vec()).collect();
            prop_assert_eq!(determinant(&r, m.clone()).unwrap(), laplace(&m, &r));
        }
    }

    #[test]
    fn minors_match_laplace(raw in arb_matrix(3, 4)) {
        let r = qring(2, OrderingKind::Ds);
        let entries: Vec<_> = raw.iter().map(|t| build(&r, t)).collect();
        let rows: Vec<Vec<_>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        let m = PolyMatrix::from_rows(&r, rows.clone()).unwrap();
        let got = minors(&m, 2).unwrap();
        let mut want = Vec::new();
        for (r0, r1) in [(0, 1), (0, 2), (1, 2)] {
            for c0 in 0..4 {
                for c1 in c0 + 1..4 {
                    let sub = vec![vec![rows[r0][c0].clone(), rows[r0][c1].clone()], vec![rows[r1][c0].clone(), rows[r1][c1].clone()]];
                    want.push(laplace(&sub, &r));
                }
            }
        }
        prop_assert_eq!(got, want);
    }
}

#[test]
fn finite_field_derivative_vanishes() {
    let r = fpring(3, 2, OrderingKind::Ds);
    let f = parse(&r, "x^2 + x^3 + y^3");
    assert!(f.derivative(1).unwrap().is_zero());
    assert_eq!(f.derivative(0).unwrap(), parse(&r, "2*x"));
}

mod common;

use common::*;
use locinv::coeff::{Field, Rational};
use locinv::invariants::{
    determinacy_bound, has_isolated_singularity, jacobian_ideal, milnor_number, mu_equals_tau, order_of_ideal,
    tjurina_module_dimension, tjurina_number,
};
use locinv::mora::{truncated_dimension_oracle, OracleOutcome};
use locinv::poly::{FreeModuleVector, OrderingKind, Polynomial};
use locinv::Dimension;
use proptest::prelude::*;

fn oracle_dim(gens: &[Polynomial<Rational>]) -> Option<u64> {
    let v: Vec<_> = gens.iter().filter(|g| !g.is_zero()).map(|g| FreeModuleVector::from_poly(g, 0, 1)).collect();
    (1..=14).find_map(|d| match truncated_dimension_oracle(&v, d).unwrap() {
        OracleOutcome::Finite(x) => Some(x),
        OracleOutcome::Unstable => None,
    })
}

#[test]
fn oracle_backed_examples() {
    let r = qring(2, OrderingKind::Ds);
    let f = parse(&r, "x^3 + y^5");
    assert_eq!(oracle_dim(&jacobian_ideal(&f)), Some(8));
    assert_eq!(milnor_number(&f), Ok(Dimension::Finite(8)));

    let cusp = parse(&r, "x^3 + y^2");
    let mut t = vec![cusp.clone()];
    t.extend(jacobian_ideal(&cusp));
    assert_eq!(oracle_dim(&t), Some(2));
    assert_eq!(tjurina_number(&cusp), Ok(Dimension::Finite(2)));
    assert_eq!(determinacy_bound(std::slice::from_ref(&cusp)), Ok(2 * 2 - 2 + 2));
    assert_eq!(has_isolated_singularity(&[cusp]), Ok(true));

    let f2 = fpring(2, 2, OrderingKind::Ds);
    let g = parse(&f2, "x^2 + x^3 + y^3");
    let tau = tjurina_number(&g).unwrap();
    assert!(tau <= Dimension::Finite(4));
    assert_eq!(tau, Dimension::Finite(4));
}

/// `x ↦ a x + b y`, `y ↦ c x + d y`.
fn substitute(f: &Polynomial<Rational>, m: [i64; 4]) -> Polynomial<Rational> {
    let r = f.ring();
    let (x, y) = (Polynomial::var(r, 0), Polynomial::var(r, 1));
    let c = |k: i64| Rational::from_i64(&(), k);
    let img = |a: i64, b: i64| &x.scale(&c(a)) + &y.scale(&c(b));
    f.substitute(&[img(m[0], m[1]), img(m[2], m[3])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tau_at_most_mu(raw in arb_raw(2, 2, 5, 4, 5), p in prop::sample::select(vec![0u64, 2, 3, 5, 7])) {
        let (mu, tau, eq) = if p == 0 {
            let f = build(&qring(2, OrderingKind::Ds), &raw);
            (milnor_number(&f).unwrap(), tjurina_number(&f).unwrap(), mu_equals_tau(&f).unwrap())
        } else {
            let f = build(&fpring(p, 2, OrderingKind::Ds), &raw);
            (milnor_number(&f).unwrap(), tjurina_number(&f).unwrap(), mu_equals_tau(&f).unwrap())
        };
        if mu.is_finite() {
            prop_assert!(tau <= mu);
            prop_assert_eq!(eq, mu == tau);
        }
        if p == 0 {
            prop_assert_eq!(mu.is_finite(), tau.is_finite());
        }
    }

    #[test]
    fn tjurina_module_of_a_hypersurface(raw in arb_raw(3, 2, 4, 4, 4)) {
        let f = build(&qring(3, OrderingKind::Ds), &raw);
        prop_assume!(!f.is_zero());
        prop_assert_eq!(tjurina_module_dimension(std::slice::from_ref(&f)).unwrap(), tjurina_number(&f).unwrap());
    }

    #[test]
    fn linear_coordinate_change(raw in arb_isolated(2), m in prop::array::uniform4(-2i64..=2)) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let f = build(&qring(2, OrderingKind::Ds), &raw);
        let g = substitute(&f, m);
        prop_assert_eq!(milnor_number(&f).unwrap(), milnor_number(&g).unwrap());
        prop_assert_eq!(tjurina_number(&f).unwrap(), tjurina_number(&g).unwrap());
        prop_assert_eq!(order_of_ideal(&[f]).unwrap(), order_of_ideal(&[g]).unwrap());
    }

    #[test]
    fn perturbation_above_the_determinacy_bound(raw in arb_isolated(2), extra in prop::collection::vec((0u32..=3, -3i64..=3), 5)) {
        let r = qring(2, OrderingKind::Ds);
        let f = build(&r, &raw);
        let b = determinacy_bound(std::slice::from_ref(&f)).unwrap() as u32;
        let mut g = f.clone();
        for (k, (i, c)) in extra.into_iter().enumerate() {
            // degree b + 1 + i, split between x and y by the term index
            let d = b + 1 + i;
            let a = (k as u32 * 7) % (d + 1);
            g = &g + &build(&r, &[(vec![a, d - a], c)]);
        }
        prop_assert_eq!(milnor_number(&f).unwrap(), milnor_number(&g).unwrap());
        prop_assert_eq!(tjurina_number(&f).unwrap(), tjurina_number(&g).unwrap());
    }
}

//! Randomized property tests for the algebra layer: ring axioms, text
//! round-trips, substitution homomorphy, calculus identities, monomial
//! lattice laws, order axioms, and division/Gröbner invariants.

use num_traits::Zero;
use proptest::prelude::*;
use rees_core::curve::derive_params;
use rees_core::field::rat;
use rees_core::groebner::{buchberger, divide, IdealPresentation, Limits, Strategy};
use rees_core::order::{leading_monomial, OrderSpec};
use rees_core::rees::build_ambient;
use rees_core::ring::{Monomial, QPoly, RingContext};
use rees_core::text::{parse_polynomial, render_polynomial};
use std::sync::Arc;

fn ctx4() -> Arc<RingContext> {
    RingContext::new(&[("X1", 5), ("X2", 6), ("X3", 7), ("X0", 4)])
}

prop_compose! {
    fn arb_monomial(nvars: usize)(exps in prop::collection::vec(0u32..5, nvars)) -> Vec<u32> {
        exps
    }
}

prop_compose! {
    fn arb_poly()(
        terms in prop::collection::vec((arb_monomial(4), -20i64..=20), 0..6)
    ) -> QPoly {
        let ctx = ctx4();
        let mut acc = QPoly::zero(&ctx);
        for (exps, c) in terms {
            let mono = Monomial::from_exps(exps);
            let term = QPoly::monomial(&ctx, mono, rat(c, 1));
            acc = &acc + &term;
        }
        acc
    }
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(
        f in arb_poly(), g in arb_poly(), h in arb_poly()
    ) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn additive_inverse_and_units(f in arb_poly()) {
        let ctx = f.ctx().clone();
        prop_assert!((&f + &(-&f)).is_zero());
        prop_assert_eq!(&f * &QPoly::from_i64(&ctx, 1), f.clone());
        prop_assert!((&f * &QPoly::zero(&ctx)).is_zero());
    }

    #[test]
    fn text_roundtrip_is_identity(f in arb_poly()) {
        let text = render_polynomial(&f, |a, b| a.exps().cmp(b.exps()));
        let back = parse_polynomial(f.ctx(), &text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(f in arb_poly(), g in arb_poly()) {
        // Substitute X_i ↦ small polynomials of a different ring.
        let target = RingContext::new(&[("u", 1), ("v", 1)]);
        let u = QPoly::var(&target, "u").unwrap();
        let v = QPoly::var(&target, "v").unwrap();
        let mut map = std::collections::BTreeMap::new();
        map.insert("X1".to_string(), &u + &v);
        map.insert("X2".to_string(), &u * &v);
        map.insert("X3".to_string(), QPoly::from_i64(&target, 2));
        map.insert("X0".to_string(), v.clone());
        let sf = f.substitute(&map).unwrap();
        let sg = g.substitute(&map).unwrap();
        let sum = (&f + &g).substitute(&map).unwrap();
        let prod = (&f * &g).substitute(&map).unwrap();
        prop_assert_eq!(sum, &sf + &sg);
        prop_assert_eq!(prod, &sf * &sg);
    }

    #[test]
    fn derivative_satisfies_the_product_rule(f in arb_poly(), g in arb_poly()) {
        for var in ["X1", "X0"] {
            let lhs = (&f * &g).partial_derivative(var).unwrap();
            let rhs = &(&f.partial_derivative(var).unwrap() * &g)
                + &(&f * &g.partial_derivative(var).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn monomial_lattice_laws(a in arb_monomial(4), b in arb_monomial(4)) {
        let ma = Monomial::from_exps(a);
        let mb = Monomial::from_exps(b);
        let l = ma.lcm(&mb);
        let g = ma.gcd(&mb);
        prop_assert!(ma.divides(&l) && mb.divides(&l));
        prop_assert!(g.divides(&ma) && g.divides(&mb));
        // lcm · gcd = product, exponentwise.
        prop_assert_eq!(l.mul(&g), ma.mul(&mb));
        // Division is exact exactly when divisibility holds.
        prop_assert_eq!(l.div(&ma).is_some(), true);
        prop_assert_eq!(ma.div(&l).is_some(), ma == l);
    }

    #[test]
    fn leading_monomial_is_multiplicative(f in arb_poly(), g in arb_poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let order = OrderSpec::weighted_revlex(&ctx4(), &["X1", "X2", "X3", "X0"]);
        let lf = leading_monomial(&f, &order).unwrap();
        let lg = leading_monomial(&g, &order).unwrap();
        let lfg = leading_monomial(&(&f * &g), &order).unwrap();
        prop_assert_eq!(lfg, lf.mul(&lg));
    }

    #[test]
    fn division_recombines_exactly(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let order = OrderSpec::weighted_revlex(&ctx4(), &["X1", "X2", "X3", "X0"]);
        let divisors = vec![g.clone(), h.clone()];
        let out = divide(&f, &divisors, &order, &Limits::default()).unwrap();
        let mut recombined = out.remainder.clone();
        for (q, d) in out.quotients.iter().zip(&divisors) {
            recombined = &recombined + &(q * d);
        }
        prop_assert_eq!(recombined, f);
    }

    #[test]
    fn rational_coefficients_stay_reduced(n in -500i64..=500, d in 1i64..=500) {
        let c = rat(n, d);
        // Value identity: c · d = n.
        prop_assert_eq!(&c * &rat(d, 1), rat(n, 1));
        if n == 0 {
            prop_assert!(c.is_zero());
        } else {
            // Canonical form: positive denominator, coprime parts.
            prop_assert!(c.denom() > &num_bigint::BigInt::from(0));
            let g = num_integer::gcd(c.numer().clone(), c.denom().clone());
            prop_assert_eq!(g, num_bigint::BigInt::from(1));
        }
    }
}

/// Gröbner bases from shuffled generators agree after reduction — the
/// canonical-form property on a small random-ish family.
#[test]
fn reduced_basis_is_canonical_under_input_shuffles() {
    let params = derive_params(6, 1).unwrap();
    let rees = build_ambient(&params);
    let gens: Vec<QPoly> = rees
        .rees_generators()
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let limits = Limits::default();
    let mut canonical: Option<Vec<QPoly>> = None;
    for rotation in 0..gens.len() {
        let mut shuffled = gens.clone();
        shuffled.rotate_left(rotation);
        let pres = IdealPresentation::new(shuffled, rees.order_s.clone()).unwrap();
        let gb = buchberger(&pres, Strategy::Normal, &limits).unwrap();
        let reduced =
            rees_core::groebner::minimalize_and_reduce(&gb, &rees.order_s, &limits).unwrap();
        match &canonical {
            None => canonical = Some(reduced),
            Some(expect) => assert_eq!(&reduced, expect, "rotation {rotation} diverged"),
        }
    }
}

/// The two engine strategies compute the same canonical reduced basis.
#[test]
fn strategies_agree_on_the_canonical_basis() {
    let params = derive_params(5, 1).unwrap();
    let rees = build_ambient(&params);
    let gens: Vec<QPoly> = rees
        .q_generators()
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let limits = Limits::default();
    let pres = IdealPresentation::new(gens, rees.order_s.clone()).unwrap();
    let mut bases = Vec::new();
    for strategy in [Strategy::Normal, Strategy::Sugar] {
        let gb = buchberger(&pres, strategy, &limits).unwrap();
        bases.push(rees_core::groebner::minimalize_and_reduce(&gb, &rees.order_s, &limits).unwrap());
    }
    assert_eq!(bases[0], bases[1]);
}

/// Exceeding the step budget surfaces as a structured resource error.
#[test]
fn tiny_budgets_fail_loudly() {
    let params = derive_params(4, 1).unwrap();
    let rees = build_ambient(&params);
    let gens: Vec<QPoly> = rees
        .rees_generators()
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let pres = IdealPresentation::new(gens, rees.order_s.clone()).unwrap();
    let err = buchberger(&pres, Strategy::Normal, &Limits::with_max_steps(5)).unwrap_err();
    assert!(matches!(
        err,
        rees_core::groebner::GroebnerError::ResourceLimit { .. }
    ));
}

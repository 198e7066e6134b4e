mod common;

use gainv::{rat, Error, Monomial, MultiDegree, Polynomial, VariableSet, WeightSystem};
use proptest::prelude::*;
use std::sync::Arc;

fn ring() -> Arc<VariableSet> {
    VariableSet::new(&["a", "b", "c"]).unwrap()
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(|terms| {
        let r = ring();
        Polynomial::from_terms(
            &r,
            terms.into_iter().map(|((x, y, z), c)| (Monomial::from_exponents([x, y, z]), rat(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(f.ring()), f.clone());
    }

    #[test]
    fn leading_monomial_is_multiplicative(f in arb_poly(), g in arb_poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let p = &f * &g;
        prop_assert_eq!(p.leading_monomial().unwrap(), &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap()));
    }

    #[test]
    fn text_round_trip(f in arb_poly()) {
        let back = Polynomial::parse(f.ring(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn lex_order_puts_last_variable_first() {
    let r = ring();
    let f = Polynomial::parse(&r, "a^5 + c + b^2").unwrap();
    assert_eq!(f.to_string(), "c + b^2 + a^5");
}

#[test]
fn parse_rejects_unknown_variables() {
    let r = ring();
    assert!(matches!(Polynomial::parse(&r, "a + w"), Err(Error::Parse { pos: 4, .. })));
    assert!(matches!(Polynomial::parse(&r, "a +"), Err(Error::Parse { .. })));
}

#[test]
fn ring_mismatch_is_an_error() {
    let f = Polynomial::parse(&ring(), "a").unwrap();
    let other = VariableSet::new(&["a", "b"]).unwrap();
    let g = Polynomial::parse(&other, "a").unwrap();
    assert_eq!(f.try_add(&g), Err(Error::RingMismatch));
}

#[test]
fn monomial_basis_of_weighted_piece() {
    let r = ring();
    let w = WeightSystem::new(&r, vec![vec![1], vec![2], vec![3]]).unwrap();
    let basis = w.monomial_basis(&MultiDegree(vec![4]), None).unwrap();
    // a^4, a^2 b, b^2, a c
    assert_eq!(basis.len(), 4);
    for m in &basis {
        assert_eq!(w.degree_of(m), MultiDegree(vec![4]));
    }
}

#[test]
fn evaluation_and_substitution_agree() {
    let r = ring();
    let f = Polynomial::parse(&r, "a^2*b - 3/2*c + 1").unwrap();
    let images = [
        Polynomial::parse(&r, "2").unwrap(),
        Polynomial::parse(&r, "-1").unwrap(),
        Polynomial::parse(&r, "4").unwrap(),
    ];
    let sub = f.substitute(&images).unwrap();
    assert_eq!(sub.as_constant().unwrap(), f.evaluate(&[rat(2), rat(-1), rat(4)]).unwrap());
    assert_eq!(sub.as_constant().unwrap(), rat(-9));
}

mod common;

use gainv::casebook::{self, classify, example1_membership, quadric_ring, ConductorCase};
use gainv::{rat, Monomial, Polynomial};
use proptest::prelude::*;

fn arb_r_element() -> impl Strategy<Value = Polynomial> {
    (-4i64..=4, proptest::collection::vec(((1u32..4, 0u32..4), -4i64..=4), 0..5)).prop_map(|(c, terms)| {
        let ring = casebook::example1_ring();
        let mut f = Polynomial::constant(ring, rat(c));
        for ((a, b), k) in terms {
            f = &f + &Polynomial::monomial(ring, Monomial::from_exponents([a, b]), rat(k));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subring_is_closed(f in arb_r_element(), g in arb_r_element()) {
        prop_assert!(example1_membership(&f) && example1_membership(&g));
        prop_assert!(example1_membership(&(&f + &g)));
        prop_assert!(example1_membership(&(&f * &g)));
    }
}

fn ex1(text: &str) -> Polynomial {
    Polynomial::parse(casebook::example1_ring(), text).unwrap()
}

#[test]
fn classification() {
    assert_eq!(classify(&ex1("x*y + x")), ConductorCase::M0);
    assert_eq!(classify(&ex1("3 + x*y^2")), ConductorCase::RMinusM0);
    assert_eq!(classify(&ex1("y")), ConductorCase::NotInR);
    assert!(!example1_membership(&ex1("y^2 + x")));
}

#[test]
fn conductor_first_two_cases_hold() {
    for f in ["x", "x*y + x^2", "1 + x*y", "2 - x*y^3"] {
        let (case, claimed, actual) = casebook::example1_conductor_check(&ex1(f), 6).unwrap();
        assert_ne!(case, ConductorCase::NotInR);
        assert_eq!(claimed, actual, "{f}");
    }
}

#[test]
fn conductor_third_case_needs_the_full_polynomial_ring() {
    let (case, claimed, actual) = casebook::example1_conductor_check(&ex1("y"), 6).unwrap();
    assert_eq!(case, ConductorCase::NotInR);
    assert_eq!((claimed, actual), (16, 21));
    for f in ["y", "1 + y", "y^2 + x*y"] {
        let (corrected, actual) = casebook::example1_corrected_dim(&ex1(f), 6);
        assert_eq!(corrected, actual, "{f}");
    }
    let (w, w_in_r, cofactor_in_r) = casebook::example1_case3_witness();
    assert_eq!(w.to_string(), "x*y^2");
    assert!(w_in_r && !cofactor_in_r);
    assert!(!casebook::example1_conductor_report(6).passed());
}

#[test]
fn example1_membership_and_separation() {
    assert!(casebook::example1_membership_report().passed());
    assert!(casebook::example1_phi_separation(100, 6, 2).passed());
}

#[test]
fn quadric_normal_forms() {
    let run = common::quadric_normal_form_suite(400, 41);
    assert!(run.failures.is_empty(), "{:?}", run.failures);
    let q = quadric_ring();
    assert!(q.reduce(q.quadric()).unwrap().is_zero());
    assert_eq!(q.reduce(&q.parse("y^3").unwrap()).unwrap(), q.parse("y + x*z + x*y*z").unwrap());
}

#[test]
fn weyl_involution_commutes_with_the_flow() {
    let q = quadric_ring();
    let d = q.derivation();
    for v in ["x", "y", "z", "x*y - z^2"] {
        let f = q.parse(v).unwrap();
        let lhs = q.sigma(&d.flow_at(&rat(3), &f).unwrap()).unwrap();
        let rhs = d.flow_at(&rat(3), &q.sigma(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "{v}");
    }
    let d_sigma = q.sigma(&d.apply(&q.parse("y").unwrap()).unwrap()).unwrap();
    assert_eq!(d_sigma, q.parse("-z").unwrap());
}

#[test]
fn quadric_invariants_are_polynomials_in_z() {
    let q = quadric_ring();
    let inv = q.invariants_up_to(5).unwrap();
    assert_eq!(inv.len(), 6);
    for f in &inv {
        assert!(f.terms().iter().all(|(m, _)| m.exponent(0) == 0 && m.exponent(1) == 0), "{f}");
    }
}

#[test]
fn casebook_reports_fail_only_on_the_conductor() {
    for r in casebook::casebook_reports(5, 100, 3) {
        assert_eq!(r.passed(), r.id != "example1-conductor", "{}: {:?}", r.id, r.details);
    }
}

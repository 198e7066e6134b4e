mod common;

use gainv::derivation::Derivation;
use gainv::roberts::roberts;
use gainv::sl2::RepSum;
use gainv::{rat, Error, MultiDegree, Polynomial, VariableSet};

#[test]
fn leibniz_on_random_inputs() {
    let run = common::leibniz_suite(800, 11);
    assert!(run.failures.is_empty(), "{:?}", run.failures);
}

#[test]
fn flow_group_law_on_random_inputs() {
    let run = common::flow_group_law_suite(600, 12);
    assert!(run.failures.is_empty(), "{:?}", run.failures);
}

#[test]
fn roberts_witness_and_weight_shift() {
    let r = roberts();
    let d = r.derivation();
    let w = d.witness().unwrap();
    assert_eq!(w.max_order(), 2);
    assert_eq!(w.get("x1"), Some(1));
    assert_eq!(w.get("y2"), Some(2));
    assert_eq!(w.get("z"), Some(2));
    assert!(d.weight_shift(r.weights()).is_ok());
}

#[test]
fn roberts_flow_of_z() {
    let r = roberts();
    let (g, s) = r.derivation().flow_symbolic(&r.z()).unwrap();
    let expected = Polynomial::parse(s.ring(), "z + x1^2*x2^2*x3^2*s").unwrap();
    assert_eq!(g, expected);
}

#[test]
fn graded_kernel_examples() {
    let r = roberts();
    let d = r.derivation();
    let deg = MultiDegree(vec![3, 2, 2]);
    let xy = ["x1", "x2", "x3", "y1", "y2", "y3"];
    assert_eq!(d.graded_kernel(r.weights(), &deg, Some(&xy)).unwrap().dim(), 1);
    let full = d.graded_kernel(r.weights(), &deg, None).unwrap();
    assert_eq!(full.dim(), 2);
    assert!(full.contains(&r.beta(1, 1).unwrap()));
    assert_eq!(full.monomials.len(), 3);
}

#[test]
fn uncertified_flow_is_refused() {
    let ring = VariableSet::new(&["x", "y"]).unwrap();
    let d = Derivation::from_text(&ring, &[("x", "y"), ("y", "x")]).unwrap();
    assert!(matches!(d.certify_locally_nilpotent(10), Err(Error::NotCertified { .. })));
    assert_eq!(d.flow_at(&rat(1), &Polynomial::var(&ring, "x").unwrap()), Err(Error::Uncertified));
}

#[test]
fn sl2_derivation_raises_weight_by_two() {
    let rep = RepSum::parse("V[5]").unwrap();
    let d = rep.raising_derivation();
    assert_eq!(d.weight_shift(rep.weights()).unwrap(), MultiDegree(vec![0, 2]));
    assert_eq!(d.witness().unwrap().max_order(), 6);
}

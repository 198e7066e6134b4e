use gainv::roberts::roberts;
use gainv::sagbi::GeneratorSet;
use gainv::separating::{
    self, graph_vs_separation_sampling, separates, separating_set_equivalence, solve_group_element, PointFlow,
    RationalPoint, RobertsSampler,
};
use gainv::rat;

fn point(c: &[i64]) -> RationalPoint {
    RationalPoint::from_integers(roberts().ring(), c).unwrap()
}

fn flow() -> PointFlow {
    PointFlow::new(roberts().derivation()).unwrap()
}

#[test]
fn recovers_the_group_element() {
    let f = flow();
    let v = point(&[1, 2, 3, 0, 0, 0, 0]);
    let w = f.apply(&v, &rat(5)).unwrap();
    assert_eq!(solve_group_element(&v, &w, &f).unwrap(), Some(rat(5)));
    let fixed = point(&[0, 0, 0, 4, -1, 2, 7]);
    assert_eq!(solve_group_element(&fixed, &fixed, &f).unwrap(), Some(rat(0)));
    let off = point(&[1, 1, 1, 1, 1, 1, 0]);
    assert_eq!(solve_group_element(&point(&[1, 1, 1, 0, 0, 0, 0]), &off, &f).unwrap(), None);
}

#[test]
fn unit_flow_of_the_ones_point() {
    // (1,1,1,1,1,1,1) is the time-one flow of (1,1,1,0,0,0,0), so no
    // invariant separates the two.
    let g = separating::roberts_s_set(1).unwrap();
    let v = point(&[1, 1, 1, 0, 0, 0, 0]);
    let w = point(&[1, 1, 1, 1, 1, 1, 1]);
    assert!(!separates(&v, &w, &g, "S_1").unwrap().separated());
    assert_eq!(solve_group_element(&v, &w, &flow()).unwrap(), Some(rat(1)));
}

#[test]
fn diagonal_and_fixed_points_are_not_separated() {
    let g = separating::roberts_s_set(3).unwrap();
    let v = point(&[2, -1, 0, 3, 1, 1, 5]);
    assert!(!separates(&v, &v, &g, "S_3").unwrap().separated());
    let a = point(&[0, 0, 0, 1, 2, 3, 4]);
    let b = point(&[0, 0, 0, -5, 0, 9, 1]);
    let r = separates(&a, &b, &g, "S_3").unwrap();
    assert!(!r.separated());
    assert_eq!(r.agreeing.len(), g.len());
}

#[test]
fn x_coordinates_alone_do_not_separate() {
    let r = roberts();
    let xs = GeneratorSet::new((1..=3).map(|i| (format!("x{i}"), r.x(i))).collect()).unwrap();
    let s1 = separating::roberts_s_set(1).unwrap();
    let v = point(&[1, 1, 1, 0, 0, 0, 0]);
    let w = point(&[1, 1, 1, 0, 1, 0, 0]);
    assert!(!separates(&v, &w, &xs, "x").unwrap().separated());
    let witness = separates(&v, &w, &s1, "S_1").unwrap();
    assert_eq!(witness.disagreeing.map(|(n, _, _)| n), Some("u12".to_string()));
}

#[test]
fn sampling_is_clean_and_deterministic() {
    let sampler = RobertsSampler::new().unwrap();
    let a1 = separating::roberts_a1_set().unwrap();
    let first = graph_vs_separation_sampling(&sampler, &a1, "A_1", 150, 5);
    let second = graph_vs_separation_sampling(&sampler, &a1, "A_1", 150, 5);
    assert!(first.passed(), "{:?}", first.details);
    assert_eq!(first.details, second.details);
}

#[test]
fn a1_and_s4_agree_on_samples() {
    let sampler = RobertsSampler::new().unwrap();
    let a1 = separating::roberts_a1_set().unwrap();
    let s4 = separating::roberts_s_set(4).unwrap();
    let r = separating_set_equivalence(&sampler, (&a1, "A_1"), (&s4, "S_4"), 150, 6);
    assert!(r.passed(), "{:?}", r.details);
}

#[test]
fn point_parsing_checks_length() {
    let ring = roberts().ring();
    assert!(RationalPoint::parse(ring, "1,2,3,0,0,0,1/2").is_ok());
    assert!(RationalPoint::parse(ring, "1,2,3").is_err());
}

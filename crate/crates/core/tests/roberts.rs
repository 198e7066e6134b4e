use gainv::roberts::{self, roberts};
use gainv::MultiDegree;

const BETA_1_2: &str =
    "x1*z^2 - 2*x2^2*x3^2*y1*z - x1^5*x2*x3*y2*y3 + x1^2*x2^4*x3*y1*y3 + x1^2*x2*x3^4*y1*y2";

#[test]
fn low_betas_in_closed_form() {
    let r = roberts();
    assert_eq!(r.beta(1, 0).unwrap().to_string(), "x1");
    assert_eq!(r.beta(1, 1).unwrap(), r.parse("x1*z - x2^2*x3^2*y1").unwrap());
    assert_eq!(r.beta(1, 2).unwrap().to_string(), BETA_1_2);
}

#[test]
fn betas_are_invariant_with_expected_leading_term() {
    let r = roberts();
    for n in 0..=4 {
        for i in 1..=3 {
            let b = r.beta(i, n).unwrap();
            assert!(r.derivation().apply(&b).unwrap().is_zero(), "D(beta{i}_{n}) != 0");
            assert_eq!(b.leading_monomial().unwrap(), &r.mono(unit(i), [0; 3], n));
            let want = r.beta_degree(i, n);
            for (m, _) in b.terms() {
                assert_eq!(r.weights().degree_of(m), want);
            }
        }
    }
}

fn unit(i: usize) -> [u32; 3] {
    let mut e = [0; 3];
    e[i - 1] = 1;
    e
}

#[test]
fn beta_matches_independent_oracle() {
    let r = roberts();
    for n in 0..=3 {
        for i in 1..=3 {
            assert_eq!(r.beta(i, n).unwrap(), r.beta_oracle(i, n).unwrap(), "beta{i}_{n}");
        }
    }
}

#[test]
fn y0_relation_holds_after_relabeling_only() {
    assert!(roberts::y0_relation_check());
    assert!(roberts::y0_relation_residue(false).unwrap().is_zero());
    assert!(!roberts::y0_relation_residue(true).unwrap().is_zero());
}

#[test]
fn named_checks_pass() {
    for r in [
        roberts::invariance_check(),
        roberts::y1_ideal_check(),
        roberts::beta_checks(3),
        roberts::graded_kernel_check(),
        roberts::radical_structure_check(2, 6),
        roberts::fixed_point_check(3),
    ] {
        assert!(r.passed(), "{}: {:?}", r.id, r.details);
    }
}

#[test]
fn an_lemma_holds_from_one_and_fails_at_zero() {
    let r = roberts::an_lemma_checks(1, 6, 8);
    assert!(r.passed(), "{:?}", r.details);
    let r0 = roberts::an_lemma_checks(0, 6, 8);
    assert!(!r0.passed());
    assert!(r0.failures().any(|d| d.contains("x1*beta1_1")), "{:?}", r0.details);
}

#[test]
fn kernel_544_spans_three_dimensions() {
    let r = roberts();
    let xy = ["x1", "x2", "x3", "y1", "y2", "y3"];
    let k = r
        .derivation()
        .graded_kernel(r.weights(), &MultiDegree(vec![5, 4, 4]), Some(&xy))
        .unwrap();
    assert_eq!(k.dim(), 3);
    for p in r.kernel_544(1) {
        assert!(k.contains(&p));
    }
}

#[test]
fn fixed_points_collapse() {
    for n in 0..=3 {
        assert!(roberts::fixed_point_collapse(n).unwrap());
    }
}

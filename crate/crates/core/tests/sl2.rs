use gainv::separating::{PointFlow, RationalPoint};
use gainv::sl2::{self, component_membership, Membership, RepSum, SigmaAction};
use gainv::{rat, Error, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&a| rat(a)).collect()
}

#[test]
fn quadratic_invariants_count_and_invariance() {
    for n in 0..=8 {
        let fs = sl2::quadratic_invariants(n).unwrap();
        assert_eq!(fs.len() as u32, n / 2 + 1, "V[{n}]");
        let d = RepSum::single(n).raising_derivation();
        for f in &fs {
            assert!(d.apply(f).unwrap().is_zero());
        }
    }
}

#[test]
fn sigma_table_by_residue() {
    assert_eq!(sl2::sigma_on_v0(2), SigmaAction::MinusIdentity);
    assert_eq!(sl2::sigma_on_v0(4), SigmaAction::Trivial);
    assert_eq!(sl2::sigma_on_v0(3), SigmaAction::ZeroSpace);
    for n in 0..=10 {
        assert_eq!(sl2::sigma_on_v0(n), sl2::sigma_table(n), "V[{n}]");
    }
}

#[test]
fn basis_vector_examples() {
    let v2 = RepSum::single(2);
    assert!(v2.nullcone_test(&ints(&[0, 0, 1])).unwrap());
    assert!(v2.plinth_test(&ints(&[0, 0, 1])).unwrap());
    assert!(!v2.nullcone_test(&ints(&[0, 1, 0])).unwrap());
    assert!(v2.plinth_test(&ints(&[0, 1, 0])).unwrap());
    assert!(v2.nullcone_test(&ints(&[0, 0, 0])).unwrap());
    assert!(v2.nullcone_test(&ints(&[0, 0])).is_err());
}

#[test]
fn first_nonzero_coordinate_is_detected() {
    let v3 = RepSum::single(3);
    let v = ints(&[1, 0, 1, 0]);
    assert!(!v3.plinth_test(&v).unwrap());
    let f0 = &sl2::quadratic_invariants(3).unwrap()[0];
    assert_ne!(f0.evaluate(&v).unwrap(), rat(0));
}

#[test]
fn component_membership_examples() {
    let v2 = RepSum::single(2);
    let m = component_membership(&v2, &ints(&[0, 3, 1]), &ints(&[0, -3, 7])).unwrap();
    assert_eq!(m, Membership::InCSigma);
    assert_eq!(component_membership(&v2, &ints(&[0, 3, 1]), &ints(&[0, 3, 1])).unwrap(), Membership::InC);
    assert_eq!(component_membership(&v2, &ints(&[0, 0, 1]), &ints(&[0, 0, 5])).unwrap(), Membership::Both);
    let v4 = RepSum::single(4);
    let p = ints(&[0, 0, 2, 1, 1]);
    assert_eq!(component_membership(&v4, &p, &p).unwrap(), Membership::Both);
    assert_eq!(
        component_membership(&v2, &ints(&[1, 0, 0]), &ints(&[0, 0, 0])),
        Err(Error::NotInPlinthLocus)
    );
}

#[test]
fn invariants_vanish_on_the_nullcone() {
    let rep = RepSum::parse("V[4]+V[2]").unwrap();
    let invs = rep.invariants_up_to(3).unwrap();
    assert!(!invs.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..40 {
        let mut v = rep.sample_plinth_point(&mut rng);
        let zeros = vec![Rational::from_integer(0.into()); rep.v0_component(&v).len()];
        rep.set_v0(&mut v, &zeros);
        assert!(rep.nullcone_test(&v).unwrap());
        for (_, f) in &invs {
            assert_eq!(f.evaluate(&v).unwrap(), rat(0), "{f}");
        }
    }
}

#[test]
fn flow_fixes_the_zero_weight_component_of_plinth_points() {
    let rep = RepSum::parse("V[4]+V[2]+V[3]").unwrap();
    let flow = PointFlow::new(&rep.raising_derivation()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..30 {
        let v = rep.sample_plinth_point(&mut rng);
        let p = RationalPoint::new(rep.ring(), v.clone()).unwrap();
        let polys = flow.univariate(&p).unwrap();
        for (s, &n) in rep.summands().iter().enumerate() {
            if n % 2 == 0 {
                let coeffs = &polys[rep.index(s, n / 2)];
                assert!(coeffs.iter().skip(1).all(|c| *c == rat(0)), "{coeffs:?}");
            }
        }
        let moved = flow.apply(&p, &rat(-4)).unwrap();
        assert_eq!(rep.v0_component(moved.coords()), rep.v0_component(&v));
    }
}

#[test]
fn plinth_checks_pass() {
    for spec in ["V[2]", "V[3]", "V[4]+V[2]"] {
        let rep = RepSum::parse(spec).unwrap();
        let a = sl2::positive_weight_vanishing_check(&rep, 3, 50, 1);
        let b = sl2::component_containment_check(&rep, 3, 50, 1);
        assert!(a.passed(), "{spec}: {:?}", a.details);
        assert!(b.passed(), "{spec}: {:?}", b.details);
    }
}

#[test]
fn bad_specs_are_rejected() {
    for spec in ["", "V[]", "V[2]+", "W[2]", "V[-1]"] {
        assert!(RepSum::parse(spec).is_err(), "{spec}");
    }
}

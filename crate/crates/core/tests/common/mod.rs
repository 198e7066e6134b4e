#![allow(dead_code)]

use std::sync::Arc;

use gainv::{rat, ratio, Monomial, Polynomial, Rational, VariableSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random polynomial with up to `terms` terms, exponents up to `max_exp`
/// and small rational coefficients.
pub fn random_poly(ring: &Arc<VariableSet>, rng: &mut ChaCha8Rng, terms: usize, max_exp: u32) -> Polynomial {
    let n = rng.random_range(0..=terms);
    Polynomial::from_terms(
        ring,
        (0..n).map(|_| {
            let m = Monomial::from_exponents((0..ring.len()).map(|_| rng.random_range(0..=max_exp)));
            (m, random_rational(rng))
        }),
    )
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.random_range(-6..=6);
    if rng.random_bool(0.7) {
        rat(num)
    } else {
        ratio(num, rng.random_range(1..=4))
    }
}

use gainv::casebook::{quadric_ring, remainder_by};
use gainv::derivation::Derivation;
use gainv::roberts::roberts;
use gainv::sagbi::{subduct, DEFAULT_MAX_STEPS};
use gainv::sl2::RepSum;

/// Outcome of one randomized property family.
pub struct PropertyRun {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

fn note(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok && failures.len() < 5 {
        failures.push(msg());
    }
}

/// `D(fg) = D(f) g + f D(g)` for fixed and random derivations.
pub fn leibniz_suite(cases: usize, seed: u64) -> PropertyRun {
    let mut rng = rng(seed);
    let abc = VariableSet::new(&["a", "b", "c"]).unwrap();
    let sl2 = RepSum::parse("V[4]+V[2]").unwrap();
    let fixed = [roberts().derivation().clone(), sl2.raising_derivation(), quadric_ring().derivation()];
    let mut failures = Vec::new();
    for t in 0..cases {
        let d = if t % 4 == 3 {
            let images = (0..3).map(|_| random_poly(&abc, &mut rng, 3, 2)).collect();
            Derivation::new(&abc, images).unwrap()
        } else {
            fixed[t % 4].clone()
        };
        let ring = d.ring().clone();
        let f = random_poly(&ring, &mut rng, 4, 3);
        let g = random_poly(&ring, &mut rng, 4, 3);
        let lhs = d.apply(&(&f * &g)).unwrap();
        let rhs = &(&d.apply(&f).unwrap() * &g) + &(&f * &d.apply(&g).unwrap());
        note(&mut failures, lhs == rhs, || format!("Leibniz fails for f = {f}, g = {g}"));
    }
    PropertyRun { name: "Leibniz rule", cases, failures }
}

/// `flow_s(flow_t(f)) = flow_{s+t}(f)` for locally nilpotent derivations.
pub fn flow_group_law_suite(cases: usize, seed: u64) -> PropertyRun {
    let mut rng = rng(seed);
    let sl2 = RepSum::parse("V[3]").unwrap();
    let ds = [roberts().derivation().clone(), sl2.raising_derivation(), quadric_ring().derivation()];
    let mut failures = Vec::new();
    for t in 0..cases {
        let d = &ds[t % 3];
        let f = random_poly(d.ring(), &mut rng, 3, 2);
        let (s, u) = (random_rational(&mut rng), random_rational(&mut rng));
        let lhs = d.flow_at(&s, &d.flow_at(&u, &f).unwrap()).unwrap();
        let rhs = d.flow_at(&(&s + &u), &f).unwrap();
        let zero = d.flow_at(&rat(0), &f).unwrap();
        note(&mut failures, lhs == rhs && zero == f, || format!("group law fails for f = {f}, s = {s}, t = {u}"));
    }
    PropertyRun { name: "flow group law", cases, failures }
}

/// Subduction certificates replay to their remainder; combinations of
/// generator products subduct to zero.
pub fn certificate_replay_suite(cases: usize, seed: u64) -> PropertyRun {
    let mut rng = rng(seed);
    let g = roberts().generator_set(2).unwrap();
    let mut failures = Vec::new();
    for t in 0..cases {
        let mut f = Polynomial::zero(g.ring());
        for _ in 0..rng.random_range(1..=3) {
            let k = rng.random_range(1..=3);
            let mut fs: Vec<usize> = (0..k).map(|_| rng.random_range(0..g.len())).collect();
            fs.sort();
            f = &f + &g.product(&fs).scale(&random_rational(&mut rng));
        }
        let member = t % 2 == 0;
        if !member {
            f = &f + &random_poly(g.ring(), &mut rng, 2, 2);
        }
        let cert = subduct(&f, &g, DEFAULT_MAX_STEPS).unwrap();
        let ok = cert.replay(&f, &g) && (!member || cert.is_member());
        note(&mut failures, ok, || format!("certificate for {f} does not replay (member: {member})"));
    }
    PropertyRun { name: "certificate replay", cases, failures }
}

/// Normal forms modulo the quadric are canonical and multiplicative.
pub fn quadric_normal_form_suite(cases: usize, seed: u64) -> PropertyRun {
    let mut rng = rng(seed);
    let q = quadric_ring();
    let mut failures = Vec::new();
    for _ in 0..cases {
        let f = random_poly(q.ring(), &mut rng, 4, 3);
        let g = random_poly(q.ring(), &mut rng, 4, 3);
        let (rf, rg) = (q.reduce(&f).unwrap(), q.reduce(&g).unwrap());
        let prod = q.reduce(&(&f * &g)).unwrap();
        let ok = prod == q.mul(&rf, &rg).unwrap()
            && q.is_normal(&rf)
            && remainder_by(&(&f - &rf), q.quadric()).unwrap().is_zero()
            && q.reduce(&rf).unwrap() == rf;
        note(&mut failures, ok, || format!("normal form fails for f = {f}, g = {g}"));
    }
    PropertyRun { name: "quadric normal form", cases, failures }
}

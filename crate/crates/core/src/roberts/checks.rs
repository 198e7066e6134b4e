use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{beta_name, roberts, xi, Z};
use crate::error::Result;
use crate::linalg;
use crate::polyring::{rat, Homogeneity, Monomial, MultiDegree, Polynomial, Rational, VariableSet};
use crate::report::VerificationReport;
use crate::sagbi::{self, GeneratorSet, SubductionCertificate, TeteATete, DEFAULT_MAX_STEPS};

/// Ambient coordinates of the nine-dimensional space containing `Spec A_1`.
pub const A9_VARIABLES: [&str; 9] = ["x1", "x2", "x3", "u12", "u13", "u23", "b11", "b21", "b31"];
/// Ambient coordinates of the six-dimensional space containing `Spec A_0`.
pub const A6_VARIABLES: [&str; 6] = ["x1", "x2", "x3", "u12", "u13", "u23"];

pub const Y0_RELATION: &str = "x1^3*u12 + x2^3*u13 + x3^3*u23";

/// The five listed generators of `I(Y_1)`, over [`A9_VARIABLES`].
pub const Y1_GENERATORS: [&str; 5] = [
    "x1^2*u12 - x3*b21 + x2*b31",
    "x2^2*u13 - x1*b31 + x3*b11",
    "x3^2*u23 - x2*b11 + x1*b21",
    "x1*x2*u12*u13*u23*b31 + x2*x3*u12*u13*u23*b11 + x1*x3*u12*u13*u23*b21 + u12*b11^3 + u13*b21^3 + u23*b31^3",
    "x1*x2*x3*u12*u13*u23 + x1*u12*b11^2 + x2*u13*b21^2 + x3*u23*b31^2",
];

/// Canonical text of the named invariants `u12, u13, u23, beta1_1, beta2_1, beta3_1`.
pub fn named_invariants() -> Result<Vec<(String, Polynomial)>> {
    let r = roberts();
    let mut v = vec![
        ("u12".to_string(), r.u12()),
        ("u13".to_string(), r.u13()),
        ("u23".to_string(), r.u23()),
    ];
    for i in 1..=3 {
        v.push((beta_name(i, 1), r.beta(i, 1)?));
    }
    Ok(v)
}

fn a9_ring() -> Arc<VariableSet> {
    VariableSet::new(&A9_VARIABLES).expect("fixed names")
}

fn a6_ring() -> Arc<VariableSet> {
    VariableSet::new(&A6_VARIABLES).expect("fixed names")
}

/// Images of the `u` coordinates of the relation lists.
///
/// The relations are written with the `u` symbols attached to the
/// complementary index: the coordinates `u12, u13, u23` of the relation
/// list stand for `u23, -u13, u12`. Under the literal reading
/// (`u12 -> u12`, ...) none of them vanishes; see [`literal_residues`].
pub fn relation_u_images() -> [Polynomial; 3] {
    let r = roberts();
    [r.u23(), -r.u13(), r.u12()]
}

fn substitution(literal: bool) -> Result<Vec<Polynomial>> {
    let r = roberts();
    let mut inv = r.a1_invariants()?;
    if !literal {
        let [a, b, c] = relation_u_images();
        inv[3] = a;
        inv[4] = b;
        inv[5] = c;
    }
    Ok(inv)
}

/// `x1^3 u12 + x2^3 u13 + x3^3 u23` after substitution.
pub fn y0_relation_residue(literal: bool) -> Result<Polynomial> {
    let rel = Polynomial::parse(&a6_ring(), Y0_RELATION)?;
    let mut inv = substitution(literal)?;
    inv.truncate(6);
    rel.substitute(&inv)
}

pub fn y0_relation_check() -> bool {
    y0_relation_residue(false).map(|p| p.is_zero()).unwrap_or(false)
}

/// Residues of the Y_0 relation and the five Y_1 generators under the
/// literal `u` labeling.
pub fn literal_residues() -> Result<Vec<Polynomial>> {
    let mut out = vec![y0_relation_residue(true)?];
    let inv = substitution(true)?;
    let a9 = a9_ring();
    for g in Y1_GENERATORS {
        out.push(Polynomial::parse(&a9, g)?.substitute(&inv)?);
    }
    Ok(out)
}

pub fn y1_ideal_check() -> VerificationReport {
    let mut rep = VerificationReport::new(
        "roberts-y1",
        "the five listed generators of I(Y1) vanish on the nine generators of A1",
    );
    let mut run = || -> Result<()> {
        let inv = substitution(false)?;
        let a9 = a9_ring();
        for (k, g) in Y1_GENERATORS.iter().enumerate() {
            let res = Polynomial::parse(&a9, g)?.substitute(&inv)?;
            rep.expect(res.is_zero(), format!("generator {}: residue {res}", k + 1));
        }
        let lit = literal_residues()?;
        let nonzero = lit[1..].iter().filter(|p| !p.is_zero()).count();
        rep.note(format!(
            "with u12,u13,u23 read literally instead of as u23,-u13,u12, {nonzero} of 5 generators leave a nonzero residue"
        ));
        Ok(())
    };
    if let Err(e) = run() {
        rep.fail(e.to_string());
    }
    rep
}

pub fn invariance_check() -> VerificationReport {
    let r = roberts();
    let d = r.derivation();
    let mut rep = VerificationReport::new(
        "roberts-invariants",
        "u12, u13, u23 and beta_{i,1} are invariant and satisfy the Y0 relation",
    );
    match named_invariants() {
        Ok(named) => {
            for (name, p) in named {
                rep.expect(d.is_invariant(&p), format!("D({name}) = 0 for {name} = {p}"));
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    match y0_relation_residue(false) {
        Ok(p) => rep.expect(p.is_zero(), format!("Y0 relation residue: {p}")),
        Err(e) => rep.fail(e.to_string()),
    }
    if let Ok(p) = y0_relation_residue(true) {
        rep.note(format!("Y0 relation with literal u labels leaves {p}"));
    }
    rep
}

/// Checks the three prescribed coefficients of `β_{i,n}`.
pub fn verify_beta_form(i: usize, n: u32) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        format!("roberts-beta-form-{i}-{n}"),
        "beta_{i,n} = x_i z^n - n x_j^2 x_k^2 y_i z^{n-1} + C(n,2)(...) z^{n-2} + lower z-degree terms",
    )
    .param("i", i)
    .param("n", n);
    let b = match r.beta(i, n) {
        Ok(b) => b,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let top = b.coefficient_of_power(Z, n);
    rep.expect(top == r.x(i), format!("z^{n} coefficient {top}"));
    if n >= 1 {
        let c = b.coefficient_of_power(Z, n - 1);
        let want = r.h1(i, n);
        rep.expect(c == want, format!("z^{} coefficient {c}, expected {want}", n - 1));
    }
    if n >= 2 {
        let c = b.coefficient_of_power(Z, n - 2);
        let want = r.h2(i, n);
        rep.expect(c == want, format!("z^{} coefficient {c}, expected {want}", n - 2));
    }
    rep
}

/// Existence, invariance, leading term, multidegree and normal form of
/// every `β_{i,n}` with `n <= max_n`, cross-checked against the oracle.
pub fn beta_checks(max_n: u32) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        "roberts-beta",
        "invariants beta_{i,n} exist with leading term x_i z^n and the prescribed top coefficients",
    )
    .param("max_n", max_n);
    for n in 0..=max_n {
        for i in 1..=3 {
            let b = match r.beta(i, n) {
                Ok(b) => b,
                Err(e) => {
                    rep.fail(e.to_string());
                    continue;
                }
            };
            let lead = r.mono(r.xs(i, 1, 0, 0), [0; 3], n);
            let lt_ok = b.leading_term().map(|(m, c)| *m == lead && c.is_one()).unwrap_or(false);
            let deg_ok = b.multidegree(r.weights()).ok() == Some(Homogeneity::Homogeneous(r.beta_degree(i, n)));
            let inv = r.derivation().is_invariant(&b);
            let oracle = r.beta_oracle(i, n).map(|o| o == b).unwrap_or(false);
            let ok = lt_ok && deg_ok && inv && oracle;
            rep.expect(
                ok,
                format!(
                    "beta({i},{n}): {} terms, invariant={inv}, LT ok={lt_ok}, degree ok={deg_ok}, oracle agrees={oracle}",
                    b.len()
                ),
            );
            rep.absorb(&verify_beta_form(i, n));
        }
    }
    rep
}

/// Which of the three relation families a tête-à-tête belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cubic { n: u32, m: u32, k: u32 },
    Mixed { i: usize, j: usize, n: u32, m: u32, n2: u32, m2: u32 },
    Pure { i: usize, n: u32, m: u32, n2: u32, m2: u32 },
}

/// Difference polynomial and the leading term the proof predicts for it.
pub fn family_instance(f: &Family) -> Result<(Polynomial, Monomial, Rational)> {
    let r = roberts();
    let z = |e: u32| r.mono([0; 3], [0; 3], e);
    Ok(match *f {
        Family::Cubic { n, m, k } => {
            let left = &(&(&r.beta(1, n)? * &r.beta(1, m)?) * &r.beta(1, k)?) * &r.u23();
            let right = &(&(&r.beta(2, n)? * &r.beta(2, m)?) * &r.beta(2, k)?) * &r.u13();
            let lm = r.mono([3, 0, 3], [0, 1, 0], n + m + k);
            (&left - &right, lm, rat(-1))
        }
        Family::Mixed { i, j, n, m, n2, m2 } => {
            let k = 6 - i - j;
            let diff = &(&r.beta(i, n)? * &r.beta(j, m)?) - &(&r.beta(i, n2)? * &r.beta(j, m2)?);
            // (n - n') x_k^2 x_i^3 y_j z^{n+m-1}
            let mut x = [0u32; 3];
            x[k - 1] = 2;
            x[i - 1] = 3;
            let mut y = [0u32; 3];
            y[j - 1] = 1;
            let lm = r.mono(x, y, 0).mul(&z(n + m - 1));
            (diff, lm, rat(n as i64 - n2 as i64))
        }
        Family::Pure { i, n, m, n2, m2 } => {
            let diff = &(&r.beta(i, n)? * &r.beta(i, m)?) - &(&r.beta(i, n2)? * &r.beta(i, m2)?);
            // (nm - n'm') LT(x_j^4 x_k^4 y_i^2 - x_i H_i) z^{n+m-2}
            let mut y = [0u32; 3];
            y[i - 1] = 2;
            let mut base = r.term(1, r.xs(i, 0, 4, 4), y, 0);
            let h = r.h2(i, 2);
            base = &base - &(&r.x(i) * &h);
            let (lm, lc) = base.leading_term()?;
            let c = rat(n as i64 * m as i64 - n2 as i64 * m2 as i64) * lc;
            (diff, lm.mul(&z(n + m - 2)), c)
        }
    })
}

/// Every family instance with indices at most `big_n`.
pub fn family_instances(big_n: u32) -> Vec<Family> {
    let mut out = Vec::new();
    for n in 0..=big_n {
        for m in n..=big_n {
            for k in m..=big_n {
                out.push(Family::Cubic { n, m, k });
            }
        }
    }
    let pairs = |s: u32| (0..=big_n).filter(move |&a| s >= a && s - a <= big_n).map(move |a| (a, s - a));
    for s in 1..=2 * big_n {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            for (n, m) in pairs(s) {
                for (n2, m2) in pairs(s) {
                    if n < n2 {
                        out.push(Family::Mixed { i, j, n, m, n2, m2 });
                    }
                }
            }
        }
        if s >= 2 {
            for i in 1..=3 {
                let sorted: BTreeSet<(u32, u32)> = pairs(s).filter(|(a, b)| a <= b).collect();
                let v: Vec<_> = sorted.into_iter().collect();
                for a in 0..v.len() {
                    for b in a + 1..v.len() {
                        let ((n, m), (n2, m2)) = (v[b], v[a]);
                        out.push(Family::Pure { i, n, m, n2, m2 });
                    }
                }
            }
        }
    }
    out
}

/// SAGBI verification of `S_N` up to the total degree bound, plus the
/// observed leading terms of the three relation families.
pub fn sagbi_check(big_n: u32, degree_bound: u64) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        format!("roberts-sagbi-{big_n}"),
        "S_N is a SAGBI basis of A_N: every tete-a-tete subducts to zero",
    )
    .param("N", big_n)
    .param("degree_bound", degree_bound);
    let g = match r.generator_set(big_n) {
        Ok(g) => g,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    match sagbi::verify_sagbi(&g, degree_bound, DEFAULT_MAX_STEPS) {
        Ok(sub) => rep.absorb(&sub),
        Err(e) => rep.fail(e.to_string()),
    }
    let fams = family_instances(big_n);
    let results: Vec<_> = fams
        .par_iter()
        .map(|f| -> Result<(bool, bool, String)> {
            let (diff, lm, lc) = family_instance(f)?;
            let lt_ok = if lc.is_zero() {
                diff.is_zero()
            } else {
                diff.leading_term().map(|(m, c)| *m == lm && *c == lc).unwrap_or(false)
            };
            let cert = sagbi::subduct(&diff, &g, DEFAULT_MAX_STEPS)?;
            let observed = match diff.leading_term() {
                Ok((m, c)) => format!("{}", Polynomial::monomial(diff.ring(), m.clone(), c.clone())),
                Err(_) => "0".into(),
            };
            Ok((lt_ok, cert.is_member(), format!("{f:?}: observed LT {observed}")))
        })
        .collect();
    let mut counts = [0usize; 3];
    for res in results {
        match res {
            Ok((lt_ok, member, line)) => {
                if !lt_ok {
                    rep.fail(format!("{line}, differs from the predicted leading term"));
                } else if !member {
                    rep.fail(format!("{line}, does not subduct to zero"));
                } else {
                    counts[0] += 1;
                }
                counts[1] += 1;
                if counts[2] < 6 {
                    rep.note(line);
                    counts[2] += 1;
                }
            }
            Err(e) => rep.fail(e.to_string()),
        }
    }
    rep.note(format!("{} of {} family instances match the predicted leading term", counts[0], counts[1]));
    rep
}

/// Invariants of degree `d` with z-degree at most `max_z` (reduced basis).
pub fn low_z_kernel(d: &MultiDegree, max_z: u32) -> Result<Vec<Polynomial>> {
    let r = roberts();
    let monos: Vec<Monomial> = r
        .weights()
        .monomial_basis(d, None)?
        .into_iter()
        .filter(|m| m.exponent(Z) <= max_z)
        .collect();
    r.derivation().kernel_in_span(&monos)
}

/// Products of `S_0` generators (all factors named) with LT total degree at most `bound`.
fn s0_products(g0: &GeneratorSet, bound: u64) -> Vec<Vec<usize>> {
    let degs: Vec<u64> = g0.leading_monomials().iter().map(|m| m.total_degree()).collect();
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn rec(degs: &[u64], budget: u64, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        for i in start..degs.len() {
            if degs[i] <= budget {
                path.push(i);
                rec(degs, budget - degs[i], i, path, out);
                path.pop();
            }
        }
    }
    rec(&degs, bound, 0, &mut path, &mut out);
    out
}

/// Parts (a), (b) and (c) of the lemma on the subalgebras `A_N`.
///
/// Part (b) as an inclusion and part (c) only hold for `N >= 1`: at `N = 0`
/// the product `x_1 β_{1,1}` has z-degree 1, so it is not in `A_0`, and the
/// conductor `[A_0 : A_1] ∩ A_0` is zero. The forward check of (c) is run
/// as stated for every `N` and therefore fails at `N = 0`.
pub fn an_lemma_checks(big_n: u32, component_bound: i64, a0_degree_bound: u64) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        format!("roberts-an-{big_n}"),
        "invariants of z-degree <= N lie in A_N; (x1,x2,x3)A_{N+1} is in A_N; the conductor of A_{N+1} into A_N meets A_0 in (x1,x2,x3)A_0",
    )
    .param("N", big_n)
    .param("component_bound", component_bound)
    .param("a0_degree_bound", a0_degree_bound);
    let body = |rep: &mut VerificationReport| -> Result<()> {
        let gn = r.generator_set(big_n)?;
        // (a)
        let degrees: Vec<MultiDegree> = (0..=component_bound)
            .flat_map(|a| (0..=component_bound).flat_map(move |b| (0..=component_bound).map(move |c| MultiDegree(vec![a, b, c]))))
            .collect();
        let part_a: Vec<Result<(usize, Vec<String>)>> = degrees
            .par_iter()
            .map(|d| {
                let mut bad = Vec::new();
                let basis = low_z_kernel(d, big_n)?;
                for f in &basis {
                    let cert = sagbi::subduct(f, &gn, DEFAULT_MAX_STEPS)?;
                    if !cert.is_member() {
                        bad.push(format!("(a) degree {d}: {f} leaves {}", cert.remainder));
                    }
                }
                Ok((basis.len(), bad))
            })
            .collect();
        let mut count = 0;
        for res in part_a {
            let (n, bad) = res?;
            count += n;
            for b in bad {
                rep.fail(b);
            }
        }
        rep.note(format!("(a) {count} invariants of z-degree <= {big_n} subduct to zero over S_{big_n}"));

        // (b)
        for i in 1..=3 {
            for j in 1..=3 {
                let lhs = &r.x(i) * &r.beta(j, big_n + 1)?;
                let rhs = &r.beta(i, 1)? * &r.beta(j, big_n)?;
                let same_lt = lhs.leading_term()? == rhs.leading_term()?;
                let diff = &lhs - &rhs;
                let zdeg = diff.degree_in(Z);
                let cert = sagbi::subduct(&diff, &gn, DEFAULT_MAX_STEPS)?;
                rep.expect(
                    same_lt && zdeg <= big_n && cert.is_member() && cert.replay(&diff, &gn),
                    format!("(b) x{i}*beta{j}_{} - beta{i}_1*beta{j}_{big_n}: z-degree {zdeg}, subducts to zero: {}", big_n + 1, cert.is_member()),
                );
            }
        }
        if big_n == 0 {
            let p = &r.x(1) * &r.beta(1, 1)?;
            let in_a0 = sagbi::subduct(&p, &gn, DEFAULT_MAX_STEPS)?.is_member();
            rep.note(format!(
                "at N = 0, x1*beta1_1 has z-degree {} and lies in A_0: {in_a0}; the inclusion (x1,x2,x3)A_1 in A_0 fails",
                p.degree_in(Z)
            ));
        }

        // (c), forward: x_i g beta_{j,N+1} in A_N for g in a spanning set of A_0.
        let g0 = r.generator_set(0)?;
        let products = s0_products(&g0, a0_degree_bound);
        let forward: Vec<Result<Option<String>>> = products
            .par_iter()
            .flat_map(|fs| (1..=3).flat_map(move |i| (1..=3).map(move |j| (fs.clone(), i, j))).collect::<Vec<_>>())
            .map(|(fs, i, j)| {
                let f = &(&r.x(i) * g0.product(&fs).as_ref()) * &r.beta(j, big_n + 1)?;
                let cert = sagbi::subduct(&f, &gn, DEFAULT_MAX_STEPS)?;
                Ok((!cert.is_member()).then(|| {
                    let g = g0.factor_names(&fs).iter().map(|n| format!("{n}*")).collect::<String>();
                    format!("(c) x{i}*{g}beta{j}_{} leaves {}", big_n + 1, cert.remainder)
                }))
            })
            .collect();
        let (mut n_forward, mut n_bad) = (0, 0);
        for res in forward {
            n_forward += 1;
            if let Some(bad) = res? {
                n_bad += 1;
                if n_bad <= 5 {
                    rep.fail(bad);
                }
            }
        }
        rep.expect(
            n_bad == 0,
            format!("(c) forward: {} of {n_forward} products x_i*g*beta_{{j,N+1}} subduct into S_{big_n}", n_forward - n_bad),
        );

        // (c), reverse: the leading-term criterion on monomials of LT(S_0).
        let n = r.ring().len();
        let mut n_reverse = 0;
        let mut n_premise = 0;
        let mut seen = BTreeSet::new();
        for fs in &products {
            let mut m = Monomial::one(n);
            for &k in fs {
                m = m.mul(&g0.leading_monomials()[k]);
            }
            if !seen.insert(m.clone()) {
                continue;
            }
            n_reverse += 1;
            let premise = (1..=3).all(|i| {
                let t = m.mul(&r.mono(r.xs(i, 1, 0, 0), [0; 3], big_n + 1));
                gn.factorize(&t).is_some()
            });
            if premise {
                n_premise += 1;
                let has_x = (1..=3).any(|j| {
                    m.div(&Monomial::variable(n, xi(j), 1))
                        .map(|rest| g0.factorize(&rest).is_some())
                        .unwrap_or(false)
                });
                if !has_x {
                    rep.fail(format!(
                        "(c) reverse: {} times every x_i z^{} lies in LT(S_{big_n}) but has no x_j factor in LT(S_0)",
                        Polynomial::monomial_text(r.ring(), &m),
                        big_n + 1
                    ));
                }
            }
        }
        rep.note(format!(
            "(c) reverse: {n_reverse} monomials of LT(S_0) swept, {n_premise} satisfy the premise and all carry an x_j factor"
        ));
        Ok(())
    };
    if let Err(e) = body(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// True when the multidegree of `f` is not congruent to `(k,k,k)` mod 3.
pub fn offdiagonal_degree_check(f: &Polynomial) -> bool {
    match f.multidegree(roberts().weights()) {
        Ok(Homogeneity::Homogeneous(d)) => {
            let v: Vec<i64> = d.0.iter().map(|a| a.rem_euclid(3)).collect();
            !(v[0] == v[1] && v[1] == v[2])
        }
        _ => false,
    }
}

/// Certificate writing `β_{i,n}^2` as a combination of `x_j` times
/// products of `S_{2n}`.
pub fn square_in_x_ideal(i: usize, n: u32) -> Result<(Polynomial, Arc<GeneratorSet>, SubductionCertificate)> {
    let r = roberts();
    let b = r.beta(i, n)?;
    let sq = &b * &b;
    let g = r.generator_set(2 * n)?;
    let cert = sagbi::x_ideal_membership(&sq, &g, &[xi(1), xi(2), xi(3)], DEFAULT_MAX_STEPS)?;
    Ok((sq, g, cert))
}

/// Algebraic independence of the `u` images, x-freeness of `LT(u^k)`, and
/// square certificates for the β.
pub fn radical_structure_check(big_n: u32, degree_bound: u32) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        "roberts-radical",
        "the radical of (x1,x2,x3)A contains every beta_{i,n}, and A modulo it is a polynomial ring in the images of u12, u13, u23",
    )
    .param("N", big_n)
    .param("degree_bound", degree_bound);
    let body = |rep: &mut VerificationReport| -> Result<()> {
        let us = [("u12", r.u12()), ("u13", r.u13()), ("u23", r.u23())];
        let mut rows = Vec::new();
        for (name, u) in &us {
            match u.multidegree(r.weights())? {
                Homogeneity::Homogeneous(d) => rows.push(d.0.iter().map(|&a| rat(a)).collect::<Vec<_>>()),
                _ => rep.fail(format!("{name} is not multihomogeneous")),
            }
        }
        let det = linalg::determinant(&rows);
        rep.expect(
            linalg::rank(&rows, 3) == 3 && !det.is_zero(),
            format!("u multidegrees have rank 3, determinant {det}"),
        );
        let g0 = r.generator_set(0)?;
        let n = r.ring().len();
        for (name, u) in &us {
            for k in 1..=degree_bound {
                let lt = u.pow(k).leading_monomial()?.clone();
                let expected = u.leading_monomial()?.pow(k);
                let x_factor = (1..=3).any(|j| {
                    lt.div(&Monomial::variable(n, xi(j), 1))
                        .map(|rest| g0.factorize(&rest).is_some())
                        .unwrap_or(false)
                });
                if lt != expected || x_factor {
                    rep.fail(format!("LT({name}^{k}) = {} has an x factor in LT(S_0)", Polynomial::monomial_text(r.ring(), &lt)));
                }
            }
        }
        rep.note(format!("LT(u^k) has no x_j factor in LT(S_0) for k <= {degree_bound}"));
        let u_sq = &r.u12() * &r.u12();
        let stuck = sagbi::x_ideal_membership(&u_sq, &g0, &[xi(1), xi(2), xi(3)], DEFAULT_MAX_STEPS).is_err();
        rep.expect(stuck, "u12^2 has no x-ideal certificate");
        let jobs: Vec<(usize, u32)> = (1..=big_n).flat_map(|n| (1..=3).map(move |i| (i, n))).collect();
        let results: Vec<_> = jobs
            .par_iter()
            .map(|&(i, n)| {
                let out = square_in_x_ideal(i, n).map(|(sq, g, c)| (c.is_member() && c.replay(&sq, &g), c.steps.len()));
                (i, n, out)
            })
            .collect();
        for (i, n, out) in results {
            match out {
                Ok((ok, steps)) => rep.expect(ok, format!("beta{i}_{n}^2 in (x1,x2,x3)A_{}: {steps} steps", 2 * n)),
                Err(e) => rep.fail(format!("beta{i}_{n}^2: {e}")),
            }
        }
        Ok(())
    };
    if let Err(e) = body(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// Every generator of `S_N` is constant on `x1 = x2 = x3 = 0`.
pub fn fixed_point_collapse(big_n: u32) -> Result<bool> {
    let r = roberts();
    let g = r.generator_set(big_n)?;
    let zero = Polynomial::zero(r.ring());
    let images = [("x1", zero.clone()), ("x2", zero.clone()), ("x3", zero)];
    for p in g.generators() {
        if !p.substitute_named(&images)?.is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn fixed_point_check(big_n: u32) -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        "roberts-fixed",
        "the fixed-point locus x = 0 maps to a single point of the quotient",
    )
    .param("N", big_n);
    match fixed_point_collapse(big_n) {
        Ok(ok) => rep.expect(ok, format!("all generators of S_{big_n} vanish on x1 = x2 = x3 = 0")),
        Err(e) => rep.fail(e.to_string()),
    }
    // The flow fixes every point with x = 0.
    let (flow_ok, detail) = match r.derivation().flow_symbolic(&r.z()) {
        Ok((flowed, _)) => {
            let ring = flowed.ring().clone();
            let zero = Polynomial::zero(&ring);
            let at_fixed = flowed
                .substitute_named(&[("x1", zero.clone()), ("x2", zero.clone()), ("x3", zero)])
                .map(|p| p == Polynomial::var(&ring, "z").unwrap());
            (at_fixed.unwrap_or(false), "flow of z restricted to x = 0 is z".to_string())
        }
        Err(e) => (false, e.to_string()),
    };
    rep.expect(flow_ok, detail);
    rep
}

/// A tête-à-tête relation from generator names, for callers outside the crate.
pub fn relation_by_names(g: &GeneratorSet, left: &[&str], right: &[&str]) -> Option<TeteATete> {
    let idx = |v: &[&str]| -> Option<Vec<usize>> {
        let mut out: Vec<usize> = v.iter().map(|n| g.index_of(n)).collect::<Option<_>>()?;
        out.sort_unstable();
        Some(out)
    };
    Some(TeteATete {
        left: idx(left)?,
        right: idx(right)?,
    })
}

/// Index symmetry: swapping `(x1,y1)` with `(x2,y2)` maps `β_{1,n}` to
/// `β_{2,n}` up to terms the normalization treats differently; returns the
/// image for inspection.
pub fn swap_12(f: &Polynomial) -> Result<Polynomial> {
    let r = roberts();
    let imgs = [
        ("x1", r.x(2)),
        ("x2", r.x(1)),
        ("y1", r.y(2)),
        ("y2", r.y(1)),
    ];
    f.substitute_named(&imgs)
}

/// The graded pieces `(3,2,2)` and `(5,4,4)` of `ker D`, over `k[x,y]` and
/// over the full ring.
pub fn graded_kernel_check() -> VerificationReport {
    let r = roberts();
    let mut rep = VerificationReport::new(
        "roberts-kernels",
        "ker D in k[x,y] of degree (3,2,2) is spanned by x1^3 x2^2 x3^2, and of degree (5,4,4) by x1^5x2^4x3^4, x1^2x2x3^4 u12, x1^2x2^4x3 u13",
    );
    let xy: Vec<&str> = super::VARIABLES[..6].to_vec();
    let run = |rep: &mut VerificationReport| -> Result<()> {
        let d = r.derivation();
        let w = r.weights();
        let d322 = MultiDegree(vec![3, 2, 2]);
        let k = d.graded_kernel(w, &d322, Some(&xy))?;
        let expected = [r.parse("x1^3*x2^2*x3^2")?];
        rep.expect(
            k.dim() == 1 && k.spans_same_as(&expected),
            format!("(3,2,2) over k[x,y]: dimension {}, basis {}", k.dim(), join(&k.basis)),
        );
        let k = d.graded_kernel(w, &MultiDegree(vec![5, 4, 4]), Some(&xy))?;
        let expected = r.kernel_544(1);
        rep.expect(
            k.dim() == 3 && k.spans_same_as(&expected),
            format!("(5,4,4) over k[x,y]: dimension {}, spanned by {}", k.dim(), join(&expected)),
        );
        let k = d.graded_kernel(w, &d322, None)?;
        let expected = [r.parse("x1^3*x2^2*x3^2")?, r.beta(1, 1)?];
        rep.expect(
            k.dim() == 2 && k.spans_same_as(&expected),
            format!("(3,2,2) over the full ring: dimension {}, spanned by {}", k.dim(), join(&expected)),
        );
        let monomials = w.monomial_basis(&d322, None)?;
        let texts: Vec<String> = monomials.iter().map(|m| Polynomial::monomial_text(r.ring(), m)).collect();
        rep.note(format!("monomials of degree (3,2,2): {}", texts.join(", ")));
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("; ")
}

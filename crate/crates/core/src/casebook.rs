//! Small worked examples: the monomial subring `R = k[x, xy, xy^2, ...]` of
//! `k[x,y]`, the Danielewski surface `xz - y^2 + y = 0` as `SL2/T`, and its
//! quotient by the Weyl involution.

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivation::{span_dimension, Derivation};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{rat, ratio, Monomial, Polynomial, Rational, VariableSet};
use crate::report::VerificationReport;
use crate::separating::{solve_group_element, PointFlow, RationalPoint};

pub const DEFAULT_DEGREE_BOUND: u32 = 6;
pub const DEFAULT_TRIALS: usize = 500;
pub const DEFAULT_SEED: u64 = 0x5eed_0003;

/// Remainder of `f` on division by a single polynomial `g`. A single
/// polynomial is a Groebner basis of the ideal it generates, so the
/// remainder is zero iff `g` divides `f`.
pub fn remainder_by(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (lm, lc) = g.leading_term()?;
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Ok((m, c)) = p.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match m.div(lm) {
            Some(q) => p = p.try_sub(&g.mul_term(&q, &(&c / lc)))?,
            None => {
                rem.push((m.clone(), c));
                p = p.filter_terms(|t| t != &m);
            }
        }
    }
    Ok(Polynomial::from_terms(f.ring(), rem))
}

// ---------------------------------------------------------------------------
// The monomial subring R = k + x k[x,y].

pub fn example1_ring() -> &'static Arc<VariableSet> {
    static CELL: OnceLock<Arc<VariableSet>> = OnceLock::new();
    CELL.get_or_init(|| VariableSet::new(&["x", "y"]).expect("fixed names"))
}

/// `f` lies in `R` iff every nonconstant monomial of `f` is divisible by `x`.
pub fn example1_membership(f: &Polynomial) -> bool {
    f.terms().iter().all(|(m, _)| m.is_one() || m.exponent(0) > 0)
}

/// The three cases of the conductor description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConductorCase {
    /// `f` in the maximal ideal `x k[x,y]`.
    M0,
    /// `f` in `R` with nonzero constant term.
    RMinusM0,
    /// `f` not in `R`.
    NotInR,
}

pub fn classify(f: &Polynomial) -> ConductorCase {
    if !example1_membership(f) {
        ConductorCase::NotInR
    } else if f.coefficient(&Monomial::one(2)).is_zero() {
        ConductorCase::M0
    } else {
        ConductorCase::RMinusM0
    }
}

fn monomials_up_to(d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|t| (0..=t).map(move |a| Monomial::from_exponents([a, t - a])))
        .collect()
}

/// Dimension of `{f g : deg g <= d, f g in R}`, computed from the linear
/// conditions "no pure power of `y` survives".
fn intersection_dim(f: &Polynomial, d: u32) -> usize {
    let basis = monomials_up_to(d);
    let products: Vec<Polynomial> = basis.iter().map(|m| f.mul_term(m, &Rational::one())).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let top = f.total_degree() as u32 + d;
    for k in 1..=top {
        let ym = Monomial::from_exponents([0, k]);
        let row: Vec<Rational> = products.iter().map(|p| p.coefficient(&ym)).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    linalg::nullspace(&rows, basis.len()).len()
}

/// Dimension of `h * S_d` where `S_d` is spanned by the given multiplier
/// monomials, i.e. of `h * span(S_d)`; multiplication by `h != 0` is injective.
fn claimed_dim(h: &Polynomial, multipliers: &[Monomial]) -> usize {
    let ps: Vec<Polynomial> = multipliers.iter().map(|m| h.mul_term(m, &Rational::one())).collect();
    span_dimension(&ps)
}

/// Compares the intersection `f k[x,y] ∩ R` with the claimed description,
/// truncated to multipliers of degree at most `bound`. Returns the case, the
/// claimed dimension and the actual dimension.
pub fn example1_conductor_check(f: &Polynomial, bound: u32) -> Result<(ConductorCase, usize, usize)> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("f must be nonzero".into()));
    }
    let case = classify(f);
    let all = monomials_up_to(bound);
    let in_r: Vec<Monomial> = all.iter().filter(|m| m.is_one() || m.exponent(0) > 0).cloned().collect();
    let claimed = match case {
        ConductorCase::M0 => claimed_dim(f, &all),
        ConductorCase::RMinusM0 => claimed_dim(f, &in_r),
        // (x f) R, with multiplier x h of degree <= bound.
        ConductorCase::NotInR => {
            let xf = f.mul_term(&Monomial::from_exponents([1, 0]), &Rational::one());
            let h: Vec<Monomial> = in_r.iter().filter(|m| m.total_degree() < bound as u64).cloned().collect();
            claimed_dim(&xf, &h)
        }
    };
    Ok((case, claimed, intersection_dim(f, bound)))
}

/// The corrected third case: for `f` outside `R` the intersection is
/// `x f k[x,y]`.
pub fn example1_corrected_dim(f: &Polynomial, bound: u32) -> (usize, usize) {
    let xf = f.mul_term(&Monomial::from_exponents([1, 0]), &Rational::one());
    let multipliers: Vec<Monomial> = monomials_up_to(bound).into_iter().filter(|m| m.total_degree() < bound as u64).collect();
    (claimed_dim(&xf, &multipliers), intersection_dim(f, bound))
}

/// The witness that `(x f) R` misses part of the intersection for `f = y`:
/// `x y^2` lies in `y k[x,y] ∩ R` but `x y^2 = (x y) y` with `y` not in `R`.
pub fn example1_case3_witness() -> (Polynomial, bool, bool) {
    let ring = example1_ring();
    let w = Polynomial::parse(ring, "x*y^2").expect("fixed text");
    let in_r = example1_membership(&w);
    let cofactor = Polynomial::parse(ring, "y").expect("fixed text");
    (w, in_r, example1_membership(&cofactor))
}

pub fn example1_conductor_report(bound: u32) -> VerificationReport {
    let mut report = VerificationReport::new(
        "example1-conductor",
        "f k[x,y] ∩ R is f k[x,y], f R or (x f) R according as f is in m0, in R but not m0, or not in R",
    )
    .param("degree_bound", bound);
    let cases = ["x", "x*y^3 + x^2", "1 + x*y", "2 - x + x*y^2", "y", "x + y", "y^2 + x*y"];
    for text in cases {
        let f = Polynomial::parse(example1_ring(), text).expect("fixed text");
        match example1_conductor_check(&f, bound) {
            Ok((case, claimed, actual)) => report.expect(
                claimed == actual,
                format!("f = {f}: {case:?}, claimed description has dimension {claimed}, intersection {actual}"),
            ),
            Err(e) => report.fail(e.to_string()),
        }
        if classify(&f) == ConductorCase::NotInR {
            let (c, a) = example1_corrected_dim(&f, bound);
            report.note(format!("f = {f}: (x f) k[x,y] has dimension {c}, intersection {a}; equal: {}", c == a));
        }
    }
    let (w, in_r, cof) = example1_case3_witness();
    report.note(format!(
        "witness {w}: in R = {in_r}, its cofactor over x*y in R = {cof}; the third case holds with (x f) k[x,y] in place of (x f) R"
    ));
    report
}

pub fn example1_membership_report() -> VerificationReport {
    let ring = example1_ring();
    let mut report = VerificationReport::new("example1-membership", "R = k + m0 with m0 = x k[x,y]");
    let cases = [("x*y^5", true), ("y", false), ("3 + 2*x*y", true), ("x + y^2", false), ("7", true)];
    for (text, expected) in cases {
        let f = Polynomial::parse(ring, text).expect("fixed text");
        report.expect(example1_membership(&f) == expected, format!("{f} in R: {}", example1_membership(&f)));
    }
    // Every generator x y^k is in m0, and products of members stay in R.
    let gens: Vec<Polynomial> = (0..=6)
        .map(|k| Polynomial::monomial(ring, Monomial::from_exponents([1, k]), Rational::one()))
        .collect();
    let closed = gens.iter().all(|a| gens.iter().all(|b| example1_membership(&(a * b))));
    report.expect(closed, "products of generators x*y^k stay in R");
    report
}

/// `phi(x,y) = (x, xy)` separates the same sampled pairs as the generators
/// `x y^k`, `k <= bound`.
pub fn example1_phi_separation(trials: usize, bound: u32, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new(
        "example1-phi",
        "phi(x,y) = (x, xy) separates the same points as the generators x*y^k",
    )
    .param("trials", trials)
    .param("degree_bound", bound)
    .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eval = |p: (i64, i64)| -> (Vec<Rational>, (Rational, Rational)) {
        let (x, y) = (rat(p.0), rat(p.1));
        let gens = (0..=bound).map(|k| &x * num_traits::pow(y.clone(), k as usize)).collect();
        (gens, (x.clone(), &x * &y))
    };
    let fixed = [((0, 5), (0, 7)), ((1, 2), (1, 3))];
    let mut agree = 0;
    for t in 0..trials {
        let pair = if t < fixed.len() {
            fixed[t]
        } else {
            let v = (rng.random_range(-3..=3), rng.random_range(-5..=5));
            let w = match t % 3 {
                0 => (v.0, rng.random_range(-5..=5)),
                1 => (0, rng.random_range(-5..=5)),
                _ => (rng.random_range(-3..=3), rng.random_range(-5..=5)),
            };
            let v = if t % 3 == 1 { (0, v.1) } else { v };
            (v, w)
        };
        let (ga, pa) = eval(pair.0);
        let (gb, pb) = eval(pair.1);
        if (ga == gb) != (pa == pb) {
            report.fail(format!("{:?} vs {:?}: generators equal {}, phi equal {}", pair.0, pair.1, ga == gb, pa == pb));
        }
        agree += (pa == pb) as usize;
    }
    report.note(format!("{trials} pairs, {agree} with equal phi values, no disagreement with the generators"));
    report
}

// ---------------------------------------------------------------------------
// The Danielewski surface.

/// `k[x,y,z] / (y^2 - y - x z)` with normal forms of `y`-degree at most 1.
pub struct QuadricRing {
    ring: Arc<VariableSet>,
    quadric: Polynomial,
}

pub fn quadric_ring() -> &'static QuadricRing {
    static CELL: OnceLock<QuadricRing> = OnceLock::new();
    CELL.get_or_init(|| {
        let ring = VariableSet::new(&["x", "y", "z"]).expect("fixed names");
        let quadric = Polynomial::parse(&ring, "x*z - y^2 + y").expect("fixed text");
        QuadricRing { ring, quadric }
    })
}

impl QuadricRing {
    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    /// `xz - y^2 + y`.
    pub fn quadric(&self) -> &Polynomial {
        &self.quadric
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.ring, text)
    }

    /// Normal form: replace `y^2` by `y + x z` until every `y`-degree is at most 1.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let tail = self.parse("y + x*z")?;
        let mut p = f.clone();
        loop {
            let high: Vec<(Monomial, Rational)> =
                p.terms().iter().filter(|(m, _)| m.exponent(1) >= 2).cloned().collect();
            if high.is_empty() {
                return Ok(p);
            }
            let mut next = p.filter_terms(|m| m.exponent(1) < 2);
            for (m, c) in high {
                let rest = m.div(&Monomial::variable(3, 1, 2)).expect("y^2 divides");
                next = &next + &tail.mul_term(&rest, &c);
            }
            p = next;
        }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.reduce(&a.try_mul(b)?)
    }

    pub fn is_normal(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| m.exponent(1) <= 1)
    }

    /// `(2y - 1) d/dx + z d/dy`, the action induced by left multiplication
    /// on `SL2` through `[a b; c d] -> (ab, ad, cd)`.
    pub fn derivation(&self) -> Derivation {
        Derivation::from_text(&self.ring, &[("x", "2*y - 1"), ("y", "z")])
            .and_then(|d| d.certified(4))
            .expect("triangular derivation")
    }

    /// The Weyl involution `(x, y, z) -> (-x, 1 - y, -z)`.
    pub fn sigma(&self, f: &Polynomial) -> Result<Polynomial> {
        f.substitute(&[self.parse("-x")?, self.parse("1 - y")?, self.parse("-z")?])
    }

    /// Kernel of the induced derivation on normal forms of total degree at
    /// most `d`, as normal forms.
    pub fn invariants_up_to(&self, d: u32) -> Result<Vec<Polynomial>> {
        let der = self.derivation();
        let basis: Vec<Monomial> = (0..=d)
            .flat_map(|t| {
                (0..=t).flat_map(move |a| (0..=1.min(t - a)).map(move |e| Monomial::from_exponents([a, e, t - a - e])))
            })
            .collect();
        let images: Vec<Polynomial> = basis
            .iter()
            .map(|m| self.reduce(&der.apply(&Polynomial::monomial(&self.ring, m.clone(), Rational::one()))?))
            .collect::<Result<_>>()?;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for (j, img) in images.iter().enumerate() {
            for (m, c) in img.terms() {
                let r = *index.entry(m.clone()).or_insert_with(|| {
                    rows.push(vec![Rational::zero(); basis.len()]);
                    rows.len() - 1
                });
                rows[r][j] = c.clone();
            }
        }
        Ok(linalg::nullspace(&rows, basis.len())
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(
                    &self.ring,
                    v.into_iter().zip(&basis).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (m.clone(), c)),
                )
            })
            .collect())
    }
}

fn sl2_ring() -> Arc<VariableSet> {
    VariableSet::new(&["a", "b", "c", "d"]).expect("fixed names")
}

/// The five clauses for the Danielewski surface.
pub fn danielewski_checks(samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new(
        "danielewski",
        "SL2/T is the quadric xz - y^2 + y = 0; the plinth ideal is generated by z and the zero fiber is two orbits",
    )
    .param("samples", samples)
    .param("seed", seed);
    if let Err(e) = danielewski_body(&mut report, samples, seed) {
        report.fail(e.to_string());
    }
    report
}

fn danielewski_body(report: &mut VerificationReport, samples: usize, seed: u64) -> Result<()> {
    let q = quadric_ring();
    let m = sl2_ring();
    let det = Polynomial::parse(&m, "a*d - b*c - 1")?;
    let proj = [Polynomial::parse(&m, "a*b")?, Polynomial::parse(&m, "a*d")?, Polynomial::parse(&m, "c*d")?];

    // (i) The quotient map lands in the quadric.
    let pulled = q.quadric().substitute(&proj)?;
    let r = remainder_by(&pulled, &det)?;
    report.expect(r.is_zero(), format!("(i) (ab)(cd) - (ad)^2 + ad = {pulled} is divisible by ad - bc - 1"));

    // (ii) The derivation preserves the quadric and z is a local slice target.
    let d = q.derivation();
    let dq = d.apply(q.quadric())?;
    let z = q.parse("z")?;
    let y = q.parse("y")?;
    report.expect(
        dq.is_zero() && d.is_invariant(&z) && d.local_slice_check(&z, &y),
        format!("(ii) D(xz - y^2 + y) = {dq}, D(z) = 0, D(y) = z"),
    );

    // (iii) Left multiplication by [1 s; 0 1] on matrix entries projects to the flow.
    let dm = Derivation::from_text(&m, &[("a", "c"), ("b", "d")])?.certified(3)?;
    let mut ok3 = true;
    for (i, p) in proj.iter().enumerate() {
        let (upstairs, s_m) = dm.flow_symbolic(p)?;
        let (down, _) = d.flow_symbolic(&Polynomial::variable(q.ring(), i))?;
        // Substitute the projection and identify the two flow parameters.
        let ext = s_m.ring();
        let mut images: Vec<Polynomial> = proj.iter().map(|f| f.embed(ext)).collect::<Result<_>>()?;
        images.push(s_m.clone());
        let diff = down.substitute(&images)?.try_sub(&upstairs)?;
        let r = remainder_by(&diff, &det.embed(ext)?)?;
        ok3 &= r.is_zero();
    }
    report.expect(ok3, "(iii) the flow on (ab, ad, cd) agrees with the flow on (x, y, z) modulo ad - bc - 1");

    // (iv) The zero fiber of z is the two disjoint lines y = 0 and y = 1, each one orbit.
    let zero = Polynomial::zero(q.ring());
    let restricted = q.quadric().substitute(&[q.parse("x")?, y.clone(), zero.clone()])?;
    let factored = q.parse("-y^2 + y")?;
    let (orbit1, s) = d.flow_symbolic(&q.parse("x")?)?;
    let at = |p: &Polynomial, pt: [i64; 3]| -> Result<Polynomial> {
        let ext = p.ring().clone();
        let mut im: Vec<Polynomial> = pt.iter().map(|&c| Polynomial::integer(&ext, c)).collect();
        im.push(s.clone());
        p.substitute(&im)
    };
    let through_o1 = at(&orbit1, [0, 1, 0])?;
    let through_o2 = at(&orbit1, [0, 0, 0])?;
    let ok4 = restricted == factored && through_o1 == s && through_o2 == -s.clone();
    report.expect(
        ok4,
        format!(
            "(iv) on z = 0 the quadric is {restricted} = y(1 - y); x along the orbit of (0,1,0) is {through_o1}, of (0,0,0) is {through_o2}"
        ),
    );

    // (v) Points with equal nonzero z lie on one orbit.
    let flow = PointFlow::new(&d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let on_quadric = |y: Rational, z: Rational| -> Result<RationalPoint> {
        let x = (&y * &y - &y) / &z;
        RationalPoint::new(q.ring(), vec![x, y, z])
    };
    let mut solved = 0;
    for _ in 0..samples {
        let mut zv = 0;
        while zv == 0 {
            zv = rng.random_range(-6..=6);
        }
        let zr = ratio(zv, rng.random_range(1..=3));
        let v = on_quadric(rat(rng.random_range(-9..=9)), zr.clone())?;
        let w = on_quadric(ratio(rng.random_range(-9..=9), rng.random_range(1..=4)), zr)?;
        if q.quadric().evaluate(v.coords())? != Rational::zero() || q.quadric().evaluate(w.coords())? != Rational::zero() {
            report.fail(format!("sampled point {v} or {w} is off the quadric"));
            continue;
        }
        match solve_group_element(&v, &w, &flow)? {
            Some(s) if flow.apply(&v, &s)? == w => solved += 1,
            _ => report.fail(format!("(v) {v} and {w} have equal z but no group element")),
        }
    }
    report.note(format!("(v) {solved} of {samples} sampled pairs with equal z != 0 joined by the flow"));
    Ok(())
}

/// The quotient `SL2/N` by the Weyl involution.
pub fn sl2_mod_n_checks(degree_bound: u32) -> VerificationReport {
    let mut report = VerificationReport::new(
        "sl2-mod-n",
        "SL2/N: the Weyl involution commutes with the action, its invariant quotient coordinate is z^2, and the plinth ideal is not prime",
    )
    .param("degree_bound", degree_bound);
    if let Err(e) = sl2_mod_n_body(&mut report, degree_bound) {
        report.fail(e.to_string());
    }
    report
}

fn sl2_mod_n_body(report: &mut VerificationReport, bound: u32) -> Result<()> {
    let q = quadric_ring();
    let d = q.derivation();
    let sq = q.sigma(q.quadric())?;
    report.expect(&sq == q.quadric(), format!("sigma(xz - y^2 + y) = {sq}"));

    // flow_s(sigma p) against sigma(flow_{+s} p) and sigma(flow_{-s} p).
    let mut signs = Vec::new();
    for sign in [1i64, -1] {
        let mut ok = true;
        for i in 0..3 {
            let v = Polynomial::variable(q.ring(), i);
            let (g, s) = d.flow_symbolic(&v)?;
            let ext = s.ring().clone();
            let sigma_ext = [
                Polynomial::parse(&ext, "-x")?,
                Polynomial::parse(&ext, "1 - y")?,
                Polynomial::parse(&ext, "-z")?,
                s.clone(),
            ];
            let lhs = g.substitute(&sigma_ext)?;
            let sv = q.sigma(&v)?.embed(&ext)?;
            let mut flow_images = Vec::new();
            for j in 0..3 {
                let (gj, _) = d.flow_symbolic(&Polynomial::variable(q.ring(), j))?;
                flow_images.push(gj.substitute(&[
                    Polynomial::variable(&ext, 0),
                    Polynomial::variable(&ext, 1),
                    Polynomial::variable(&ext, 2),
                    s.scale(&rat(sign)),
                ])?);
            }
            flow_images.push(s.clone());
            let rhs = sv.substitute(&flow_images)?;
            ok &= lhs == rhs;
        }
        if ok {
            signs.push(sign);
        }
    }
    report.expect(
        signs == vec![1],
        format!("sigma commutes with the flow with parameter sign {:?}", signs),
    );

    let z = q.parse("z")?;
    report.expect(q.sigma(&z)? == -z.clone(), "sigma(z) = -z on the quotient coordinate");

    // Invariants of bounded degree are k[z]; the sigma-fixed part is k[z^2].
    let inv = q.invariants_up_to(bound)?;
    let z_only = inv.iter().all(|f| f.terms().iter().all(|(m, _)| m.exponent(0) == 0 && m.exponent(1) == 0));
    report.expect(
        z_only && inv.len() == bound as usize + 1,
        format!("invariant normal forms of degree <= {bound} span k[z] in degrees 0..{bound} ({} elements)", inv.len()),
    );
    let rows: Vec<Polynomial> = inv.iter().map(|f| q.sigma(f)?.try_sub(f)).collect::<Result<_>>()?;
    let fixed_dim = inv.len() - span_dimension(&rows);
    let even = inv
        .iter()
        .filter(|f| q.sigma(f).map(|g| &g == *f).unwrap_or(false))
        .all(|f| f.terms().iter().all(|(m, _)| m.exponent(2) % 2 == 0));
    report.expect(
        fixed_dim == bound as usize / 2 + 1 && even,
        format!("sigma-fixed invariants have dimension {fixed_dim} = dim k[z^2] in degree <= {bound}"),
    );

    // w = z(y - 1/2) is sigma-invariant with D(w) = z^2 and w^2 = z^2 (xz + 1/4),
    // while w is not in z^2 O(Y): y - 1/2 does not vanish at (0,0,0).
    let w = q.parse("y*z - 1/2*z")?;
    let w_inv = q.sigma(&w)? == w;
    let dw = d.apply(&w)?;
    let w2 = q.mul(&w, &w)?;
    let rhs = q.reduce(&q.parse("x*z^3 + 1/4*z^2")?)?;
    let origin = [Rational::zero(), Rational::zero(), Rational::zero()];
    let off = !q.parse("y - 1/2")?.evaluate(&origin)?.is_zero() && q.quadric().evaluate(&origin)?.is_zero();
    report.expect(
        w_inv && dw == q.parse("z^2")? && w2 == rhs && off,
        format!("plinth ideal z^2 O(Y) is not prime: w = {w}, D(w) = {dw}, w^2 = {w2} in z^2 O(Y), w not in it"),
    );
    Ok(())
}

/// All casebook reports.
pub fn casebook_reports(bound: u32, trials: usize, seed: u64) -> Vec<VerificationReport> {
    vec![
        example1_membership_report(),
        example1_conductor_report(bound),
        example1_phi_separation(trials, bound, seed),
        danielewski_checks(200, seed),
        sl2_mod_n_checks(bound),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let r = example1_ring();
        assert!(example1_membership(&Polynomial::parse(r, "x*y^5").unwrap()));
        assert!(!example1_membership(&Polynomial::parse(r, "y").unwrap()));
        assert!(example1_membership(&Polynomial::parse(r, "3 + 2*x*y").unwrap()));
    }

    #[test]
    fn conductor_first_two_cases_hold() {
        let r = example1_ring();
        for (text, case) in [("x", ConductorCase::M0), ("1 + x*y", ConductorCase::RMinusM0)] {
            let (c, claimed, actual) = example1_conductor_check(&Polynomial::parse(r, text).unwrap(), 6).unwrap();
            assert_eq!(c, case);
            assert_eq!(claimed, actual);
        }
    }

    #[test]
    fn conductor_third_case_needs_full_multiplier_ring() {
        let y = Polynomial::parse(example1_ring(), "y").unwrap();
        let (c, claimed, actual) = example1_conductor_check(&y, 6).unwrap();
        assert_eq!(c, ConductorCase::NotInR);
        assert!(claimed < actual);
        let (c, a) = example1_corrected_dim(&y, 6);
        assert_eq!(c, a);
    }

    #[test]
    fn quadric_normal_form() {
        let q = quadric_ring();
        let f = q.reduce(&q.parse("y^3").unwrap()).unwrap();
        assert_eq!(f, q.reduce(&q.parse("y + x*z + x*y*z").unwrap()).unwrap());
        assert!(q.is_normal(&f));
        assert!(q.reduce(q.quadric()).unwrap().is_zero());
    }

    #[test]
    fn remainder_detects_divisibility() {
        let q = quadric_ring();
        let g = q.parse("x*z - 1").unwrap();
        let f = q.parse("x^2*z^2 - 1").unwrap();
        assert!(remainder_by(&f, &g).unwrap().is_zero());
        assert!(!remainder_by(&q.parse("x").unwrap(), &g).unwrap().is_zero());
    }
}

//! Separation of rational points by finite sets of invariants.
//!
//! Verdicts are relative to the supplied generator set only; every report
//! names the set it used.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::polyring::{rat, Polynomial, Rational, VariableSet};
use crate::report::VerificationReport;
use crate::roberts::roberts;
use crate::sagbi::GeneratorSet;

pub const DEFAULT_SEED: u64 = 0x5eed_0007;
pub const DEFAULT_TRIALS: usize = 1000;

/// A point with a rational value for every ambient variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    ring: Arc<VariableSet>,
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(ring: &Arc<VariableSet>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != ring.len() {
            return Err(Error::InvalidArgument(format!(
                "point has {} coordinates, the ring has {} variables",
                coords.len(),
                ring.len()
            )));
        }
        Ok(Self {
            ring: ring.clone(),
            coords,
        })
    }

    pub fn from_integers(ring: &Arc<VariableSet>, coords: &[i64]) -> Result<Self> {
        Self::new(ring, coords.iter().map(|&c| rat(c)).collect())
    }

    /// Parses comma-separated rationals in ambient-variable order.
    pub fn parse(ring: &Arc<VariableSet>, text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational>()
                    .map_err(|_| Error::InvalidArgument(format!("`{}` is not a rational number", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, coords)
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, name: &str) -> Result<&Rational> {
        Ok(&self.coords[self.ring.require(name)?])
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The outcome of comparing two points generator by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub set: String,
    pub v: RationalPoint,
    pub w: RationalPoint,
    pub agreeing: Vec<String>,
    /// First generator with different values, and those values.
    pub disagreeing: Option<(String, Rational, Rational)>,
}

impl SeparationReport {
    pub fn separated(&self) -> bool {
        self.disagreeing.is_some()
    }
}

/// Evaluates generators in index order and stops at the first disagreement.
pub fn separates(v: &RationalPoint, w: &RationalPoint, g: &GeneratorSet, set_name: &str) -> Result<SeparationReport> {
    for p in [v, w] {
        if p.ring() != g.ring() {
            return Err(Error::RingMismatch);
        }
    }
    let mut agreeing = Vec::new();
    let mut disagreeing = None;
    for (i, f) in g.generators().iter().enumerate() {
        let (a, b) = (f.evaluate(v.coords())?, f.evaluate(w.coords())?);
        if a == b {
            agreeing.push(g.name(i).to_string());
        } else {
            disagreeing = Some((g.name(i).to_string(), a, b));
            break;
        }
    }
    Ok(SeparationReport {
        set: set_name.to_string(),
        v: v.clone(),
        w: w.clone(),
        agreeing,
        disagreeing,
    })
}

/// The flow of a certified derivation as coordinate polynomials in a
/// parameter `s`.
pub struct PointFlow {
    ring: Arc<VariableSet>,
    ext: Arc<VariableSet>,
    images: Vec<Polynomial>,
}

impl PointFlow {
    pub fn new(d: &Derivation) -> Result<Self> {
        let ring = d.ring().clone();
        let mut images = Vec::with_capacity(ring.len());
        let mut ext = None;
        for i in 0..ring.len() {
            let (g, s) = d.flow_symbolic(&Polynomial::variable(&ring, i))?;
            ext.get_or_insert_with(|| s.ring().clone());
            images.push(g);
        }
        Ok(Self {
            ext: ext.expect("nonempty ring"),
            ring,
            images,
        })
    }

    /// `flow_s(v)`.
    pub fn apply(&self, v: &RationalPoint, s: &Rational) -> Result<RationalPoint> {
        let mut point = v.coords().to_vec();
        point.push(s.clone());
        let coords = self.images.iter().map(|g| g.evaluate(&point)).collect::<Result<Vec<_>>>()?;
        RationalPoint::new(&self.ring, coords)
    }

    /// Coordinates of `flow_s(v)` as univariate polynomials in `s`,
    /// coefficients listed from the constant term up.
    pub fn univariate(&self, v: &RationalPoint) -> Result<Vec<Vec<Rational>>> {
        if v.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let npar = self.ext.len() - 1;
        let mut subs: Vec<Polynomial> = v.coords().iter().map(|c| Polynomial::constant(&self.ext, c.clone())).collect();
        subs.push(Polynomial::variable(&self.ext, npar));
        self.images
            .iter()
            .map(|g| {
                let h = g.substitute(&subs)?;
                let deg = h.degree_in(npar);
                Ok((0..=deg)
                    .map(|e| h.coefficient_of_power(npar, e).as_constant().unwrap_or_else(Rational::zero))
                    .collect())
            })
            .collect()
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let q = r.last().expect("nonempty") / lb;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        trim(&mut r);
    }
    r
}

fn poly_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= 1 << 40).ok_or_else(|| {
        Error::InvalidArgument("rational root search needs coefficients below 2^40".into())
    })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn eval_univariate(p: &[Rational], s: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * s + c)
}

/// Rational roots of a nonzero univariate polynomial, ascending.
pub fn rational_roots(p: &[Rational]) -> Result<Vec<Rational>> {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.is_empty() {
        return Err(Error::InvalidArgument("the zero polynomial has every root".into()));
    }
    let mut roots = Vec::new();
    let lead_zeros = p.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rational::zero());
        p.drain(..lead_zeros);
    }
    if p.len() == 2 {
        roots.push(-&p[0] / &p[1]);
    } else if p.len() > 2 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        for num in divisors(&ints[0])? {
            for den in divisors(ints.last().expect("nonempty"))? {
                for sign in [1, -1] {
                    let cand = Rational::new(BigInt::from(sign) * &num, den.clone());
                    if eval_univariate(&p, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// The parameter `s` with `flow_s(v) = w`, or `None`. When every `s` works
/// (a fixed point with `v = w`) the answer is 0.
pub fn solve_group_element(v: &RationalPoint, w: &RationalPoint, flow: &PointFlow) -> Result<Option<Rational>> {
    if v.ring() != w.ring() {
        return Err(Error::RingMismatch);
    }
    let mut g: Vec<Rational> = Vec::new();
    for (mut eq, target) in flow.univariate(v)?.into_iter().zip(w.coords()) {
        eq[0] -= target;
        g = poly_gcd(g, eq);
        if g.len() == 1 {
            return Ok(None);
        }
    }
    if g.is_empty() {
        return Ok(Some(Rational::zero()));
    }
    Ok(rational_roots(&g)?.into_iter().next())
}

/// The kind of pair a sampler produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairKind {
    /// `w = flow_s(v)`.
    Flow(Rational),
    /// Independent points.
    Random,
    /// Both points in the plinth locus.
    Plinth,
    /// A flow pair with one coordinate of `w` moved off the orbit.
    OffFlow,
    /// Equal on the coordinates that the group fixes, otherwise independent.
    SameBase,
}

pub struct SampledPair {
    pub v: RationalPoint,
    pub w: RationalPoint,
    pub kind: PairKind,
}

/// A deterministic source of point pairs for one action.
pub trait PairSampler: Sync {
    fn name(&self) -> String;
    fn derivation(&self) -> &Derivation;
    fn flow(&self) -> &PointFlow;
    fn in_plinth(&self, v: &RationalPoint) -> bool;
    fn sample(&self, trial: usize, rng: &mut ChaCha8Rng) -> Result<SampledPair>;
}

/// Pairs for the seven-dimensional action, cycling through the pair kinds.
/// Coordinates are small integers and `x` entries are often zero, so the
/// partially degenerate strata get exercised.
pub struct RobertsSampler {
    flow: PointFlow,
}

impl RobertsSampler {
    pub fn new() -> Result<Self> {
        Ok(Self {
            flow: PointFlow::new(roberts().derivation())?,
        })
    }

    fn point(&self, rng: &mut ChaCha8Rng, zero_x: bool) -> RationalPoint {
        let ring = roberts().ring();
        let coords = (0..7)
            .map(|i| {
                if i < 3 {
                    if zero_x {
                        Rational::zero()
                    } else {
                        rat(rng.random_range(-2..=2))
                    }
                } else {
                    rat(rng.random_range(-5..=5))
                }
            })
            .collect();
        RationalPoint::new(ring, coords).expect("seven coordinates")
    }

    fn moving_point(&self, rng: &mut ChaCha8Rng) -> RationalPoint {
        loop {
            let v = self.point(rng, false);
            if !self.in_plinth(&v) {
                return v;
            }
        }
    }
}

impl PairSampler for RobertsSampler {
    fn name(&self) -> String {
        "roberts".into()
    }

    fn derivation(&self) -> &Derivation {
        roberts().derivation()
    }

    fn flow(&self) -> &PointFlow {
        &self.flow
    }

    fn in_plinth(&self, v: &RationalPoint) -> bool {
        v.coords()[..3].iter().all(|c| c.is_zero())
    }

    fn sample(&self, trial: usize, rng: &mut ChaCha8Rng) -> Result<SampledPair> {
        let s = rat(rng.random_range(-5..=5));
        let (v, w, kind) = match trial % 5 {
            0 => {
                let v = self.point(rng, false);
                let w = self.flow.apply(&v, &s)?;
                (v, w, PairKind::Flow(s))
            }
            1 => (self.point(rng, false), self.point(rng, false), PairKind::Random),
            2 => (self.point(rng, true), self.point(rng, true), PairKind::Plinth),
            3 => {
                let v = self.moving_point(rng);
                let mut w = self.flow.apply(&v, &s)?.coords().to_vec();
                let slot = rng.random_range(3..7);
                w[slot] += rat(rng.random_range(1..=3));
                (v, RationalPoint::new(roberts().ring(), w)?, PairKind::OffFlow)
            }
            _ => {
                let v = self.moving_point(rng);
                let mut w = self.point(rng, false).coords().to_vec();
                w[..3].clone_from_slice(&v.coords()[..3]);
                (v, RationalPoint::new(roberts().ring(), w)?, PairKind::SameBase)
            }
        };
        Ok(SampledPair { v, w, kind })
    }
}

/// The generators of `A_1`: `x1,x2,x3`, the three `u` and `beta_{i,1}`.
pub fn roberts_a1_set() -> Result<GeneratorSet> {
    let names = ["x1", "x2", "x3", "u12", "u13", "u23", "beta1_1", "beta2_1", "beta3_1"];
    let polys = roberts().a1_invariants()?;
    GeneratorSet::new(names.iter().map(|n| n.to_string()).zip(polys).collect())
}

/// `S_N` together with `x1, x2, x3` as a separating candidate.
pub fn roberts_s_set(big_n: u32) -> Result<GeneratorSet> {
    let g = roberts().generator_set(big_n)?;
    GeneratorSet::new(g.names().iter().cloned().zip(g.generators().iter().cloned()).collect())
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

#[derive(Default)]
struct GraphTally {
    flow: usize,
    solved: usize,
    plinth: usize,
    separated: usize,
    failures: Vec<String>,
}

impl GraphTally {
    fn merge(mut self, other: GraphTally) -> GraphTally {
        self.flow += other.flow;
        self.solved += other.solved;
        self.plinth += other.plinth;
        self.separated += other.separated;
        self.failures.extend(other.failures);
        self
    }
}

fn graph_trial(sampler: &dyn PairSampler, g: &GeneratorSet, set_name: &str, seed: u64, t: usize) -> GraphTally {
    let mut tally = GraphTally::default();
    let run = |tally: &mut GraphTally| -> Result<()> {
        let pair = sampler.sample(t, &mut trial_rng(seed, t))?;
        let sep = separates(&pair.v, &pair.w, g, set_name)?;
        let (pv, pw) = (sampler.in_plinth(&pair.v), sampler.in_plinth(&pair.w));
        if let PairKind::Flow(_) = pair.kind {
            tally.flow += 1;
            if let Some((name, a, b)) = &sep.disagreeing {
                tally.failures.push(format!("flow pair {} ~ {} separated by {name}: {a} vs {b}", pair.v, pair.w));
            }
        }
        if sep.separated() {
            tally.separated += 1;
        } else if !pv {
            match solve_group_element(&pair.v, &pair.w, sampler.flow())? {
                Some(s) if sampler.flow().apply(&pair.v, &s)? == pair.w => tally.solved += 1,
                _ => tally.failures.push(format!(
                    "unseparated pair {} ~ {} off the plinth locus has no group element",
                    pair.v, pair.w
                )),
            }
        }
        if pv && pw {
            tally.plinth += 1;
            if let Some((name, a, b)) = &sep.disagreeing {
                tally.failures.push(format!("plinth pair {} ~ {} separated by {name}: {a} vs {b}", pair.v, pair.w));
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut tally) {
        tally.failures.push(format!("trial {t}: {e}"));
    }
    tally
}

/// Unseparated pairs off the plinth locus lie on one orbit, flow pairs are
/// never separated, and pairs inside the plinth locus are never separated.
pub fn graph_vs_separation_sampling(
    sampler: &dyn PairSampler,
    g: &GeneratorSet,
    set_name: &str,
    trials: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("separating-graph-{}", sampler.name()),
        "off the plinth locus the separating variety is the graph of the action",
    )
    .param("set", set_name)
    .param("trials", trials)
    .param("seed", seed);
    if trials == 0 {
        report.fail("trials must be at least 1");
        return report;
    }
    let tally = (0..trials)
        .into_par_iter()
        .map(|t| graph_trial(sampler, g, set_name, seed, t))
        .reduce(GraphTally::default, GraphTally::merge);
    for f in tally.failures.iter().take(10) {
        report.fail(f.clone());
    }
    if tally.failures.len() > 10 {
        report.fail(format!("{} failures in total", tally.failures.len()));
    }
    report.note(format!(
        "{} flow pairs unseparated; {} unseparated pairs solved for s; {} plinth pairs unseparated; {} pairs separated by {set_name}",
        tally.flow, tally.solved, tally.plinth, tally.separated
    ));
    report
}

/// Two generator sets give the same verdict on every sampled pair.
pub fn separating_set_equivalence(
    sampler: &dyn PairSampler,
    small: (&GeneratorSet, &str),
    big: (&GeneratorSet, &str),
    trials: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("separating-equivalence-{}", sampler.name()),
        "the smaller set separates the same sampled pairs as the larger one",
    )
    .param("small", small.1)
    .param("big", big.1)
    .param("trials", trials)
    .param("seed", seed);
    if trials == 0 {
        report.fail("trials must be at least 1");
        return report;
    }
    let outcomes: Vec<Result<(bool, Option<String>)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let pair = sampler.sample(t, &mut trial_rng(seed, t))?;
            let a = separates(&pair.v, &pair.w, small.0, small.1)?;
            let b = separates(&pair.v, &pair.w, big.0, big.1)?;
            let mismatch = (a.separated() != b.separated()).then(|| {
                let witness = a.disagreeing.as_ref().or(b.disagreeing.as_ref()).map(|d| d.0.clone()).unwrap_or_default();
                format!(
                    "{} ~ {}: {} says {}, {} says {} (witness {witness})",
                    pair.v,
                    pair.w,
                    small.1,
                    a.separated(),
                    big.1,
                    b.separated()
                )
            });
            Ok((b.separated(), mismatch))
        })
        .collect();
    let mut separated = 0;
    let mut mismatches = 0;
    for o in outcomes {
        match o {
            Ok((sep, m)) => {
                separated += sep as usize;
                if let Some(m) = m {
                    mismatches += 1;
                    if mismatches <= 10 {
                        report.fail(m);
                    }
                }
            }
            Err(e) => report.fail(e.to_string()),
        }
    }
    report.note(format!(
        "{trials} pairs: {separated} separated and {} unseparated by both sets, {mismatches} mismatches",
        trials - separated
    ));
    report
}

/// The sampling suite: graph check against `A_1` and equivalence of `A_1`
/// with `S_4`.
pub fn roberts_separation_checks(trials: usize, seed: u64) -> Vec<VerificationReport> {
    let setup = || -> Result<(RobertsSampler, GeneratorSet, GeneratorSet)> {
        Ok((RobertsSampler::new()?, roberts_a1_set()?, roberts_s_set(4)?))
    };
    match setup() {
        Ok((sampler, a1, s4)) => vec![
            graph_vs_separation_sampling(&sampler, &a1, "A_1", trials, seed),
            separating_set_equivalence(&sampler, (&a1, "A_1"), (&s4, "S_4"), trials, seed),
        ],
        Err(e) => {
            let mut r = VerificationReport::new("separating-setup", "generator sets for the sampling checks");
            r.fail(e.to_string());
            vec![r]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> RationalPoint {
        RationalPoint::from_integers(roberts().ring(), c).unwrap()
    }

    #[test]
    fn point_text_round_trip() {
        let p = RationalPoint::parse(roberts().ring(), "1, -2/3, 0, 0, 5, 0, 7").unwrap();
        assert_eq!(p.to_string(), "1,-2/3,0,0,5,0,7");
        assert!(RationalPoint::parse(roberts().ring(), "1,2").is_err());
    }

    #[test]
    fn solve_recovers_parameter() {
        let flow = PointFlow::new(roberts().derivation()).unwrap();
        let v = pt(&[1, 2, 3, 0, 0, 0, 0]);
        let w = flow.apply(&v, &rat(5)).unwrap();
        assert_eq!(solve_group_element(&v, &w, &flow).unwrap(), Some(rat(5)));
        assert_eq!(solve_group_element(&v, &pt(&[1, 1, 1, 1, 1, 1, 0]), &flow).unwrap(), None);
        let fixed = pt(&[0, 0, 0, 4, 5, 6, 7]);
        assert_eq!(solve_group_element(&fixed, &fixed, &flow).unwrap(), Some(rat(0)));
    }

    #[test]
    fn unit_flow_of_ones_is_not_separated() {
        // (1,1,1,1,1,1,1) is flow_1 of (1,1,1,0,0,0,0).
        let flow = PointFlow::new(roberts().derivation()).unwrap();
        let v = pt(&[1, 1, 1, 0, 0, 0, 0]);
        let w = pt(&[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(flow.apply(&v, &rat(1)).unwrap(), w);
        let g = roberts_s_set(1).unwrap();
        assert!(!separates(&v, &w, &g, "S_1").unwrap().separated());
        let off = pt(&[1, 1, 1, 1, 1, 1, 0]);
        assert!(separates(&v, &off, &g, "S_1").unwrap().separated());
    }

    #[test]
    fn roots_of_quadratic() {
        let p = vec![rat(-6), rat(1), rat(1)];
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-3), rat(2)]);
        let q = vec![rat(1), rat(0), rat(1)];
        assert!(rational_roots(&q).unwrap().is_empty());
    }
}

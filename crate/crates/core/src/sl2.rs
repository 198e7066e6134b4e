//! Binary forms `V[n]` of SL2, restricted to the upper unipotent subgroup.
//!
//! A form is `F = sum_i c_i X^(n-i) Y^i`. The coordinate function `x_i`
//! reads `c_i` and has torus weight `n - 2i`; the basis vector `e_i` (the
//! form `X^(n-i) Y^i`) has weight `2i - n`. The unipotent element with
//! parameter `s` acts by `F(X, Y) -> F(X + sY, Y)`, which gives the raising
//! derivation `D(x_i) = (n - i + 1) x_(i-1)`, `D(x_0) = 0`.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::polyring::{rat, Monomial, MultiDegree, Polynomial, Rational, VariableSet, WeightSystem};
use crate::report::VerificationReport;

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 0x5eed_0005;

/// A direct sum `V[n_1] + V[n_2] + ...` with its coordinate ring.
///
/// A single summand uses coordinates `x0..xn`; a sum uses `a0..`, `b0..`,
/// and so on, one letter per summand.
#[derive(Debug, Clone)]
pub struct RepSum {
    summands: Vec<u32>,
    offsets: Vec<usize>,
    ring: Arc<VariableSet>,
    weights: WeightSystem,
}

/// Action of the Weyl element on the zero weight space `V[n]_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaAction {
    Trivial,
    MinusIdentity,
    ZeroSpace,
}

/// Which of the two plinth-pair components a pair lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    InC,
    InCSigma,
    Both,
    Neither,
}

fn summand_letter(s: usize) -> Result<char> {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvw";
    LETTERS
        .get(s)
        .map(|&c| c as char)
        .ok_or_else(|| Error::InvalidArgument("at most 23 summands are supported".into()))
}

impl RepSum {
    pub fn new(summands: Vec<u32>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::InvalidArgument("a representation needs at least one summand".into()));
        }
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut offsets = Vec::new();
        for (s, &n) in summands.iter().enumerate() {
            offsets.push(names.len());
            let prefix = if summands.len() == 1 { 'x' } else { summand_letter(s)? };
            for i in 0..=n {
                names.push(format!("{prefix}{i}"));
                weights.push(vec![1, n as i64 - 2 * i as i64]);
            }
        }
        let ring = VariableSet::new(&names)?;
        let weights = WeightSystem::new(&ring, weights)?;
        Ok(Self {
            summands,
            offsets,
            ring,
            weights,
        })
    }

    pub fn single(n: u32) -> Self {
        Self::new(vec![n]).expect("one summand")
    }

    /// Parses `V[4]+V[2]+V[0]`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse representation `{spec}`; expected e.g. V[4]+V[2]"));
        let mut out = Vec::new();
        for part in spec.split('+') {
            let p = part.trim();
            let inner = p.strip_prefix("V[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            out.push(inner.trim().parse::<u32>().map_err(|_| bad())?);
        }
        Self::new(out)
    }

    pub fn spec(&self) -> String {
        self.summands.iter().map(|n| format!("V[{n}]")).collect::<Vec<_>>().join("+")
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.ring.len()
    }

    /// Ambient index of coordinate `i` of summand `s`.
    pub fn index(&self, s: usize, i: u32) -> usize {
        self.offsets[s] + i as usize
    }

    pub fn coordinate(&self, s: usize, i: u32) -> Polynomial {
        Polynomial::variable(&self.ring, self.index(s, i))
    }

    /// The raising derivation, certified locally nilpotent.
    pub fn raising_derivation(&self) -> Derivation {
        let mut images = vec![Polynomial::zero(&self.ring); self.ring.len()];
        for (s, &n) in self.summands.iter().enumerate() {
            for i in 1..=n {
                images[self.index(s, i)] = self.coordinate(s, i - 1).scale(&rat((n - i + 1) as i64));
            }
        }
        let bound = *self.summands.iter().max().expect("nonempty") as usize + 2;
        Derivation::new(&self.ring, images)
            .and_then(|d| d.certified(bound))
            .expect("the raising derivation is nilpotent of order n + 1")
    }

    fn check_point(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "point has {} coordinates, the representation has dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `v` lies in `V+`: every component of nonpositive weight vanishes.
    pub fn nullcone_test(&self, v: &[Rational]) -> Result<bool> {
        self.check_point(v)?;
        Ok(self.vanish_where(v, |n, i| 2 * i <= n))
    }

    /// `v` lies in `V0 + V+`: every component of negative weight vanishes.
    pub fn plinth_test(&self, v: &[Rational]) -> Result<bool> {
        self.check_point(v)?;
        Ok(self.vanish_where(v, |n, i| 2 * i < n))
    }

    fn vanish_where(&self, v: &[Rational], pick: impl Fn(u32, u32) -> bool) -> bool {
        self.summands.iter().enumerate().all(|(s, &n)| {
            (0..=n).filter(|&i| pick(n, i)).all(|i| v[self.index(s, i)].is_zero())
        })
    }

    /// Weight-zero components, one per summand of even degree.
    pub fn v0_component(&self, v: &[Rational]) -> Vec<Rational> {
        self.summands
            .iter()
            .enumerate()
            .filter(|(_, &n)| n % 2 == 0)
            .map(|(s, &n)| v[self.index(s, n / 2)].clone())
            .collect()
    }

    /// The Weyl element applied summand-wise to a weight-zero component.
    pub fn sigma_v0(&self, v0: &[Rational]) -> Vec<Rational> {
        self.summands
            .iter()
            .filter(|&&n| n % 2 == 0)
            .zip(v0)
            .map(|(&n, a)| match sigma_on_v0(n) {
                SigmaAction::MinusIdentity => -a,
                _ => a.clone(),
            })
            .collect()
    }

    /// The quadratic invariants `f_k` of summand `s`, in this ring.
    pub fn quadratic_invariants_of(&self, s: usize) -> Result<Vec<Polynomial>> {
        let n = self.summands[s];
        let single = RepSum::single(n);
        let images: Vec<Polynomial> = (0..=n).map(|i| self.coordinate(s, i)).collect();
        quadratic_invariants(n)?
            .iter()
            .map(|f| {
                debug_assert!(Arc::ptr_eq(f.ring(), single.ring()) || f.ring() == single.ring());
                f.substitute(&images)
            })
            .collect()
    }

    /// Restriction to `V0 + V+`: coordinates of negative-weight components set to 0.
    pub fn restrict_to_plinth(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> = (0..self.dim()).map(|i| Polynomial::variable(&self.ring, i)).collect();
        for (s, &n) in self.summands.iter().enumerate() {
            for i in 0..=n {
                if 2 * i < n {
                    images[self.index(s, i)] = Polynomial::zero(&self.ring);
                }
            }
        }
        f.substitute(&images)
    }

    /// Graded-kernel invariants of polynomial degree `1..=degree_bound`,
    /// with their (degree, weight) bidegree.
    pub fn invariants_up_to(&self, degree_bound: u32) -> Result<Vec<(MultiDegree, Polynomial)>> {
        let d = self.raising_derivation();
        let nmax = *self.summands.iter().max().expect("nonempty") as i64;
        let degrees: Vec<MultiDegree> = (1..=degree_bound as i64)
            .flat_map(|deg| (-deg * nmax..=deg * nmax).map(move |w| MultiDegree(vec![deg, w])))
            .collect();
        let pieces: Vec<Result<Vec<(MultiDegree, Polynomial)>>> = degrees
            .par_iter()
            .map(|md| {
                let k = d.graded_kernel(&self.weights, md, None)?;
                Ok(k.basis.into_iter().map(|p| (md.clone(), p)).collect())
            })
            .collect();
        let mut out = Vec::new();
        for p in pieces {
            out.extend(p?);
        }
        Ok(out)
    }

    /// A random point of `V0 + V+` with integer entries in `[-9, 9]`.
    pub fn sample_plinth_point(&self, rng: &mut impl Rng) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (s, &n) in self.summands.iter().enumerate() {
            for i in 0..=n {
                if 2 * i >= n {
                    v[self.index(s, i)] = rat(rng.random_range(-9..=9));
                }
            }
        }
        v
    }

    /// Overwrites the weight-zero components of a point.
    pub fn set_v0(&self, v: &mut [Rational], v0: &[Rational]) {
        let slots: Vec<usize> = self
            .summands
            .iter()
            .enumerate()
            .filter(|(_, &n)| n % 2 == 0)
            .map(|(s, &n)| self.index(s, n / 2))
            .collect();
        for (slot, a) in slots.into_iter().zip(v0) {
            v[slot] = a.clone();
        }
    }
}

/// The quadratic invariants `f_0, ..., f_{n/2}` of `V[n]`, each spanning the
/// kernel in degree 2 and weight `2n - 4k`, normalized so the `x0*x_{2k}`
/// coefficient is 1.
pub fn quadratic_invariants(n: u32) -> Result<Vec<Polynomial>> {
    let rep = RepSum::single(n);
    let d = rep.raising_derivation();
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let md = MultiDegree(vec![2, 2 * n as i64 - 4 * k as i64]);
        let basis = d.graded_kernel(rep.weights(), &md, None)?;
        if basis.dim() != 1 {
            return Err(Error::ConstructionFailed(format!(
                "kernel of V[{n}] in degree 2 and weight {} has dimension {}",
                md.0[1],
                basis.dim()
            )));
        }
        let f = &basis.basis[0];
        let lead = Monomial::from_exponents((0..=n).map(|i| (i == 0) as u32 + (i == 2 * k) as u32));
        let c = f.coefficient(&lead);
        if c.is_zero() {
            return Err(Error::ConstructionFailed(format!("f_{k} of V[{n}] has no x0*x{} term", 2 * k)));
        }
        let f = f.scale(&c.recip());
        let support_ok = f.len() == k as usize + 1
            && (0..=k).all(|j| {
                let m = Monomial::from_exponents((0..=n).map(|i| (i == j) as u32 + (i == 2 * k - j) as u32));
                !f.coefficient(&m).is_zero()
            });
        if !support_ok {
            return Err(Error::ConstructionFailed(format!("f_{k} of V[{n}] has support other than x_j x_(2k-j): {f}")));
        }
        out.push(f);
    }
    Ok(out)
}

/// Action of the Weyl element on `V[n]_0`, computed by substituting
/// `X -> Y, Y -> -X` into the weight-zero form `X^(n/2) Y^(n/2)`.
pub fn sigma_on_v0(n: u32) -> SigmaAction {
    if n % 2 == 1 {
        return SigmaAction::ZeroSpace;
    }
    let ring = VariableSet::new(&["X", "Y"]).expect("fixed names");
    let x = Polynomial::variable(&ring, 0);
    let y = Polynomial::variable(&ring, 1);
    let form = &x.pow(n / 2) * &y.pow(n / 2);
    let image = form.substitute(&[y.clone(), -x.clone()]).expect("same ring");
    let c = image.coefficient(form.leading_monomial().expect("nonzero"));
    if c.is_one() {
        SigmaAction::Trivial
    } else {
        debug_assert_eq!(c, -Rational::one());
        SigmaAction::MinusIdentity
    }
}

/// The expected table: trivial for `n = 0 mod 4`, minus identity for
/// `n = 2 mod 4`, zero space for odd `n`.
pub fn sigma_table(n: u32) -> SigmaAction {
    match n % 4 {
        0 => SigmaAction::Trivial,
        2 => SigmaAction::MinusIdentity,
        _ => SigmaAction::ZeroSpace,
    }
}

pub fn component_membership(rep: &RepSum, v: &[Rational], w: &[Rational]) -> Result<Membership> {
    if !rep.plinth_test(v)? || !rep.plinth_test(w)? {
        return Err(Error::NotInPlinthLocus);
    }
    let v0 = rep.v0_component(v);
    let w0 = rep.v0_component(w);
    let in_c = v0 == w0;
    let in_cs = rep.sigma_v0(&v0) == w0;
    Ok(match (in_c, in_cs) {
        (true, true) => Membership::Both,
        (true, false) => Membership::InC,
        (false, true) => Membership::InCSigma,
        (false, false) => Membership::Neither,
    })
}

/// Positive-weight invariants vanish on `V0 + V+`, and outside it some `f_k`
/// of positive weight does not.
pub fn positive_weight_vanishing_check(rep: &RepSum, degree_bound: u32, samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("sl2-vanishing-{}", rep.spec()),
        "invariants of positive weight vanish exactly on the plinth locus V0 + V+",
    )
    .param("rep", rep.spec())
    .param("degree_bound", degree_bound)
    .param("samples", samples)
    .param("seed", seed);
    let body = |report: &mut VerificationReport| -> Result<()> {
        let invs = rep.invariants_up_to(degree_bound)?;
        let mut n_pos = 0;
        for (md, f) in &invs {
            if md.0[1] > 0 {
                n_pos += 1;
                let r = rep.restrict_to_plinth(f)?;
                if !r.is_zero() {
                    report.fail(format!("invariant {f} of bidegree {md} restricts to {r}"));
                }
            }
        }
        report.note(format!("{n_pos} positive-weight invariants of degree <= {degree_bound} vanish on V0 + V+"));
        let fks: Vec<Vec<Polynomial>> = (0..rep.summands().len())
            .map(|s| rep.quadratic_invariants_of(s))
            .collect::<Result<_>>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tested = 0;
        for _ in 0..samples {
            let v: Vec<Rational> = (0..rep.dim()).map(|_| rat(rng.random_range(-9..=9))).collect();
            if rep.plinth_test(&v)? {
                continue;
            }
            tested += 1;
            // First nonzero negative-weight coordinate a_k: f_k(v) = alpha_k a_k^2.
            let (s, k) = rep
                .summands()
                .iter()
                .enumerate()
                .find_map(|(s, &n)| (0..=n).find(|&i| 2 * i < n && !v[rep.index(s, i)].is_zero()).map(|k| (s, k)))
                .expect("outside the plinth locus");
            let fk = &fks[s][k as usize];
            let val = fk.evaluate(&v)?;
            let ak = &v[rep.index(s, k)];
            let alpha = fk.coefficient(&Monomial::variable(rep.dim(), rep.index(s, k), 2));
            let ok = !val.is_zero() && val == &alpha * ak * ak;
            if !ok {
                report.fail(format!("f_{k} of summand {s} gives {val} at a point outside the plinth locus"));
            }
        }
        report.note(format!("{tested} sampled points outside V0 + V+ are detected by some f_k"));
        Ok(())
    };
    if let Err(e) = body(&mut report) {
        report.fail(e.to_string());
    }
    report
}

/// Sampled pairs in `C` and `C_sigma` are not separated by any invariant of
/// degree at most `degree_bound`.
pub fn component_containment_check(rep: &RepSum, degree_bound: u32, samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("sl2-components-{}", rep.spec()),
        "both plinth-pair components C and C_sigma lie in the separating variety",
    )
    .param("rep", rep.spec())
    .param("degree_bound", degree_bound)
    .param("samples", samples)
    .param("seed", seed);
    let body = |report: &mut VerificationReport| -> Result<()> {
        let invs = rep.invariants_up_to(degree_bound)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = [0usize; 2];
        for t in 0..samples {
            let v = rep.sample_plinth_point(&mut rng);
            let mut w = rep.sample_plinth_point(&mut rng);
            let twisted = t % 2 == 1;
            let v0 = rep.v0_component(&v);
            let target = if twisted { rep.sigma_v0(&v0) } else { v0 };
            rep.set_v0(&mut w, &target);
            let m = component_membership(rep, &v, &w)?;
            let expected = if twisted {
                matches!(m, Membership::InCSigma | Membership::Both)
            } else {
                matches!(m, Membership::InC | Membership::Both)
            };
            if !expected {
                report.fail(format!("constructed pair classified as {m:?}"));
                continue;
            }
            counts[twisted as usize] += 1;
            for (md, f) in &invs {
                let (a, b) = (f.evaluate(&v)?, f.evaluate(&w)?);
                if a != b {
                    report.fail(format!("invariant {f} of bidegree {md} separates a pair in {m:?}: {a} vs {b}"));
                    break;
                }
            }
        }
        report.note(format!(
            "{} pairs in C and {} pairs in C_sigma agree on all {} invariants of degree <= {degree_bound}",
            counts[0],
            counts[1],
            invs.len()
        ));
        Ok(())
    };
    if let Err(e) = body(&mut report) {
        report.fail(e.to_string());
    }
    report
}

/// Quadratic invariants for all `n <= max_n` and the Weyl table.
pub fn quadratic_invariants_check(max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new(
        "sl2-quadratic",
        "V[n] has floor(n/2)+1 quadratic invariants f_k = sum alpha_j x_j x_(2k-j) with all alpha_j nonzero",
    )
    .param("max_n", max_n);
    for n in 0..=max_n {
        match quadratic_invariants(n) {
            Ok(fs) => {
                let d = RepSum::single(n).raising_derivation();
                let inv = fs.iter().all(|f| d.is_invariant(f));
                report.expect(
                    fs.len() == (n / 2 + 1) as usize && inv,
                    format!("V[{n}]: {} invariants, f_last = {}", fs.len(), fs.last().map(|f| f.to_string()).unwrap_or_default()),
                );
            }
            Err(e) => report.fail(format!("V[{n}]: {e}")),
        }
        let s = sigma_on_v0(n);
        report.expect(s == sigma_table(n), format!("sigma on V[{n}]_0: {s:?}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v1_derivation_convention() {
        let rep = RepSum::single(1);
        let d = rep.raising_derivation();
        assert_eq!(d.to_lines(), "x0 = 0\nx1 = x0\n");
        let rep = RepSum::single(3);
        assert_eq!(rep.raising_derivation().to_lines(), "x0 = 0\nx1 = 3*x0\nx2 = 2*x1\nx3 = x2\n");
    }

    #[test]
    fn v2_discriminant() {
        let f = quadratic_invariants(2).unwrap();
        assert_eq!(f[0].to_string(), "x0^2");
        assert_eq!(f[1].to_string(), "x0*x2 - 1/4*x1^2");
    }

    #[test]
    fn parse_spec_names() {
        let rep = RepSum::parse("V[4] + V[2]").unwrap();
        assert_eq!(rep.dim(), 8);
        assert_eq!(rep.ring().name(5), "b0");
        assert!(RepSum::parse("W[2]").is_err());
    }

    #[test]
    fn nullcone_and_plinth_on_basis_vectors() {
        let rep = RepSum::single(2);
        let e = |i: usize| (0..3).map(|j| rat((i == j) as i64)).collect::<Vec<_>>();
        assert!(rep.nullcone_test(&e(2)).unwrap());
        assert!(rep.plinth_test(&e(2)).unwrap());
        assert!(!rep.nullcone_test(&e(1)).unwrap());
        assert!(rep.plinth_test(&e(1)).unwrap());
        assert!(!rep.plinth_test(&e(0)).unwrap());
        let zero = vec![rat(0); 3];
        assert!(rep.nullcone_test(&zero).unwrap() && rep.plinth_test(&zero).unwrap());
    }

    #[test]
    fn sigma_pairs_on_v2() {
        let rep = RepSum::single(2);
        let v = vec![rat(0), rat(3), rat(5)];
        let w = vec![rat(0), rat(-3), rat(7)];
        assert_eq!(component_membership(&rep, &v, &w).unwrap(), Membership::InCSigma);
        assert_eq!(component_membership(&rep, &v, &v).unwrap(), Membership::InC);
        let off = vec![rat(1), rat(0), rat(0)];
        assert_eq!(component_membership(&rep, &off, &v), Err(Error::NotInPlinthLocus));
    }
}

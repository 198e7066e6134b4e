//! Leading-term algebras, subduction and SAGBI verification.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::variables::same_ring;
use crate::polyring::{Monomial, Polynomial, Rational, VariableSet};
use crate::report::VerificationReport;

/// Default subduction budget.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Named nonzero polynomials over one variable set.
///
/// The index order of the generators is the tie-break order for
/// factorizations. Products of generators and monoid factorizations are
/// memoized internally.
pub struct GeneratorSet {
    ring: Arc<VariableSet>,
    names: Vec<String>,
    polys: Vec<Polynomial>,
    lts: Vec<Monomial>,
    lcs: Vec<Rational>,
    products: RwLock<HashMap<Vec<usize>, Arc<Polynomial>>>,
    factorizations: RwLock<HashMap<Monomial, Option<Vec<usize>>>>,
}

impl Clone for GeneratorSet {
    fn clone(&self) -> Self {
        Self::new(self.names.iter().cloned().zip(self.polys.iter().cloned()).collect())
            .expect("already validated")
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

impl GeneratorSet {
    pub fn new(gens: Vec<(String, Polynomial)>) -> Result<Self> {
        let Some((_, first)) = gens.first() else {
            return Err(Error::InvalidArgument("a generator set needs at least one generator".into()));
        };
        let ring = first.ring().clone();
        let mut seen = HashSet::new();
        let (mut names, mut polys, mut lts, mut lcs) = (vec![], vec![], vec![], vec![]);
        for (name, p) in gens {
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidArgument(format!("duplicate generator name `{name}`")));
            }
            if !same_ring(p.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            let (m, c) = p.leading_term()?;
            if m.is_one() {
                return Err(Error::InvalidArgument(format!("generator `{name}` is constant")));
            }
            lts.push(m.clone());
            lcs.push(c.clone());
            names.push(name);
            polys.push(p);
        }
        Ok(Self {
            ring,
            names,
            polys,
            lts,
            lcs,
            products: RwLock::new(HashMap::new()),
            factorizations: RwLock::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generator(&self, i: usize) -> &Polynomial {
        &self.polys[i]
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lts
    }

    /// Product of the generators with the given (sorted) indices.
    pub fn product(&self, factors: &[usize]) -> Arc<Polynomial> {
        if factors.is_empty() {
            return Arc::new(Polynomial::one(&self.ring));
        }
        if let Some(p) = self.products.read().expect("cache lock").get(factors) {
            return p.clone();
        }
        let (last, init) = factors.split_last().expect("nonempty");
        let p = Arc::new(self.product(init).as_ref() * &self.polys[*last]);
        self.products
            .write()
            .expect("cache lock")
            .insert(factors.to_vec(), p.clone());
        p
    }

    fn lead_coefficient_of(&self, factors: &[usize]) -> Rational {
        factors.iter().fold(Rational::from_integer(1.into()), |acc, &i| acc * &self.lcs[i])
    }

    /// Memoized [`monomial_algebra_member`] against these leading monomials.
    pub fn factorize(&self, m: &Monomial) -> Option<Vec<usize>> {
        if let Some(hit) = self.factorizations.read().expect("cache lock").get(m) {
            return hit.clone();
        }
        let f = monomial_algebra_member(m, &self.lts);
        self.factorizations
            .write()
            .expect("cache lock")
            .insert(m.clone(), f.clone());
        f
    }

    pub fn factor_names(&self, factors: &[usize]) -> Vec<String> {
        factors.iter().map(|&i| self.names[i].clone()).collect()
    }
}

/// Factors `m` as a product of the monomials `lts`, with repetition.
///
/// Among all factorizations, returns one with the fewest factors and, among
/// those, the lexicographically smallest nondecreasing index sequence.
/// Constant entries of `lts` are ignored.
pub fn monomial_algebra_member(m: &Monomial, lts: &[Monomial]) -> Option<Vec<usize>> {
    if m.is_one() {
        return Some(Vec::new());
    }
    let usable: Vec<usize> = (0..lts.len()).filter(|&i| !lts[i].is_one() && lts[i].nvars() == m.nvars()).collect();
    if usable.is_empty() {
        return None;
    }
    let degs: Vec<u64> = usable.iter().map(|&i| lts[i].total_degree()).collect();
    let min_deg = *degs.iter().min().expect("nonempty");
    let max_deg = *degs.iter().max().expect("nonempty");
    let total = m.total_degree();
    let max_k = (total / min_deg) as usize;
    let min_k = total.div_ceil(max_deg) as usize;
    let mut dead: HashSet<(Monomial, usize, usize)> = HashSet::new();
    let mut path = Vec::new();
    for k in min_k..=max_k {
        if search(m, k, 0, &usable, lts, &mut path, &mut dead, min_deg, max_deg) {
            return Some(path.iter().map(|&u| usable[u]).collect());
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn search(
    rem: &Monomial,
    k: usize,
    start: usize,
    usable: &[usize],
    lts: &[Monomial],
    path: &mut Vec<usize>,
    dead: &mut HashSet<(Monomial, usize, usize)>,
    min_deg: u64,
    max_deg: u64,
) -> bool {
    if k == 0 {
        return rem.is_one();
    }
    let d = rem.total_degree();
    if d < k as u64 * min_deg || d > k as u64 * max_deg {
        return false;
    }
    let key = (rem.clone(), k, start);
    if dead.contains(&key) {
        return false;
    }
    for u in start..usable.len() {
        if let Some(next) = rem.div(&lts[usable[u]]) {
            path.push(u);
            if search(&next, k - 1, u, usable, lts, path, dead, min_deg, max_deg) {
                return true;
            }
            path.pop();
        }
    }
    dead.insert(key);
    false
}

/// One subduction step: subtract `coef * prefix * prod(factors)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubductionStep {
    pub coef: String,
    pub prefix: Option<String>,
    pub factors: Vec<String>,
    #[serde(skip)]
    coef_value: Rational,
    #[serde(skip)]
    prefix_index: Option<usize>,
    #[serde(skip)]
    factor_indices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubductionStatus {
    /// The leading term left the leading-term algebra, or nothing is left.
    Complete,
    /// The step budget ran out first.
    Exhausted,
}

/// Replayable record of a subduction: `input = sum(steps) + remainder`.
#[derive(Debug, Clone, Serialize)]
pub struct SubductionCertificate {
    pub steps: Vec<SubductionStep>,
    #[serde(serialize_with = "serialize_display")]
    pub remainder: Polynomial,
    pub status: SubductionStatus,
}

fn serialize_display<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl SubductionCertificate {
    /// Complete with remainder 0: the input lies in the subalgebra (or the
    /// prefixed ideal).
    pub fn is_member(&self) -> bool {
        self.status == SubductionStatus::Complete && self.remainder.is_zero()
    }

    /// Re-executes every step against `input`, checking that each one
    /// cancels exactly the current leading term.
    pub fn replay(&self, input: &Polynomial, g: &GeneratorSet) -> bool {
        if !same_ring(input.ring(), g.ring()) {
            return false;
        }
        let mut cur = input.clone();
        for s in &self.steps {
            let Ok((lm, lc)) = cur.leading_term() else {
                return false;
            };
            let mut target = Monomial::one(g.ring().len());
            for &i in &s.factor_indices {
                target = target.mul(&g.lts[i]);
            }
            if let Some(v) = s.prefix_index {
                target = target.mul(&Monomial::variable(g.ring().len(), v, 1));
            }
            if &target != lm || &(&s.coef_value * g.lead_coefficient_of(&s.factor_indices)) != lc {
                return false;
            }
            let mut term = g.product(&s.factor_indices).scale(&s.coef_value);
            if let Some(v) = s.prefix_index {
                term = &term * &Polynomial::variable(g.ring(), v);
            }
            cur = &cur - &term;
        }
        cur == self.remainder
    }

    /// Line format: `coef | prefix | factor*factor` per step, then the
    /// remainder and status lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for st in &self.steps {
            let f = if st.factors.is_empty() { "1".to_string() } else { st.factors.join("*") };
            s.push_str(&format!("{} | {} | {}\n", st.coef, st.prefix.as_deref().unwrap_or("-"), f));
        }
        s.push_str(&format!("remainder = {}\n", self.remainder));
        let status = match self.status {
            SubductionStatus::Complete => "complete",
            SubductionStatus::Exhausted => "exhausted",
        };
        s.push_str(&format!("status = {status}\n"));
        s
    }
}

fn make_step(g: &GeneratorSet, coef: Rational, prefix: Option<usize>, factors: Vec<usize>) -> SubductionStep {
    SubductionStep {
        coef: coef.to_string(),
        prefix: prefix.map(|v| g.ring().name(v).to_string()),
        factors: g.factor_names(&factors),
        coef_value: coef,
        prefix_index: prefix,
        factor_indices: factors,
    }
}

/// Standard subduction of `f` against `g`.
pub fn subduct(f: &Polynomial, g: &GeneratorSet, max_steps: usize) -> Result<SubductionCertificate> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("max_steps must be at least 1".into()));
    }
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut cur = f.clone();
    let mut steps = Vec::new();
    while let Ok((lm, lc)) = cur.leading_term() {
        let Some(factors) = g.factorize(lm) else {
            break;
        };
        if steps.len() == max_steps {
            return Ok(SubductionCertificate {
                steps,
                remainder: cur,
                status: SubductionStatus::Exhausted,
            });
        }
        let coef = lc / g.lead_coefficient_of(&factors);
        let term = g.product(&factors).scale(&coef);
        cur = &cur - &term;
        steps.push(make_step(g, coef, None, factors));
    }
    Ok(SubductionCertificate {
        steps,
        remainder: cur,
        status: SubductionStatus::Complete,
    })
}

/// Writes `f` as a combination of `prefix * product of generators`.
///
/// Each step cancels the leading term by some `x_j * LT(product)`; the
/// first prefix (in the given order) admitting a factorization is used.
pub fn x_ideal_membership(
    f: &Polynomial,
    g: &GeneratorSet,
    prefixes: &[usize],
    max_steps: usize,
) -> Result<SubductionCertificate> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let n = g.ring().len();
    let mut cur = f.clone();
    let mut steps = Vec::new();
    while let Ok((lm, lc)) = cur.leading_term() {
        if steps.len() == max_steps {
            return Ok(SubductionCertificate {
                steps,
                remainder: cur,
                status: SubductionStatus::Exhausted,
            });
        }
        let found = prefixes.iter().find_map(|&v| {
            let rest = lm.div(&Monomial::variable(n, v, 1))?;
            g.factorize(&rest).map(|fs| (v, fs))
        });
        let Some((v, factors)) = found else {
            return Err(Error::Stuck {
                monomial: Polynomial::monomial_text(g.ring(), lm),
            });
        };
        let coef = lc / g.lead_coefficient_of(&factors);
        let term = &g.product(&factors).scale(&coef) * &Polynomial::variable(g.ring(), v);
        cur = &cur - &term;
        steps.push(make_step(g, coef, Some(v), factors));
    }
    Ok(SubductionCertificate {
        steps,
        remainder: cur,
        status: SubductionStatus::Complete,
    })
}

/// Two distinct generator multisets with equal leading-monomial products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeteATete {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl TeteATete {
    /// `prod(left) - prod(right)` scaled so the leading terms cancel.
    pub fn difference(&self, g: &GeneratorSet) -> Polynomial {
        let l = g.product(&self.left);
        let r = g.product(&self.right);
        let cl = g.lead_coefficient_of(&self.left);
        let cr = g.lead_coefficient_of(&self.right);
        if cl == cr {
            l.as_ref() - r.as_ref()
        } else {
            &l.scale(&cr) - &r.scale(&cl)
        }
    }

    pub fn describe(&self, g: &GeneratorSet) -> String {
        let side = |v: &[usize]| g.factor_names(v).join("*");
        format!("{} - {}", side(&self.left), side(&self.right))
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Generating tête-à-têtes among multisets whose leading-monomial product
/// has total degree at most `degree_bound`.
///
/// Within each fiber of the leading-monomial map, multisets sharing a
/// generator are related through a lower-degree fiber, so one relation per
/// additional connected component of the sharing graph suffices.
pub fn tete_a_tetes(g: &GeneratorSet, degree_bound: u64) -> Vec<TeteATete> {
    let mut fibers: HashMap<Monomial, Vec<Vec<usize>>> = HashMap::new();
    let degs: Vec<u64> = g.lts.iter().map(|m| m.total_degree()).collect();
    let mut path = Vec::new();
    enumerate_multisets(g, &degs, degree_bound, 0, 0, &Monomial::one(g.ring().len()), &mut path, &mut fibers);
    let mut out = Vec::new();
    for sets in fibers.into_values() {
        if sets.len() < 2 {
            continue;
        }
        let mut parent: Vec<usize> = (0..sets.len()).collect();
        let mut owner: HashMap<usize, usize> = HashMap::new();
        for (k, s) in sets.iter().enumerate() {
            for &gen in s {
                if let Some(&o) = owner.get(&gen) {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, k));
                    parent[a.max(b)] = a.min(b);
                } else {
                    owner.insert(gen, k);
                }
            }
        }
        let mut reps: Vec<&Vec<usize>> = (0..sets.len())
            .filter(|&k| find(&mut parent, k) == k)
            .map(|k| &sets[k])
            .collect();
        reps.sort();
        for r in &reps[1..] {
            out.push(TeteATete {
                left: reps[0].clone(),
                right: (*r).clone(),
            });
        }
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_multisets(
    g: &GeneratorSet,
    degs: &[u64],
    budget: u64,
    start: usize,
    used: u64,
    acc: &Monomial,
    path: &mut Vec<usize>,
    fibers: &mut HashMap<Monomial, Vec<Vec<usize>>>,
) {
    if !path.is_empty() {
        fibers.entry(acc.clone()).or_default().push(path.clone());
    }
    for i in start..g.len() {
        if used + degs[i] > budget {
            continue;
        }
        path.push(i);
        let next = acc.mul(&g.lts[i]);
        enumerate_multisets(g, degs, budget, i, used + degs[i], &next, path, fibers);
        path.pop();
    }
}

/// Outcome of subducting one tête-à-tête difference.
#[derive(Debug, Clone)]
pub struct RelationOutcome {
    pub relation: TeteATete,
    pub difference: Polynomial,
    pub certificate: SubductionCertificate,
}

/// Subducts every tête-à-tête difference (in parallel), in relation order.
pub fn check_relations(g: &GeneratorSet, rels: &[TeteATete], max_steps: usize) -> Result<Vec<RelationOutcome>> {
    rels.par_iter()
        .map(|r| {
            let difference = r.difference(g);
            let certificate = subduct(&difference, g, max_steps)?;
            Ok(RelationOutcome {
                relation: r.clone(),
                difference,
                certificate,
            })
        })
        .collect()
}

/// Passes iff every tête-à-tête up to the degree bound subducts to 0.
pub fn verify_sagbi(g: &GeneratorSet, degree_bound: u64, max_steps: usize) -> Result<VerificationReport> {
    let rels = tete_a_tetes(g, degree_bound);
    let outcomes = check_relations(g, &rels, max_steps)?;
    let mut rep = VerificationReport::new(
        "sagbi",
        "every tete-a-tete difference subducts to zero, so the leading terms generate the leading-term algebra",
    )
    .param("generators", g.len())
    .param("degree_bound", degree_bound)
    .param("relations", rels.len());
    let mut by_status: BTreeMap<&str, usize> = BTreeMap::new();
    for o in &outcomes {
        let tag = if o.certificate.is_member() { "zero" } else { "nonzero" };
        *by_status.entry(tag).or_default() += 1;
        if !o.certificate.is_member() {
            rep.fail(format!(
                "{} leaves remainder {} ({:?})",
                o.relation.describe(g),
                o.certificate.remainder,
                o.certificate.status
            ));
        }
    }
    rep.note(format!(
        "{} relations checked, {} subduct to zero",
        outcomes.len(),
        by_status.get("zero").copied().unwrap_or(0)
    ));
    Ok(rep)
}

/// Sum of leading-coefficient-free products, handy for random algebra
/// combinations in tests.
pub fn combination(g: &GeneratorSet, parts: &[(Rational, Vec<usize>)]) -> Polynomial {
    let mut acc = Polynomial::zero(g.ring());
    for (c, fs) in parts {
        if c.is_zero() {
            continue;
        }
        let mut fs = fs.clone();
        fs.sort_unstable();
        acc = &acc + &g.product(&fs).scale(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ring: &VariableSet, e: &[u32]) -> Monomial {
        assert_eq!(e.len(), ring.len());
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn empty_monomial_has_empty_factorization() {
        let r = VariableSet::new(&["a", "b"]).unwrap();
        let lts = vec![mono(&r, &[1, 0])];
        assert_eq!(monomial_algebra_member(&Monomial::one(2), &lts), Some(vec![]));
    }

    #[test]
    fn fewest_factors_wins() {
        let r = VariableSet::new(&["a", "b"]).unwrap();
        let lts = vec![mono(&r, &[1, 0]), mono(&r, &[2, 0])];
        assert_eq!(monomial_algebra_member(&mono(&r, &[4, 0]), &lts), Some(vec![1, 1]));
        assert_eq!(monomial_algebra_member(&mono(&r, &[3, 0]), &lts), Some(vec![0, 1]));
        assert_eq!(monomial_algebra_member(&mono(&r, &[0, 1]), &lts), None);
    }

    #[test]
    fn independent_leading_terms_have_no_relations() {
        let r = VariableSet::new(&["x", "y"]).unwrap();
        let g = GeneratorSet::new(vec![
            ("x".into(), Polynomial::var(&r, "x").unwrap()),
            ("y".into(), Polynomial::var(&r, "y").unwrap()),
        ])
        .unwrap();
        assert!(tete_a_tetes(&g, 8).is_empty());
    }

    #[test]
    fn constant_subducts_with_empty_product() {
        let r = VariableSet::new(&["x"]).unwrap();
        let g = GeneratorSet::new(vec![("x".into(), Polynomial::var(&r, "x").unwrap())]).unwrap();
        let f = Polynomial::parse(&r, "x^2 + 3").unwrap();
        let c = subduct(&f, &g, 10).unwrap();
        assert!(c.is_member());
        assert!(c.replay(&f, &g));
        assert_eq!(c.to_text(), "1 | - | x*x\n3 | - | 1\nremainder = 0\nstatus = complete\n");
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = VariableSet::new(&["x"]).unwrap();
        let g = GeneratorSet::new(vec![("x".into(), Polynomial::var(&r, "x").unwrap())]).unwrap();
        let f = Polynomial::parse(&r, "x^2 + x + 1").unwrap();
        let c = subduct(&f, &g, 1).unwrap();
        assert_eq!(c.status, SubductionStatus::Exhausted);
        assert!(c.replay(&f, &g));
    }
}

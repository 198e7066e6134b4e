//! Roberts' additive group action on seven-dimensional affine space.
//!
//! Coordinates are `x1,x2,x3,y1,y2,y3,z` with lex precedence
//! `x1 < x2 < x3 < y1 < y2 < y3 < z`, the torus weights
//! `(1,0,0),(0,1,0),(0,0,1),(3,0,0),(0,3,0),(0,0,3),(2,2,2)` and the
//! derivation `D = sum x_i^3 d/dy_i + (x1 x2 x3)^2 d/dz`.

mod checks;

pub use checks::*;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{rat, Monomial, MultiDegree, Polynomial, Rational, VariableSet, WeightSystem};
use crate::sagbi::GeneratorSet;

pub const VARIABLES: [&str; 7] = ["x1", "x2", "x3", "y1", "y2", "y3", "z"];
pub const Z: usize = 6;

/// The ring, grading and derivation together with the invariant caches.
pub struct RobertsRing {
    ring: Arc<VariableSet>,
    weights: WeightSystem,
    derivation: Derivation,
    betas: RwLock<HashMap<(usize, u32), Polynomial>>,
    generator_sets: RwLock<HashMap<u32, Arc<GeneratorSet>>>,
}

/// Process-wide instance; the β cache is shared by all callers.
pub fn roberts() -> &'static RobertsRing {
    static CELL: OnceLock<RobertsRing> = OnceLock::new();
    CELL.get_or_init(RobertsRing::new)
}

/// Index of `x_i` for `i` in 1..=3.
pub fn xi(i: usize) -> usize {
    i - 1
}

/// Index of `y_i` for `i` in 1..=3.
pub fn yi(i: usize) -> usize {
    i + 2
}

/// The complementary indices `(j, k)` with `j < k`.
pub fn complement(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => panic!("index {i} is not in 1..=3"),
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("index {i} is not in 1..=3")))
    }
}

fn binomial2(n: u32) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2
}

impl RobertsRing {
    fn new() -> Self {
        let ring = VariableSet::new(&VARIABLES).expect("fixed names");
        let weights = WeightSystem::new(
            &ring,
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![3, 0, 0],
                vec![0, 3, 0],
                vec![0, 0, 3],
                vec![2, 2, 2],
            ],
        )
        .expect("seven weight vectors");
        let derivation = Derivation::from_text(
            &ring,
            &[("y1", "x1^3"), ("y2", "x2^3"), ("y3", "x3^3"), ("z", "x1^2*x2^2*x3^2")],
        )
        .and_then(|d| d.certified(4))
        .expect("the Roberts derivation is locally nilpotent");
        Self {
            ring,
            weights,
            derivation,
            betas: RwLock::new(HashMap::new()),
            generator_sets: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.ring, text)
    }

    pub fn var(&self, index: usize) -> Polynomial {
        Polynomial::variable(&self.ring, index)
    }

    pub fn x(&self, i: usize) -> Polynomial {
        self.var(xi(i))
    }

    pub fn y(&self, i: usize) -> Polynomial {
        self.var(yi(i))
    }

    pub fn z(&self) -> Polynomial {
        self.var(Z)
    }

    /// `c * x^a y^b z^e` from exponent arrays indexed 1..=3 (stored 0..3).
    pub fn mono(&self, x: [u32; 3], y: [u32; 3], z: u32) -> Monomial {
        Monomial::from_exponents(x.into_iter().chain(y).chain([z]))
    }

    pub fn term(&self, c: i64, x: [u32; 3], y: [u32; 3], z: u32) -> Polynomial {
        Polynomial::monomial(&self.ring, self.mono(x, y, z), rat(c))
    }

    /// `u(a,b) = x_a^3 y_b - x_b^3 y_a`; antisymmetric in `(a, b)`.
    pub fn u(&self, a: usize, b: usize) -> Polynomial {
        let xa3 = self.x(a).pow(3);
        let xb3 = self.x(b).pow(3);
        &(&xa3 * &self.y(b)) - &(&xb3 * &self.y(a))
    }

    pub fn u12(&self) -> Polynomial {
        self.u(1, 2)
    }

    pub fn u13(&self) -> Polynomial {
        self.u(1, 3)
    }

    pub fn u23(&self) -> Polynomial {
        self.u(2, 3)
    }

    /// Multidegree `(2n,2n,2n) + e_i` of `β_{i,n}`.
    pub fn beta_degree(&self, i: usize, n: u32) -> MultiDegree {
        let mut d = vec![2 * n as i64; 3];
        d[i - 1] += 1;
        MultiDegree(d)
    }

    /// Exponent triple with `a` at index `i` and `b`, `c` at `j < k`.
    fn xs(&self, i: usize, a: u32, b: u32, c: u32) -> [u32; 3] {
        let (j, k) = complement(i);
        let mut e = [0; 3];
        e[i - 1] = a;
        e[j - 1] = b;
        e[k - 1] = c;
        e
    }

    fn ys(&self, entries: &[(usize, u32)]) -> [u32; 3] {
        let mut e = [0; 3];
        for &(v, p) in entries {
            e[v - 1] += p;
        }
        e
    }

    /// `-n x_j^2 x_k^2 y_i`, the prescribed `z^{n-1}` coefficient.
    pub fn h1(&self, i: usize, n: u32) -> Polynomial {
        self.term(-(n as i64), self.xs(i, 0, 2, 2), self.ys(&[(i, 1)]), 0)
    }

    /// The prescribed `z^{n-2}` coefficient
    /// `C(n,2) (x_i^2 x_j^4 x_k y_i y_k + x_i^2 x_j x_k^4 y_i y_j - x_i^5 x_j x_k y_j y_k)`.
    pub fn h2(&self, i: usize, n: u32) -> Polynomial {
        let (j, k) = complement(i);
        let c = binomial2(n);
        let a = self.term(c, self.xs(i, 2, 4, 1), self.ys(&[(i, 1), (k, 1)]), 0);
        let b = self.term(c, self.xs(i, 2, 1, 4), self.ys(&[(i, 1), (j, 1)]), 0);
        let d = self.term(-c, self.xs(i, 5, 1, 1), self.ys(&[(j, 1), (k, 1)]), 0);
        &(&a + &b) + &d
    }

    /// The part of `β_{i,n}` the lemma prescribes: z-degrees `n`, `n-1`, `n-2`.
    pub fn beta_prescribed(&self, i: usize, n: u32) -> Polynomial {
        let z = self.z();
        let mut p = &self.x(i) * &z.pow(n);
        if n >= 1 {
            p = &p + &(&self.h1(i, n) * &z.pow(n - 1));
        }
        if n >= 2 {
            p = &p + &(&self.h2(i, n) * &z.pow(n - 2));
        }
        p
    }

    /// Basis of `ker D ∩ k[x,y]` in degree `(5,4,4)` permuted to summand `i`:
    /// `x_i^5 x_j^4 x_k^4`, `x_i^2 x_j x_k^4 u(i,j)`, `x_i^2 x_j^4 x_k u(i,k)`.
    pub fn kernel_544(&self, i: usize) -> [Polynomial; 3] {
        let (j, k) = complement(i);
        [
            self.term(1, self.xs(i, 5, 4, 4), [0; 3], 0),
            &self.term(1, self.xs(i, 2, 1, 4), [0; 3], 0) * &self.u(i, j),
            &self.term(1, self.xs(i, 2, 4, 1), [0; 3], 0) * &self.u(i, k),
        ]
    }

    /// The invariant `β_{i,n}` in canonical form (cached).
    ///
    /// Built as in the existence proof: solve `D f = 0` with the `x_i z^n`
    /// coefficient pinned, fix the `z^{n-1}` coefficient with
    /// `x_i^2 x_j^2 x_k^2 β_{i,n-1}`, fix the `z^{n-2}` coefficient with the
    /// `(5,4,4)` kernel times `β_{i,n-2}`, and finally reduce modulo the
    /// invariants of z-degree at most `n-3` so the coefficients at their
    /// leading monomials vanish. The lemma's displayed `h1` reads
    /// `-n x2^2 x2^2 y1`; the repeated `x2` is taken as `x2^2 x3^2`, matching
    /// the statement `-n x_j^2 x_k^2 y_i`.
    pub fn beta(&self, i: usize, n: u32) -> Result<Polynomial> {
        check_index(i)?;
        if let Some(b) = self.betas.read().expect("cache lock").get(&(i, n)) {
            return Ok(b.clone());
        }
        let b = self.construct_beta(i, n)?;
        self.betas
            .write()
            .expect("cache lock")
            .entry((i, n))
            .or_insert_with(|| b.clone());
        Ok(b)
    }

    fn construct_beta(&self, i: usize, n: u32) -> Result<Polynomial> {
        if n == 0 {
            return Ok(self.x(i));
        }
        let fail = |msg: String| Error::ConstructionFailed(format!("beta({i},{n}): {msg}"));
        let basis = self.weights.monomial_basis(&self.beta_degree(i, n), None)?;
        let lead = self.mono(self.xs(i, 1, 0, 0), [0; 3], n);
        let unknowns: Vec<Monomial> = basis.iter().filter(|m| **m != lead).cloned().collect();
        let lead_poly = Polynomial::monomial(&self.ring, lead, Rational::one());
        let mut f = self
            .solve_pinned(&lead_poly, &unknowns)
            .ok_or_else(|| fail("no invariant with leading coefficient 1".into()))?;

        let z = Z;
        let f1 = f.coefficient_of_power(z, n - 1);
        let pure = self.mono(self.xs(i, 3, 2, 2), [0; 3], 0);
        let c = f1.coefficient(&pure);
        let expected = &self.h1(i, n) + &Polynomial::monomial(&self.ring, pure, c.clone());
        if f1 != expected {
            return Err(fail(format!("z^{} coefficient {f1} is not h1 + c*x^(3,2,2)", n - 1)));
        }
        if !c.is_zero() {
            let corr = &self.term(1, self.xs(i, 2, 2, 2), [0; 3], 0) * &self.beta(i, n - 1)?;
            f = &f - &corr.scale(&c);
        }

        if n >= 2 {
            let g = &f.coefficient_of_power(z, n - 2) - &self.h2(i, n);
            let kernel = self.kernel_544(i);
            let coords = coordinates_in(&g, &kernel)
                .ok_or_else(|| fail(format!("z^{} coefficient is off h2 + ker D", n - 2)))?;
            let (j, k) = complement(i);
            let multipliers = [
                self.term(1, self.xs(i, 4, 4, 4), [0; 3], 0),
                &self.term(1, self.xs(i, 1, 1, 4), [0; 3], 0) * &self.u(i, j),
                &self.term(1, self.xs(i, 1, 4, 1), [0; 3], 0) * &self.u(i, k),
            ];
            let b = self.beta(i, n - 2)?;
            for (a, m) in coords.iter().zip(&multipliers) {
                if !a.is_zero() {
                    f = &f - &(m * &b).scale(a);
                }
            }
        }

        if n >= 3 {
            let low: Vec<Monomial> = basis.iter().filter(|m| m.exponent(z) <= n - 3).cloned().collect();
            for b in self.derivation.kernel_in_span(&low)? {
                let (p, _) = b.leading_term()?;
                let c = f.coefficient(p);
                if !c.is_zero() {
                    f = &f - &b.scale(&c);
                }
            }
        }

        if !self.derivation.is_invariant(&f) {
            return Err(fail("result is not invariant".into()));
        }
        Ok(f)
    }

    /// `top + sum c_m m` with `D(...) = 0`, unknowns solved in the given
    /// column order with free coefficients set to 0.
    fn solve_pinned(&self, top: &Polynomial, unknowns: &[Monomial]) -> Option<Polynomial> {
        let d = &self.derivation;
        let images: Vec<Polynomial> = unknowns
            .iter()
            .map(|m| d.apply(&Polynomial::monomial(&self.ring, m.clone(), Rational::one())).expect("same ring"))
            .collect();
        let rhs_poly = -d.apply(top).expect("same ring");
        let mut row_of: HashMap<Monomial, usize> = HashMap::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let mut row = |m: &Monomial, rows: &mut Vec<Vec<Rational>>, rhs: &mut Vec<Rational>| {
            *row_of.entry(m.clone()).or_insert_with(|| {
                rows.push(vec![Rational::zero(); unknowns.len()]);
                rhs.push(Rational::zero());
                rows.len() - 1
            })
        };
        for (col, img) in images.iter().enumerate() {
            for (m, c) in img.terms() {
                let r = row(m, &mut rows, &mut rhs);
                rows[r][col] = c.clone();
            }
        }
        for (m, c) in rhs_poly.terms() {
            let r = row(m, &mut rows, &mut rhs);
            rhs[r] = c.clone();
        }
        let sol = linalg::solve(&rows, &rhs, unknowns.len())?;
        let extra = Polynomial::from_terms(
            &self.ring,
            unknowns.iter().zip(sol).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c)),
        );
        Some(top + &extra)
    }

    /// Independent construction of `β_{i,n}`: pin every coefficient of
    /// z-degree at least `n-2` to the prescribed form and solve for the rest
    /// with unknowns in ascending monomial order, free ones set to 0.
    pub fn beta_oracle(&self, i: usize, n: u32) -> Result<Polynomial> {
        check_index(i)?;
        if n == 0 {
            return Ok(self.x(i));
        }
        let top = self.beta_prescribed(i, n);
        let mut unknowns: Vec<Monomial> = self
            .weights
            .monomial_basis(&self.beta_degree(i, n), None)?
            .into_iter()
            .filter(|m| n >= 3 && m.exponent(Z) <= n - 3)
            .collect();
        unknowns.reverse();
        self.solve_pinned(&top, &unknowns)
            .ok_or_else(|| Error::ConstructionFailed(format!("beta({i},{n}): pinned system is inconsistent")))
    }

    /// `S_N = {u12, u13, u23} ∪ {β_{i,n} : n ≤ N}`, named `u12`, ...,
    /// `beta{i}_{n}`, ordered by `n` then `i`.
    pub fn generator_set(&self, big_n: u32) -> Result<Arc<GeneratorSet>> {
        if let Some(g) = self.generator_sets.read().expect("cache lock").get(&big_n) {
            return Ok(g.clone());
        }
        let mut gens = vec![
            ("u12".to_string(), self.u12()),
            ("u13".to_string(), self.u13()),
            ("u23".to_string(), self.u23()),
        ];
        for n in 0..=big_n {
            for i in 1..=3 {
                gens.push((beta_name(i, n), self.beta(i, n)?));
            }
        }
        let g = Arc::new(GeneratorSet::new(gens)?);
        Ok(self
            .generator_sets
            .write()
            .expect("cache lock")
            .entry(big_n)
            .or_insert(g)
            .clone())
    }

    /// The nine invariants generating `A_1`, in the order of the ambient
    /// coordinates of `ring_a9`.
    pub fn a1_invariants(&self) -> Result<Vec<Polynomial>> {
        Ok(vec![
            self.x(1),
            self.x(2),
            self.x(3),
            self.u12(),
            self.u13(),
            self.u23(),
            self.beta(1, 1)?,
            self.beta(2, 1)?,
            self.beta(3, 1)?,
        ])
    }
}

pub fn beta_name(i: usize, n: u32) -> String {
    format!("beta{i}_{n}")
}

/// Coefficients expressing `f` in the span of `basis`, if possible.
pub fn coordinates_in(f: &Polynomial, basis: &[Polynomial]) -> Option<Vec<Rational>> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in basis.iter().chain([f]) {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let mut rows = vec![vec![Rational::zero(); basis.len()]; index.len()];
    let mut rhs = vec![Rational::zero(); index.len()];
    for (j, b) in basis.iter().enumerate() {
        for (m, c) in b.terms() {
            rows[index[m]][j] = c.clone();
        }
    }
    for (m, c) in f.terms() {
        rhs[index[m]] = c.clone();
    }
    linalg::solve(&rows, &rhs, basis.len())
}

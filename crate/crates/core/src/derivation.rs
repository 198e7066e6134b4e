//! Derivations of polynomial rings, their exponential flows and graded
//! kernels.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::variables::same_ring;
use crate::polyring::{Homogeneity, Monomial, MultiDegree, Polynomial, Rational, VariableSet, WeightSystem};

/// Safety cap on flow series length; a certified derivation never gets close.
const FLOW_SERIES_CAP: usize = 100_000;

/// For each variable, the smallest `m` with `D^m(v) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyWitness {
    pub orders: Vec<(String, usize)>,
}

impl NilpotencyWitness {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.orders.iter().find(|(n, _)| n == name).map(|(_, m)| *m)
    }

    pub fn max_order(&self) -> usize {
        self.orders.iter().map(|(_, m)| *m).max().unwrap_or(1)
    }
}

/// A k-linear derivation given by the images of the variables.
#[derive(Clone)]
pub struct Derivation {
    ring: Arc<VariableSet>,
    images: Vec<Polynomial>,
    witness: Option<NilpotencyWitness>,
}

/// Basis of the degree-`d` piece of the kernel.
#[derive(Debug, Clone)]
pub struct GradedKernelBasis {
    pub degree: MultiDegree,
    /// Reduced echelon basis: leading monomials are distinct and each
    /// element has leading coefficient 1.
    pub basis: Vec<Polynomial>,
    pub restrict: Option<Vec<String>>,
    /// The monomials spanning the graded piece, descending.
    pub monomials: Vec<Monomial>,
}

impl GradedKernelBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis, if `f` lies in the span.
    pub fn coordinates(&self, f: &Polynomial) -> Option<Vec<Rational>> {
        let index: HashMap<&Monomial, usize> =
            self.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rhs = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            rhs[*index.get(m)?] = c.clone();
        }
        let mut rows = vec![vec![Rational::zero(); self.basis.len()]; self.monomials.len()];
        for (j, b) in self.basis.iter().enumerate() {
            for (m, c) in b.terms() {
                rows[index[m]][j] = c.clone();
            }
        }
        linalg::solve(&rows, &rhs, self.basis.len())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.coordinates(f).is_some()
    }

    /// True when `others` spans exactly the same space as this basis.
    pub fn spans_same_as(&self, others: &[Polynomial]) -> bool {
        others.iter().all(|f| self.contains(f)) && span_dimension(others) == self.dim()
    }
}

/// Dimension of the linear span of a list of polynomials.
pub fn span_dimension(polys: &[Polynomial]) -> usize {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let ncols = index.len();
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut r = vec![Rational::zero(); ncols];
            for (m, c) in p.terms() {
                r[index[m]] = c.clone();
            }
            r
        })
        .collect();
    linalg::rank(&rows, ncols)
}

fn fresh_name(ring: &VariableSet, base: &str) -> String {
    if ring.index_of(base).is_none() {
        return base.to_string();
    }
    (0..)
        .map(|k| format!("{base}{k}"))
        .find(|n| ring.index_of(n).is_none())
        .expect("unbounded supply of names")
}

impl Derivation {
    pub fn new(ring: &Arc<VariableSet>, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ring.len() {
            let missing = ring.name(images.len().min(ring.len() - 1));
            return Err(Error::MissingImage(missing.to_string()));
        }
        if images.iter().any(|p| !same_ring(p.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self {
            ring: ring.clone(),
            images,
            witness: None,
        })
    }

    pub fn zero(ring: &Arc<VariableSet>) -> Self {
        Self::new(ring, vec![Polynomial::zero(ring); ring.len()]).expect("consistent by construction")
    }

    /// Builds from `(variable, image)` text pairs; unlisted variables map to 0.
    pub fn from_text(ring: &Arc<VariableSet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![Polynomial::zero(ring); ring.len()];
        for (v, img) in pairs {
            images[ring.require(v)?] = Polynomial::parse(ring, img)?;
        }
        Self::new(ring, images)
    }

    /// Parses `variable = polynomial` lines; blank lines are skipped.
    pub fn parse_lines(ring: &Arc<VariableSet>, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (v, img) = line.split_once('=').ok_or_else(|| Error::Parse {
                pos: lineno,
                msg: "expected `variable = polynomial`".into(),
            })?;
            pairs.push((v.trim(), img.trim()));
        }
        Self::from_text(ring, &pairs)
    }

    /// One `variable = image` line per variable in declaration order.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (i, img) in self.images.iter().enumerate() {
            s.push_str(&format!("{} = {}\n", self.ring.name(i), img));
        }
        s
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn image(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn witness(&self) -> Option<&NilpotencyWitness> {
        self.witness.as_ref()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in f.terms() {
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 || self.images[v].is_zero() {
                    continue;
                }
                let mut rest = m.clone();
                rest.set_exponent(v, e - 1);
                let k = c * Rational::from_integer(e.into());
                for (im, ic) in self.images[v].terms() {
                    *acc.entry(rest.mul(im)).or_insert_with(Rational::zero) += &k * ic;
                }
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    pub fn apply_power(&self, f: &Polynomial, k: usize) -> Result<Polynomial> {
        let mut g = f.clone();
        for _ in 0..k {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g)?;
        }
        Ok(g)
    }

    pub fn is_invariant(&self, f: &Polynomial) -> bool {
        self.apply(f).map(|g| g.is_zero()).unwrap_or(false)
    }

    /// Iterates `D` on every variable, at most `bound` times each.
    pub fn certify_locally_nilpotent(&self, bound: usize) -> Result<NilpotencyWitness> {
        if bound == 0 {
            return Err(Error::InvalidArgument("nilpotency bound must be at least 1".into()));
        }
        let mut orders = Vec::with_capacity(self.ring.len());
        for v in 0..self.ring.len() {
            let mut g = Polynomial::variable(&self.ring, v);
            let mut m = 0;
            while !g.is_zero() {
                if m == bound {
                    return Err(Error::NotCertified {
                        variable: self.ring.name(v).to_string(),
                        bound,
                    });
                }
                g = self.apply(&g)?;
                m += 1;
            }
            orders.push((self.ring.name(v).to_string(), m));
        }
        Ok(NilpotencyWitness { orders })
    }

    /// Returns the derivation with its nilpotency witness attached.
    pub fn certified(mut self, bound: usize) -> Result<Self> {
        self.witness = Some(self.certify_locally_nilpotent(bound)?);
        Ok(self)
    }

    /// `exp(sD) f = sum_k s^k D^k(f) / k!`, where `s` must be killed by `D`.
    ///
    /// A constant `s` gives the numeric flow; a parameter variable adjoined
    /// with [`Derivation::with_parameter`] gives the flow symbolically.
    pub fn exp_flow(&self, s: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
        if self.witness.is_none() {
            return Err(Error::Uncertified);
        }
        if !self.is_invariant(s) {
            return Err(Error::InvalidArgument("flow parameter must be an invariant".into()));
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut term = f.clone();
        let mut spow = Polynomial::one(&self.ring);
        let mut fact = Rational::one();
        let mut k = 0usize;
        while !term.is_zero() {
            if k == FLOW_SERIES_CAP {
                return Err(Error::Uncertified);
            }
            acc = &acc + &(&spow * &term).scale(&fact.recip());
            term = self.apply(&term)?;
            k += 1;
            fact *= Rational::from_integer(k.into());
            spow = &spow * s;
        }
        Ok(acc)
    }

    /// Numeric flow at `s`.
    pub fn flow_at(&self, s: &Rational, f: &Polynomial) -> Result<Polynomial> {
        self.exp_flow(&Polynomial::constant(&self.ring, s.clone()), f)
    }

    /// The same derivation on `target`, which must extend this ring; new
    /// variables are sent to 0.
    pub fn extend_to(&self, target: &Arc<VariableSet>) -> Result<Derivation> {
        let mut images = Vec::with_capacity(target.len());
        for img in &self.images {
            images.push(img.embed(target)?);
        }
        images.resize(target.len(), Polynomial::zero(target));
        Ok(Derivation {
            ring: target.clone(),
            images,
            witness: self.witness.clone().map(|mut w| {
                w.orders.extend(target.names()[self.ring.len()..].iter().map(|n| (n.clone(), 1)));
                w
            }),
        })
    }

    /// Extends the ring by a fresh parameter (named `base`, or `base0`, ...)
    /// and returns the extended derivation with the parameter polynomial.
    pub fn with_parameter(&self, base: &str) -> Result<(Derivation, Polynomial)> {
        let target = self.ring.adjoin(&fresh_name(&self.ring, base))?;
        let d = self.extend_to(&target)?;
        let s = Polynomial::variable(&target, target.len() - 1);
        Ok((d, s))
    }

    /// `exp(sD) f` as a polynomial in a fresh parameter `s`.
    pub fn flow_symbolic(&self, f: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let (d, s) = self.with_parameter("s")?;
        let g = d.exp_flow(&s, &f.embed(d.ring())?)?;
        Ok((g, s))
    }

    /// The common degree shift of a weight-homogeneous derivation, read
    /// from the first variable with a nonzero image.
    pub fn weight_shift(&self, w: &WeightSystem) -> Result<MultiDegree> {
        w.check_ring(&self.ring)?;
        let mut shift: Option<MultiDegree> = None;
        for (v, img) in self.images.iter().enumerate() {
            let var_deg = w.degree_of(&Monomial::variable(self.ring.len(), v, 1));
            match img.multidegree(w)? {
                Homogeneity::Any => continue,
                Homogeneity::Inhomogeneous => {
                    return Err(Error::NotHomogeneous(format!(
                        "image of `{}` is inhomogeneous",
                        self.ring.name(v)
                    )))
                }
                Homogeneity::Homogeneous(d) => {
                    let s = d.sub(&var_deg);
                    match &shift {
                        None => shift = Some(s),
                        Some(prev) if *prev == s => {}
                        Some(prev) => {
                            return Err(Error::NotHomogeneous(format!(
                                "image of `{}` shifts degree by {s}, expected {prev}",
                                self.ring.name(v)
                            )))
                        }
                    }
                }
            }
        }
        Ok(shift.unwrap_or_else(|| MultiDegree::zero(w.rank())))
    }

    /// Exact basis of the invariants of degree `d`, optionally using only the
    /// named variables.
    pub fn graded_kernel(
        &self,
        w: &WeightSystem,
        d: &MultiDegree,
        restrict: Option<&[&str]>,
    ) -> Result<GradedKernelBasis> {
        self.weight_shift(w)?;
        let vars = match restrict {
            Some(names) => Some(names.iter().map(|n| self.ring.require(n)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        let monomials = w.monomial_basis(d, vars.as_deref())?;
        let basis = self.kernel_in_span(&monomials)?;
        Ok(GradedKernelBasis {
            degree: d.clone(),
            basis,
            restrict: restrict.map(|r| r.iter().map(|s| s.to_string()).collect()),
            monomials,
        })
    }

    /// Reduced echelon basis of the kernel of `D` on the span of `monomials`
    /// (given in descending order).
    pub fn kernel_in_span(&self, monomials: &[Monomial]) -> Result<Vec<Polynomial>> {
        let images: Vec<Polynomial> = monomials
            .iter()
            .map(|m| self.apply(&Polynomial::monomial(&self.ring, m.clone(), Rational::one())))
            .collect::<Result<_>>()?;
        let mut row_of: HashMap<Monomial, usize> = HashMap::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (j, img) in images.iter().enumerate() {
            for (m, c) in img.terms() {
                let r = *row_of.entry(m.clone()).or_insert_with(|| {
                    rows.push(vec![Rational::zero(); monomials.len()]);
                    rows.len() - 1
                });
                rows[r][j] = c.clone();
            }
        }
        let null = linalg::nullspace(&rows, monomials.len());
        let echelon = linalg::rref(&null, monomials.len());
        Ok(echelon
            .rows
            .iter()
            .map(|v| {
                Polynomial::from_terms(
                    &self.ring,
                    v.iter().zip(monomials).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (m.clone(), c.clone())),
                )
            })
            .collect())
    }

    /// True iff `s != 0`, `D(s) = 0` and `D(f) = s`.
    pub fn local_slice_check(&self, s: &Polynomial, f: &Polynomial) -> bool {
        !s.is_zero() && self.is_invariant(s) && self.apply(f).map(|g| &g == s).unwrap_or(false)
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation {{ {} }}", self.to_lines().trim_end().replace('\n', "; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn plane() -> (Arc<VariableSet>, Derivation) {
        let r = VariableSet::new(&["x", "y"]).unwrap();
        let d = Derivation::from_text(&r, &[("y", "1")]).unwrap();
        (r, d)
    }

    #[test]
    fn partial_y_witness() {
        let (_, d) = plane();
        let w = d.certify_locally_nilpotent(5).unwrap();
        assert_eq!(w.get("x"), Some(1));
        assert_eq!(w.get("y"), Some(2));
    }

    #[test]
    fn non_nilpotent_is_not_certified() {
        let r = VariableSet::new(&["x"]).unwrap();
        let d = Derivation::from_text(&r, &[("x", "x")]).unwrap();
        assert!(matches!(d.certify_locally_nilpotent(10), Err(Error::NotCertified { .. })));
    }

    #[test]
    fn flow_requires_certificate() {
        let (r, d) = plane();
        let y = Polynomial::var(&r, "y").unwrap();
        assert_eq!(d.flow_at(&rat(1), &y), Err(Error::Uncertified));
        let d = d.certified(4).unwrap();
        assert_eq!(d.flow_at(&rat(3), &y).unwrap().to_string(), "y + 3");
    }

    #[test]
    fn lines_round_trip() {
        let (r, d) = plane();
        let text = d.to_lines();
        assert_eq!(text, "x = 0\ny = 1\n");
        let back = Derivation::parse_lines(&r, &text).unwrap();
        assert_eq!(back.images(), d.images());
    }
}

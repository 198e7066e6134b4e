use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::variables::same_ring;
use crate::polyring::{Monomial, MultiDegree, Rational, VariableSet, WeightSystem};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending in the lex order of the ambient
/// [`VariableSet`]; no stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<VariableSet>,
    terms: Vec<(Monomial, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Outcome of a homogeneity test against a weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Any,
    Homogeneous(MultiDegree),
    Inhomogeneous,
}

impl Polynomial {
    pub fn zero(ring: &Arc<VariableSet>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<VariableSet>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<VariableSet>, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    pub fn integer(ring: &Arc<VariableSet>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn monomial(ring: &Arc<VariableSet>, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Arc<VariableSet>, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.len(), index, 1), Rational::one())
    }

    pub fn var(ring: &Arc<VariableSet>, name: &str) -> Result<Self> {
        Ok(Self::variable(ring, ring.require(name)?))
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(ring: &Arc<VariableSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<VariableSet>, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &Rational)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp_monomials(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.merge(other, false),
            ArithOp::Sub => self.merge(other, true),
            ArithOp::Mul => self.product(other),
        })
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate { -c } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Multiplication by `c * m`; a monomial shift preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.len()), c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Highest exponent of `var` among the terms (0 for the zero polynomial).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Coefficient of `var^exp`, as a polynomial free of `var`.
    pub fn coefficient_of_power(&self, var: usize, exp: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) == exp)
            .map(|(m, c)| {
                let mut m = m.clone();
                m.set_exponent(var, 0);
                (m, c.clone())
            })
            .collect::<Vec<_>>();
        // Dropping one variable keeps relative lex order of the survivors.
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(var) > 0).map(|(m, c)| {
            let e = m.exponent(var);
            let mut m = m.clone();
            m.set_exponent(var, e - 1);
            (m, c * Rational::from_integer(e.into()))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn multidegree(&self, w: &WeightSystem) -> Result<Homogeneity> {
        w.check_ring(&self.ring)?;
        let mut iter = self.terms.iter();
        let Some((first, _)) = iter.next() else {
            return Ok(Homogeneity::Any);
        };
        let d = w.degree_of(first);
        for (m, _) in iter {
            if w.degree_of(m) != d {
                return Ok(Homogeneity::Inhomogeneous);
            }
        }
        Ok(Homogeneity::Homogeneous(d))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.len() {
            let missing = self.ring.name(point.len().min(self.ring.len() - 1));
            return Err(Error::MissingImage(missing.to_string()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The algebra homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.len() {
            let missing = self.ring.name(images.len().min(self.ring.len() - 1));
            return Err(Error::MissingImage(missing.to_string()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .expect("variable sets are nonempty");
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| images[v].pow(e))
                    .clone();
                t = t.product(&p);
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Substitutes by variable name; unnamed variables map to themselves.
    pub fn substitute_named(&self, images: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let mut all: Vec<Polynomial> = (0..self.ring.len())
            .map(|i| Polynomial::variable(&self.ring, i))
            .collect();
        for (name, p) in images {
            all[self.ring.require(name)?] = p.clone();
        }
        self.substitute(&all)
    }

    /// Re-expresses the polynomial over a ring that extends this one.
    pub fn embed(&self, target: &Arc<VariableSet>) -> Result<Polynomial> {
        if !self.ring.is_prefix_of(target) {
            return Err(Error::RingMismatch);
        }
        let n = target.len();
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.extended(n), c.clone())),
        ))
    }

    /// Terms whose monomial satisfies `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect(),
        }
    }

    pub fn parse(ring: &Arc<VariableSet>, text: &str) -> Result<Polynomial> {
        crate::polyring::parse::parse_polynomial(ring, text)
    }

    pub(crate) fn fmt_monomial(ring: &VariableSet, m: &Monomial, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(ring.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }

    pub fn monomial_text(ring: &VariableSet, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        Self::fmt_monomial(ring, m, &mut s).expect("writing to a String");
        s
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                Self::fmt_monomial(&self.ring, m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator sugar; mixing variable sets here is a programming error.
macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("polynomial operands over different variable sets")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::variables::same_ring;
use crate::polyring::{Monomial, VariableSet};

/// Integer degree vector under a [`WeightSystem`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }

    pub fn zero(rank: usize) -> Self {
        MultiDegree(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| a * k).collect())
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }
}

impl<const N: usize> From<[i64; N]> for MultiDegree {
    fn from(v: [i64; N]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Per-variable integer weight vectors of a common rank.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightSystem {
    ring: Arc<VariableSet>,
    rank: usize,
    weights: Vec<Vec<i64>>,
}

impl WeightSystem {
    pub fn new(ring: &Arc<VariableSet>, weights: Vec<Vec<i64>>) -> Result<Self> {
        if weights.len() != ring.len() {
            return Err(Error::WeightMismatch(format!(
                "{} weight vectors for {} variables",
                weights.len(),
                ring.len()
            )));
        }
        let rank = weights[0].len();
        if rank == 0 || weights.iter().any(|w| w.len() != rank) {
            return Err(Error::WeightMismatch("weight vectors must share a positive rank".into()));
        }
        Ok(Self {
            ring: ring.clone(),
            rank,
            weights,
        })
    }

    /// Standard grading: every variable has weight 1.
    pub fn standard(ring: &Arc<VariableSet>) -> Self {
        Self::new(ring, vec![vec![1]; ring.len()]).expect("consistent by construction")
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self, var: usize) -> &[i64] {
        &self.weights[var]
    }

    pub fn check_ring(&self, ring: &Arc<VariableSet>) -> Result<()> {
        if same_ring(&self.ring, ring) {
            Ok(())
        } else {
            Err(Error::WeightMismatch("weight system belongs to another variable set".into()))
        }
    }

    pub fn degree_of(&self, m: &Monomial) -> MultiDegree {
        let mut d = vec![0i64; self.rank];
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                for (acc, w) in d.iter_mut().zip(&self.weights[v]) {
                    *acc += w * e as i64;
                }
            }
        }
        MultiDegree(d)
    }

    /// Every monomial of degree exactly `d`, in descending lex order.
    ///
    /// With `restrict`, only the listed variables may occur. The piece is
    /// finite when each allowed variable has a positive weight in some
    /// coordinate where no allowed variable has negative weight; otherwise
    /// this returns [`Error::InfiniteGradedPiece`].
    pub fn monomial_basis(&self, d: &MultiDegree, restrict: Option<&[usize]>) -> Result<Vec<Monomial>> {
        if d.rank() != self.rank {
            return Err(Error::WeightMismatch(format!(
                "degree {d} has rank {} but the weight system has rank {}",
                d.rank(),
                self.rank
            )));
        }
        let vars: Vec<usize> = match restrict {
            Some(r) => {
                let mut r = r.to_vec();
                r.sort_unstable();
                r.dedup();
                if let Some(&bad) = r.iter().find(|&&v| v >= self.ring.len()) {
                    return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
                }
                r
            }
            None => (0..self.ring.len()).collect(),
        };
        let bounding: Vec<usize> = (0..self.rank)
            .filter(|&c| vars.iter().all(|&v| self.weights[v][c] >= 0))
            .collect();
        let mut caps = Vec::with_capacity(vars.len());
        for &v in &vars {
            let cap = bounding
                .iter()
                .filter(|&&c| self.weights[v][c] > 0)
                .map(|&c| {
                    if d.0[c] < 0 {
                        0
                    } else {
                        (d.0[c] / self.weights[v][c]) as u32
                    }
                })
                .min();
            match cap {
                Some(c) => caps.push(c),
                None => {
                    return Err(Error::InfiniteGradedPiece(format!(
                        "variable `{}` has no positive weight in a nonnegative coordinate",
                        self.ring.name(v)
                    )))
                }
            }
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.ring.len()];
        let mut acc = vec![0i64; self.rank];
        self.enumerate(&vars, &caps, &bounding, d, 0, &mut exps, &mut acc, &mut out);
        out.sort_unstable_by(|a, b| self.ring.cmp_monomials(b, a));
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        vars: &[usize],
        caps: &[u32],
        bounding: &[usize],
        d: &MultiDegree,
        pos: usize,
        exps: &mut Vec<u32>,
        acc: &mut Vec<i64>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == vars.len() {
            if acc[..] == d.0[..] {
                out.push(Monomial::from_exponents(exps.iter().copied()));
            }
            return;
        }
        let v = vars[pos];
        let w = &self.weights[v];
        for e in 0..=caps[pos] {
            if e > 0 {
                for (a, wc) in acc.iter_mut().zip(w) {
                    *a += wc;
                }
            }
            if bounding.iter().any(|&c| acc[c] > d.0[c]) {
                // Partial sums only grow in bounding coordinates.
                for (a, wc) in acc.iter_mut().zip(w) {
                    *a -= wc * e as i64;
                }
                exps[v] = 0;
                return;
            }
            exps[v] = e;
            self.enumerate(vars, caps, bounding, d, pos + 1, exps, acc, out);
        }
        for (a, wc) in acc.iter_mut().zip(w) {
            *a -= wc * caps[pos] as i64;
        }
        exps[v] = 0;
    }
}

impl fmt::Debug for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, w) in self.weights.iter().enumerate() {
            m.entry(&self.ring.name(i), w);
        }
        m.finish()
    }
}

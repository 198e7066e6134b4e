//! Exact linear algebra over the rationals by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Reduced row echelon form: each pivot is 1 and is the only nonzero entry
/// in its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = lcm_of_denominators(row);
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Gauss-Jordan elimination of `matrix` (rows of length `ncols`).
///
/// Rows are scaled to integers and eliminated without division; row content
/// is removed after each update. Among candidate pivots in a column the
/// smallest nonzero magnitude is chosen, which keeps entries short.
pub fn rref(matrix: &[Vec<Rational>], ncols: usize) -> Rref {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length must equal the column count");
            integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    for r in rows.iter_mut() {
        remove_content(r);
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let best = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
        let Some(p) = best else { continue };
        rows.swap(top, p);
        let pivot_row = rows[top].clone();
        let pv = &pivot_row[col];
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * pv - &f * y;
            }
            remove_content(row);
        }
        pivots.push(col);
        top += 1;
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    rows.truncate(pivots.len());
    let rows = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let p = row[c].clone();
            row.into_iter().map(|x| Rational::new(x, p.clone())).collect()
        })
        .collect();
    Rref { rows, pivots, ncols }
}

pub fn rank(matrix: &[Vec<Rational>], ncols: usize) -> usize {
    rref(matrix, ncols).pivots.len()
}

/// Basis of `{v : matrix * v = 0}`, one vector per free column, with a 1
/// at that column and 0 at the other free columns.
pub fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let e = rref(matrix, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &c) in e.rows.iter().zip(&e.pivots) {
                v[c] = -&row[f];
            }
            v
        })
        .collect()
}

/// A solution of `matrix * v = rhs` with every free variable set to 0, or
/// `None` when the system is inconsistent.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    assert_eq!(matrix.len(), rhs.len(), "one right-hand side per row");
    let aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let e = rref(&aug, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut v = vec![Rational::zero(); ncols];
    for (row, &c) in e.rows.iter().zip(&e.pivots) {
        v[c] = row[ncols].clone();
    }
    Some(v)
}

/// Integer determinant of a square matrix via the echelon form.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            let (top, rest) = m.split_at_mut(r);
            for (dst, src) in rest[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *dst -= &f * src;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rref_of_rank_two() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = rref(&m, 3);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], vec![rat(1), rat(0), rat(1)]);
        assert_eq!(e.rows[1], vec![rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = mat(&[&[1, 2, 3, 4], &[0, 1, 1, 1]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve(&m, &[rat(1), rat(1)], 2), Some(vec![crate::ratio(1, 2), crate::ratio(1, 3)]));
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&m, &[rat(1), rat(2)], 2), None);
    }

    #[test]
    fn determinant_of_u_degrees() {
        let m = mat(&[&[3, 3, 0], &[3, 0, 3], &[0, 3, 3]]);
        assert_eq!(determinant(&m), rat(-54));
        assert_eq!(rank(&m, 3), 3);
    }
}

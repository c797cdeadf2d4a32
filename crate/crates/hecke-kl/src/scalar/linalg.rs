//! Exact row reduction over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solve `A x = b` for `A` given by rows. Returns one solution, free variables set to zero.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][ncols].clone();
    }
    Some(x)
}

/// Basis of the null space `{x : A x = 0}`.
pub fn null_space(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (i, &c) in pivots.iter().enumerate() {
                x[c] = -m[i][f].clone();
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &[q(3), q(6), q(1)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(solve(&a, &[q(3), q(7), q(1)]).is_none());
    }

    #[test]
    fn kernel() {
        let a = vec![vec![q(1), q(1), q(0)]];
        let ns = null_space(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!((&v[0] + &v[1]).is_zero());
        }
    }
}

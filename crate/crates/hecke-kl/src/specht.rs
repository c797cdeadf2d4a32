//! Specht modules realised inside `Q[x_1, ..., x_n]`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::scalar::linalg::{null_space, q, rank, solve, Q};
use crate::tableau::{Partition, Tableau};
use crate::Poly;

/// A filling of a Young diagram by `1..n`, each used once. Rows and columns need not increase.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(&lens)?;
        let n: usize = lens.iter().sum();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!("{:?} is not a filling by 1..{}", rows, n)));
            }
            seen[e] = true;
        }
        Ok(Filling { rows })
    }

    /// Fill `shape` row by row with the one-line notation of `w`.
    pub fn from_permutation(shape: &Partition, w: &Permutation) -> Result<Self> {
        if shape.size() != w.n() {
            return Err(Error::ShapeMismatch(format!("{} has {} boxes, permutation has rank {}", shape, shape.size(), w.n())));
        }
        let imgs = w.images();
        let mut it = imgs.into_iter();
        Filling::new(shape.parts().iter().map(|&l| it.by_ref().take(l).collect()).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(&self.rows.iter().map(|r| r.len()).collect::<Vec<_>>()).expect("validated on construction")
    }

    /// Replace each entry `i` by `w(i)`.
    pub fn act(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.size() {
            return Err(Error::RankMismatch(self.size(), w.n()));
        }
        Ok(Filling { rows: self.rows.iter().map(|r| r.iter().map(|&e| w.image(e)).collect()).collect() })
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map(|r| r.len()).unwrap_or(0);
        (0..width).map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect()
    }
}

impl From<&Tableau> for Filling {
    fn from(t: &Tableau) -> Self {
        Filling { rows: t.rows().to_vec() }
    }
}

fn root(n: usize, i: usize, j: usize) -> Poly {
    &Poly::var(n, i) - &Poly::var(n, j)
}

/// `g_T`: the product of `x_i - x_j` over pairs with `i` above `j` in one column.
pub fn g_polynomial(t: &Filling) -> Poly {
    let n = t.size();
    let mut out = Poly::one(n);
    for col in t.columns() {
        for a in 0..col.len() {
            for b in a + 1..col.len() {
                out = &out * &root(n, col[a], col[b]);
            }
        }
    }
    out
}

/// Product of `x_i - x_j`, `i < j`, over each block of consecutive indices of the given sizes.
pub fn positive_roots_product(sizes: &[usize]) -> Poly {
    let n: usize = sizes.iter().sum();
    let mut out = Poly::one(n);
    let mut start = 1;
    for &k in sizes {
        for i in start..start + k {
            for j in i + 1..start + k {
                out = &out * &root(n, i, j);
            }
        }
        start += k;
    }
    out
}

/// Coordinates of polynomials against a fixed list of monomials.
struct Coords {
    monomials: Vec<Vec<u32>>,
}

impl Coords {
    fn of(polys: &[&Poly]) -> Self {
        let mut monomials: Vec<Vec<u32>> = polys.iter().flat_map(|p| p.monomials().cloned()).collect();
        monomials.sort();
        monomials.dedup();
        Coords { monomials }
    }

    fn vector(&self, p: &Poly) -> Option<Vec<Q>> {
        let index: BTreeMap<&Vec<u32>, usize> = self.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![Q::zero(); self.monomials.len()];
        for (m, c) in p.terms_grlex() {
            v[*index.get(m)?] = q(*c);
        }
        Some(v)
    }
}

/// `{g_T : T standard of shape λ}`, checked to be linearly independent.
pub fn specht_basis(lambda: &Partition) -> Result<Vec<Poly>> {
    let polys: Vec<Poly> = Tableau::all_standard(lambda).iter().map(|t| g_polynomial(&Filling::from(t))).collect();
    let coords = Coords::of(&polys.iter().collect::<Vec<_>>());
    let rows: Vec<Vec<Q>> = polys.iter().map(|p| coords.vector(p).expect("monomials collected from p")).collect();
    let r = rank(&rows);
    if r != polys.len() {
        return Err(Error::Violation(format!("the {} standard g_T of shape {} span only {} dimensions", polys.len(), lambda, r)));
    }
    Ok(polys)
}

pub fn specht_dimension(lambda: &Partition) -> Result<usize> {
    Ok(specht_basis(lambda)?.len())
}

/// The Specht module of `λ` with its standard basis, for repeated coordinate solves.
pub struct SpechtSpace {
    lambda: Partition,
    basis: Vec<Poly>,
    coords: Coords,
    // transpose of the coordinate matrix: one row per monomial
    columns: Vec<Vec<Q>>,
}

impl SpechtSpace {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let basis = specht_basis(lambda)?;
        let coords = Coords::of(&basis.iter().collect::<Vec<_>>());
        let vecs: Vec<Vec<Q>> = basis.iter().map(|p| coords.vector(p).expect("basis monomials")).collect();
        let columns = (0..coords.monomials.len()).map(|m| vecs.iter().map(|v| v[m].clone()).collect()).collect();
        Ok(SpechtSpace { lambda: lambda.clone(), basis, coords, columns })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p` in the standard basis, or `None` if `p` lies outside the span.
    pub fn coordinates(&self, p: &Poly) -> Result<Option<Vec<Q>>> {
        let n = self.lambda.size();
        if p.nvars() != n {
            return Err(Error::RankMismatch(n, p.nvars()));
        }
        if p.is_zero() {
            return Ok(Some(vec![Q::zero(); self.dimension()]));
        }
        let expected = self.lambda.r() as u32;
        let found = p.degree().unwrap_or(0);
        if !p.is_homogeneous() || found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        let Some(b) = self.coords.vector(p) else { return Ok(None) };
        Ok(solve(&self.columns, &b))
    }

    /// Matrix of `w` acting on the standard basis; column `j` holds the coordinates of `w(g_j)`.
    pub fn action_matrix(&self, w: &Permutation) -> Result<Vec<Vec<Q>>> {
        let d = self.dimension();
        let mut m = vec![vec![Q::zero(); d]; d];
        for (j, g) in self.basis.iter().enumerate() {
            let c = self
                .coordinates(&g.permute(w))?
                .ok_or_else(|| Error::Violation(format!("span of shape {} is not stable under {}", self.lambda, w.name())))?;
            for (i, x) in c.into_iter().enumerate() {
                m[i][j] = x;
            }
        }
        Ok(m)
    }
}

/// Whether `p` lies in the span of the `g_T` of shape `λ`. Errors unless `p` is homogeneous of degree `r(λ)`.
pub fn membership_in_span(p: &Poly, lambda: &Partition) -> Result<bool> {
    Ok(SpechtSpace::new(lambda)?.coordinates(p)?.is_some())
}

/// Rank of the span of `g_T` over every filling of shape `λ`.
pub fn all_fillings_rank(lambda: &Partition) -> Result<usize> {
    let polys: Vec<Poly> = all_permutations(lambda.size())
        .iter()
        .map(|w| Filling::from_permutation(lambda, w).map(|f| g_polynomial(&f)))
        .collect::<Result<_>>()?;
    let coords = Coords::of(&polys.iter().collect::<Vec<_>>());
    let mut rows: Vec<Vec<Q>> = polys.iter().map(|p| coords.vector(p).expect("own monomials")).collect();
    rows.sort();
    rows.dedup();
    Ok(rank(&rows))
}

/// Dimension of the space of matrices commuting with the action of every simple transposition.
pub fn commutant_dimension(lambda: &Partition) -> Result<usize> {
    let space = SpechtSpace::new(lambda)?;
    let n = lambda.size();
    let d = space.dimension();
    // unknown X[i][k] sits at column i * d + k; each generator contributes d^2 equations (XA - AX)_{ij} = 0
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for s in 1..n {
        let a = space.action_matrix(&Permutation::simple(n, s)?)?;
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![Q::zero(); d * d];
                for k in 0..d {
                    row[i * d + k] += &a[k][j];
                    row[k * d + j] -= &a[i][k];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    Ok(null_space(&eqs, d * d).len())
}

pub fn poly_to_json(p: &Poly) -> Value {
    json!({ "nvars": p.nvars(), "terms": p.to_json() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn small_generators() {
        assert_eq!(g_polynomial(&Filling::new(vec![vec![1, 2, 3]]).unwrap()), Poly::one(3));
        let t = Filling::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let expected = &(&x(4, 1) - &x(4, 3)) * &(&x(4, 2) - &x(4, 4));
        assert_eq!(g_polynomial(&t), expected);
        assert!(Filling::new(vec![vec![1, 1]]).is_err());
        assert!(Filling::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn action_on_generators() {
        let t = Filling::new(vec![vec![3, 1], vec![2, 4]]).unwrap();
        for w in all_permutations(4) {
            assert_eq!(g_polynomial(&t).permute(&w), g_polynomial(&t.act(&w).unwrap()));
        }
    }

    #[test]
    fn dimensions_match_standard_tableaux() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                assert_eq!(specht_dimension(&lambda).unwrap(), Tableau::all_standard(&lambda).len());
            }
        }
        assert_eq!(specht_dimension(&part(&[2, 1])).unwrap(), 2);
    }

    #[test]
    fn membership() {
        let l = part(&[2, 2]);
        let p = &(&x(4, 1) - &x(4, 4)) * &(&x(4, 3) - &x(4, 2));
        assert!(membership_in_span(&p, &l).unwrap());
        let pcol = g_polynomial(&Filling::from(&Tableau::column_reading(&l)));
        assert!(membership_in_span(&pcol, &l).unwrap());
        let bad = &x(4, 1) * &pcol;
        assert!(matches!(membership_in_span(&bad, &l), Err(Error::DegreeMismatch { .. })));
        let outside = &(&x(4, 1) - &x(4, 2)) * &(&x(4, 1) - &x(4, 2));
        assert!(!membership_in_span(&outside, &l).unwrap());
        assert!(membership_in_span(&Poly::zero(4), &l).unwrap());
    }

    #[test]
    fn root_products() {
        assert_eq!(positive_roots_product(&[2]), &x(2, 1) - &x(2, 2));
        let three = &(&(&x(3, 1) - &x(3, 2)) * &(&x(3, 1) - &x(3, 3))) * &(&x(3, 2) - &x(3, 3));
        assert_eq!(positive_roots_product(&[3]), three);
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let pcol = g_polynomial(&Filling::from(&Tableau::column_reading(&lambda)));
                assert_eq!(positive_roots_product(lambda.transpose().parts()), pcol);
                assert_eq!(pcol.degree(), Some(lambda.r() as u32));
            }
        }
    }

    #[test]
    fn all_fillings_and_commutant() {
        for n in 1..=4 {
            for lambda in Partition::all(n) {
                let d = Tableau::all_standard(&lambda).len();
                assert_eq!(all_fillings_rank(&lambda).unwrap(), d);
                assert_eq!(commutant_dimension(&lambda).unwrap(), 1);
            }
        }
    }
}

//! Partitions, standard Young tableaux and the Robinson-Schensted correspondence.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    pub fn row(n: usize) -> Self {
        Partition { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// `self <= other` in dominance order. Partitions of different sizes are not comparable.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::ShapeMismatch(format!("cannot compare {} with {}", self, other)));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance `self < other`.
    pub fn dominance_lt(&self, other: &Self) -> Result<bool> {
        Ok(self != other && self.dominance_leq(other)?)
    }

    /// `r(λ) = sum (i-1) λ_i`.
    pub fn r(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `c(λ) = r(λ^t)`.
    pub fn c(&self) -> usize {
        self.transpose().r()
    }

    /// Total content `x(λ) = c(λ) - r(λ)`.
    pub fn x(&self) -> i64 {
        self.c() as i64 - self.r() as i64
    }

    pub fn statistics(&self) -> (usize, usize, i64) {
        (self.r(), self.c(), self.x())
    }

    /// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions obtained by adding one box.
    pub fn children(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > cur {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| i + 1 == self.len() || self.parts[i + 1] < self.parts[i]).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part '{}'", s))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }

    pub fn to_json(&self) -> Value {
        json!(self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A standard Young tableau with entries `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(format!("row lengths of {:?} are not a partition", rows)));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!("entries of {:?} are not 1..{}", rows, n)));
            }
            seen[e] = true;
        }
        for (i, r) in rows.iter().enumerate() {
            for j in 0..r.len() {
                if j > 0 && r[j - 1] >= r[j] {
                    return Err(Error::InvalidTableau(format!("row {} of {:?} is not increasing", i + 1, rows)));
                }
                if i > 0 && rows[i - 1][j] >= r[j] {
                    return Err(Error::InvalidTableau(format!("column {} of {:?} is not increasing", j + 1, rows)));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len()).collect() }
    }

    /// `(row, column)` of entry `e`, zero based.
    pub fn position(&self, e: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|&x| x == e).map(|j| (i, j)))
    }

    /// The subtableau `T^k` of entries `<= k`.
    pub fn restrict(&self, k: usize) -> Tableau {
        let rows = self.rows.iter().map(|r| r.iter().copied().filter(|&e| e <= k).collect::<Vec<_>>()).filter(|r| !r.is_empty()).collect();
        Tableau { rows }
    }

    pub fn transpose(&self) -> Tableau {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..cols).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect();
        Tableau { rows }
    }

    /// Tableau filled row by row.
    pub fn row_reading(shape: &Partition) -> Tableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        Tableau { rows }
    }

    /// Tableau filled column by column (`P_col`).
    pub fn column_reading(shape: &Partition) -> Tableau {
        Tableau::row_reading(&shape.transpose()).transpose()
    }

    /// All standard tableaux of the given shape, sorted.
    pub fn all_standard(shape: &Partition) -> Vec<Tableau> {
        fn go(parts: &mut Vec<usize>, n: usize) -> Vec<Vec<Vec<usize>>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for i in 0..parts.len() {
                let removable = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
                if !removable {
                    continue;
                }
                parts[i] -= 1;
                for mut t in go(parts, n - 1) {
                    while t.len() <= i {
                        t.push(vec![]);
                    }
                    t[i].push(n);
                    out.push(t);
                }
                parts[i] += 1;
            }
            out
        }
        let mut parts = shape.parts().to_vec();
        let mut out: Vec<Tableau> = go(&mut parts, shape.size()).into_iter().map(|rows| Tableau { rows }).collect();
        out.sort();
        out
    }

    /// Shapes `λ^1 ⊂ λ^2 ⊂ ... ⊂ λ^n` of the restrictions.
    pub fn path(&self) -> Vec<Partition> {
        (1..=self.size()).map(|k| self.restrict(k).shape()).collect()
    }

    pub fn from_path(path: &[Partition]) -> Result<Tableau> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut prev = Partition::row(0);
        for (k, lam) in path.iter().enumerate() {
            if lam.size() != k + 1 {
                return Err(Error::InvalidTableau(format!("path step {} has size {}", k + 1, lam.size())));
            }
            let i = (0..lam.len()).find(|&i| lam.parts()[i] != prev.parts().get(i).copied().unwrap_or(0));
            match i {
                Some(i) if prev.children().contains(lam) => {
                    if rows.len() <= i {
                        rows.push(vec![]);
                    }
                    rows[i].push(k + 1);
                }
                _ => return Err(Error::InvalidTableau(format!("{} does not extend {} by one box", lam, prev))),
            }
            prev = lam.clone();
        }
        Tableau::new(rows)
    }

    /// `T <= U` iff `shape(T^k) <= shape(U^k)` in dominance order for every `k`.
    pub fn dominance_leq(&self, other: &Tableau) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::ShapeMismatch(format!("tableaux of sizes {} and {}", self.size(), other.size())));
        }
        for k in 1..=self.size() {
            if !self.restrict(k).shape().dominance_leq(&other.restrict(k).shape())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses `"1,2/3"`, `"1 2;3"` or, for `n < 10`, `"12/3"`.
    pub fn parse(text: &str) -> Result<Tableau> {
        let rows = text
            .trim()
            .split(['/', ';'])
            .map(|row| {
                let row = row.trim();
                if row.contains(',') || row.contains(' ') {
                    row.split([',', ' '])
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad tableau entry '{}'", s))))
                        .collect::<Result<Vec<_>>>()
                } else {
                    row.chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad tableau entry '{}'", c))))
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Row insertion of the one-line word `w(1) ... w(n)`: returns the insertion and recording tableaux.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for i in 1..=w.n() {
        let mut x = w.image(i);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![i]);
                break;
            }
            match p[row].iter().position(|&e| e > x) {
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(i);
                    break;
                }
            }
        }
    }
    (Tableau { rows: p }, Tableau { rows: q })
}

/// The permutation `w(P, Q)` with insertion tableau `P` and recording tableau `Q`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!("P has shape {}, Q has shape {}", p.shape(), q.shape())));
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    let mut images = vec![0usize; n];
    for i in (1..=n).rev() {
        let (r, c) = q.position(i).ok_or_else(|| Error::InvalidTableau(format!("{} missing from Q", i)))?;
        debug_assert_eq!(c + 1, rows[r].len());
        let mut x = rows[r].pop().unwrap();
        if rows[r].is_empty() {
            rows.pop();
        }
        for row in (0..r).rev() {
            let j = rows[row].iter().rposition(|&e| e < x).expect("standard tableau");
            std::mem::swap(&mut rows[row][j], &mut x);
        }
        images[i - 1] = x;
    }
    Permutation::from_images(&images)
}

/// The dual tableau `P^∨`: transpose of the insertion tableau of `w_0 x` for any `x` with insertion tableau `P`.
pub fn schutzenberger_dual(p: &Tableau) -> Tableau {
    let x = rsk_inverse(p, p).expect("same shape");
    let n = x.n();
    let w0x = Permutation::from_images(&x.images().iter().map(|&i| n + 1 - i).collect::<Vec<_>>()).unwrap();
    rsk(&w0x).0.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(part(&[4, 3, 1]).statistics(), (5, 9, 4));
        assert_eq!(part(&[3, 1, 1, 1]).statistics(), (6, 3, -3));
        assert_eq!(part(&[2, 2, 2]).statistics(), (6, 3, -3));
        for n in 1..7 {
            assert_eq!(Partition::row(n).statistics(), (0, n * (n - 1) / 2, (n * (n - 1) / 2) as i64));
        }
    }

    #[test]
    fn partition_counts_and_dominance() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert!(part(&[2, 2]).dominance_leq(&part(&[3, 1])).unwrap());
        assert!(!part(&[3, 1, 1, 1]).dominance_leq(&part(&[2, 2, 2])).unwrap());
        assert!(!part(&[2, 2, 2]).dominance_leq(&part(&[3, 1, 1, 1])).unwrap());
        assert!(part(&[2]).dominance_leq(&part(&[2, 1])).is_err());
        for n in 1..7 {
            for l in Partition::all(n) {
                assert_eq!(l.transpose().transpose(), l);
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(Tableau::new(vec![vec![1, 3], vec![2, 4], vec![5, 6]]).is_ok());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![4]]).is_err());
    }

    #[test]
    fn syt_counts_are_hook_lengths() {
        for n in 1..=7 {
            let total: usize = Partition::all(n).iter().map(|l| Tableau::all_standard(l).len().pow(2)).sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
        assert_eq!(Tableau::all_standard(&part(&[3, 2])).len(), 5);
    }

    #[test]
    fn rsk_is_a_bijection() {
        for n in 1..=6 {
            let mut pairs = std::collections::HashSet::new();
            for w in all_permutations(n) {
                let (p, q) = rsk(&w);
                assert_eq!(rsk_inverse(&p, &q).unwrap(), w);
                let (pi, qi) = rsk(&w.inverse());
                assert_eq!((pi, qi), (q.clone(), p.clone()));
                assert!(pairs.insert((p, q)));
            }
        }
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&Permutation::identity(4));
        assert_eq!(p, Tableau::row_reading(&Partition::row(4)));
        assert_eq!(q, p);
        let lam = part(&[3, 2, 2]);
        let cols: Vec<usize> = lam.transpose().parts().to_vec();
        let w = Permutation::parabolic_longest(&cols).unwrap();
        let pc = Tableau::column_reading(&lam);
        assert_eq!(rsk(&w), (pc.clone(), pc));
        assert!(rsk_inverse(&Tableau::parse("12").unwrap(), &Tableau::parse("1/2").unwrap()).is_err());
    }

    #[test]
    fn dual_is_an_involution_on_shapes() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                for t in Tableau::all_standard(&l) {
                    let d = schutzenberger_dual(&t);
                    assert_eq!(d.shape(), l);
                    assert_eq!(schutzenberger_dual(&d), t);
                }
            }
        }
    }

    #[test]
    fn paths_and_parsing() {
        let t = Tableau::parse("1,3/2,4").unwrap();
        assert_eq!(Tableau::from_path(&t.path()).unwrap(), t);
        assert_eq!(Tableau::parse("13/24").unwrap(), t);
        assert_eq!(t.to_string(), "1,3/2,4");
        assert_eq!(t.restrict(3), Tableau::parse("13/2").unwrap());
        assert_eq!(Partition::parse("(4,3,1)").unwrap(), part(&[4, 3, 1]));
        let row = Tableau::row_reading(&part(&[2, 2]));
        assert!(t.dominance_leq(&row).unwrap());
        assert!(!row.dominance_leq(&t).unwrap());
    }
}

//! Kazhdan-Lusztig polynomials `h_{y,w}` for `S_n`.
//!
//! Normalization: `b_w = sum_y h_{y,w} H_y` with `h_{w,w} = 1` and `h_{y,w} in vZ[v]` for `y < w`.
//! The table is filled by the recursion `b_s b_x = b_{sx} + sum_z mu(z,x) b_z` over `z < x` with
//! `sz < z`, for `s` a left descent of `w = sx`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{group, SymGroup};
use crate::perm::Permutation;
use crate::Laurent;

pub struct KlTable {
    group: Arc<SymGroup>,
    pool: Vec<Laurent>,
    rows: Vec<Vec<u32>>,
    mu: Vec<Vec<(u32, i64)>>,
}

struct Interner {
    pool: Vec<Laurent>,
    ids: HashMap<Laurent, u32>,
}

impl Interner {
    fn new() -> Self {
        let pool = vec![Laurent::zero(), Laurent::one()];
        let ids = pool.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        Interner { pool, ids }
    }

    fn intern(&mut self, p: Laurent) -> u32 {
        if let Some(&id) = self.ids.get(&p) {
            return id;
        }
        let id = self.pool.len() as u32;
        self.pool.push(p.clone());
        self.ids.insert(p, id);
        id
    }
}

impl KlTable {
    pub fn compute(n: usize) -> Self {
        let g = group(n);
        let order = g.order();
        let mut int = Interner::new();
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(order);
        let mut mu: Vec<Vec<(u32, i64)>> = Vec::with_capacity(order);
        rows.push(vec![1]);
        mu.push(Vec::new());
        let v = Laurent::v(1);
        let vinv = Laurent::v(-1);
        for w in 1..order as u32 {
            let s = g.first_left_descent(w).expect("non-identity has a left descent");
            let x = g.lmul(s, w);
            let corrections: Vec<(u32, i64)> = mu[x as usize].iter().copied().filter(|&(z, _)| g.left_descent(s, z)).collect();
            let mut row = vec![0u32; w as usize + 1];
            for y in 0..=w {
                let sy = g.lmul(s, y);
                let a = lookup(&rows, sy, x);
                let b = lookup(&rows, y, x);
                let mut any = a != 0 || b != 0;
                if !any {
                    any = corrections.iter().any(|&(z, _)| lookup(&rows, y, z) != 0);
                }
                if !any {
                    continue;
                }
                let shifted = if g.left_descent(s, y) { &int.pool[b as usize] * &vinv } else { &int.pool[b as usize] * &v };
                let mut c = &int.pool[a as usize] + &shifted;
                for &(z, m) in &corrections {
                    let hz = lookup(&rows, y, z);
                    if hz != 0 {
                        c -= &int.pool[hz as usize].scale(&m);
                    }
                }
                row[y as usize] = int.intern(c);
            }
            let mw: Vec<(u32, i64)> = (0..w)
                .filter_map(|y| {
                    let id = row[y as usize];
                    let m = if id == 0 { 0 } else { int.pool[id as usize].coeff(1) };
                    (m != 0).then_some((y, m))
                })
                .collect();
            rows.push(row);
            mu.push(mw);
        }
        KlTable { group: g, pool: int.pool, rows, mu }
    }

    /// Rebuild from explicit nonzero entries `(y, w, h_{y,w})`, e.g. from the disk cache.
    pub fn from_entries<I: IntoIterator<Item = (u32, u32, Laurent)>>(n: usize, entries: I) -> Result<Self> {
        let g = group(n);
        let order = g.order();
        let mut int = Interner::new();
        let mut rows: Vec<Vec<u32>> = (0..order).map(|w| vec![0u32; w + 1]).collect();
        for (y, w, p) in entries {
            if w as usize >= order || y > w {
                return Err(Error::Cache(format!("entry ({}, {}) outside the triangular table", y, w)));
            }
            rows[w as usize][y as usize] = int.intern(p);
        }
        let mu = (0..order as u32)
            .map(|w| {
                (0..w)
                    .filter_map(|y| {
                        let id = rows[w as usize][y as usize];
                        let m = if id == 0 { 0 } else { int.pool[id as usize].coeff(1) };
                        (m != 0).then_some((y, m))
                    })
                    .collect()
            })
            .collect();
        Ok(KlTable { group: g, pool: int.pool, rows, mu })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    /// Number of distinct polynomials stored, including `0` and `1`.
    pub fn distinct_polynomials(&self) -> usize {
        self.pool.len()
    }

    pub fn h_idx(&self, y: u32, w: u32) -> &Laurent {
        &self.pool[lookup(&self.rows, y, w) as usize]
    }

    pub fn h(&self, y: &Permutation, w: &Permutation) -> Result<Laurent> {
        self.check_rank(y)?;
        self.check_rank(w)?;
        Ok(self.h_idx(self.group.index_of(y), self.group.index_of(w)).clone())
    }

    /// Nonzero entries of the column `h_{-,w}`, as `(y, h_{y,w})` with `y` ascending.
    pub fn column(&self, w: u32) -> impl Iterator<Item = (u32, &Laurent)> + '_ {
        self.rows[w as usize]
            .iter()
            .enumerate()
            .filter(|(_, &id)| id != 0)
            .map(move |(y, &id)| (y as u32, &self.pool[id as usize]))
    }

    /// All nonzero entries `(y, w, h)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Laurent)> + '_ {
        (0..self.rows.len() as u32).flat_map(move |w| self.column(w).map(move |(y, p)| (y, w, p)))
    }

    /// `(z, mu(z, w))` for all `z < w` with nonzero coefficient of `v` in `h_{z,w}`.
    pub fn mu_list(&self, w: u32) -> &[(u32, i64)] {
        &self.mu[w as usize]
    }

    /// `mu(x, s; y)`: the coefficient of `v` in `h_{y,x}` when `y < x` and `sy < y`, else zero.
    /// Requires `sx > x`.
    pub fn mu(&self, x: &Permutation, s: usize, y: &Permutation) -> Result<i64> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        if s == 0 || s >= self.n() {
            return Err(Error::InvalidPermutation(format!("s_{} out of range", s)));
        }
        let g = &self.group;
        let (xi, yi) = (g.index_of(x), g.index_of(y));
        if g.left_descent(s, xi) {
            return Err(Error::Violation(format!("mu(x, s; y) needs sx > x, but s_{} is a left descent of {:?}", s, x)));
        }
        if !g.left_descent(s, yi) || yi >= xi {
            return Ok(0);
        }
        Ok(self.h_idx(yi, xi).coeff(1))
    }

    /// Smooth iff every `h_{y,w}` with `y <= w` equals `v^{l(w)-l(y)}`.
    pub fn is_smooth_kl(&self, w: u32) -> bool {
        let g = &self.group;
        let lw = g.len(w) as i32;
        let nonzero = self.column(w).count();
        let bruhat = (0..=w).filter(|&y| g.elem(y).bruhat_leq(g.elem(w)).unwrap()).count();
        nonzero == bruhat && self.column(w).all(|(y, p)| *p == Laurent::v(lw - g.len(y) as i32))
    }

    /// Smoothness by both the KL criterion and pattern avoidance; errors if they disagree.
    pub fn is_smooth(&self, w: &Permutation) -> Result<bool> {
        self.check_rank(w)?;
        let a = self.is_smooth_kl(self.group.index_of(w));
        let b = w.avoids_singular_patterns();
        if a != b {
            return Err(Error::MethodDisagreement(format!(
                "smoothness of {:?}: KL criterion says {}, pattern avoidance says {}",
                w, a, b
            )));
        }
        Ok(a)
    }

    fn check_rank(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n() {
            return Err(Error::RankMismatch(self.n(), w.n()));
        }
        Ok(())
    }
}

#[inline]
fn lookup(rows: &[Vec<u32>], y: u32, w: u32) -> u32 {
    if y > w {
        0
    } else {
        rows[w as usize][y as usize]
    }
}

type Slot = Arc<OnceLock<Arc<KlTable>>>;

fn registry() -> &'static Mutex<HashMap<usize, Slot>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared KL table for rank `n`; computed on first use and frozen afterwards.
pub fn kl_table(n: usize) -> Arc<KlTable> {
    let slot = registry().lock().unwrap().entry(n).or_default().clone();
    slot.get_or_init(|| Arc::new(KlTable::compute(n))).clone()
}

/// Register a table obtained elsewhere (e.g. loaded from disk). Ignored if one is already present.
pub fn install_table(table: KlTable) -> Arc<KlTable> {
    let n = table.n();
    let slot = registry().lock().unwrap().entry(n).or_default().clone();
    let _ = slot.set(Arc::new(table));
    slot.get().unwrap().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn l(t: &[(i32, i64)]) -> Laurent {
        Laurent::from_i64_terms(t)
    }

    #[test]
    fn small_values() {
        let t = kl_table(2);
        assert_eq!(t.h(&p(2, "id"), &p(2, "s")).unwrap(), l(&[(1, 1)]));
        let t3 = kl_table(3);
        assert_eq!(t3.h(&p(3, "s"), &p(3, "ts")).unwrap(), l(&[(1, 1)]));
        assert_eq!(t3.mu(&p(3, "ts"), 1, &p(3, "s")).unwrap(), 1);
        assert_eq!(t3.mu(&p(3, "ts"), 1, &p(3, "t")).unwrap(), 0);
        assert!(t3.mu(&p(3, "st"), 1, &p(3, "t")).is_err());
    }

    #[test]
    fn singular_elements_of_s4() {
        let t = kl_table(4);
        assert_eq!(t.h(&p(4, "id"), &p(4, "tsut")).unwrap(), l(&[(2, 1), (4, 1)]));
        assert_eq!(t.h(&p(4, "id"), &p(4, "sutsu")).unwrap(), l(&[(3, 1), (5, 1)]));
    }

    #[test]
    fn longest_element_column() {
        for n in 1..=5 {
            let t = kl_table(n);
            let g = t.group();
            let w0 = g.longest();
            let l0 = g.len(w0) as i32;
            for y in 0..g.order() as u32 {
                assert_eq!(*t.h_idx(y, w0), Laurent::v(l0 - g.len(y) as i32));
            }
        }
    }

    #[test]
    fn support_is_bruhat_interval() {
        let t = kl_table(4);
        let g = t.group();
        for w in 0..24u32 {
            for y in 0..24u32 {
                let leq = g.elem(y).bruhat_leq(g.elem(w)).unwrap();
                assert_eq!(!t.h_idx(y, w).is_zero(), leq);
            }
        }
    }

    #[test]
    fn smoothness_methods_agree_s5() {
        let t = kl_table(5);
        let singular = all_permutations(5).iter().filter(|w| !t.is_smooth(w).unwrap()).count();
        assert!(singular > 0);
        for w in all_permutations(3) {
            assert!(kl_table(3).is_smooth(&w).unwrap());
        }
    }

    #[test]
    fn rebuild_from_entries() {
        let t = kl_table(4);
        let copy = KlTable::from_entries(4, t.entries().map(|(y, w, p)| (y, w, p.clone()))).unwrap();
        assert!(t.entries().zip(copy.entries()).all(|(a, b)| a == b));
        assert_eq!(t.mu, copy.mu);
    }
}

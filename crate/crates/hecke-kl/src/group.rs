//! Indexed model of `S_n` with precomputed multiplication tables.
//!
//! Elements are numbered by length, then lexicographically by one-line notation,
//! so `y <= w` in Bruhat order implies `index(y) <= index(w)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::perm::{all_permutations, Permutation};

pub struct SymGroup {
    n: usize,
    elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    length: Vec<u32>,
    lmul: Vec<Vec<u32>>,
    rmul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    first_left_descent: Vec<u32>,
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        let mut elems = all_permutations(n);
        elems.sort_by_cached_key(|w| (w.length(), w.clone()));
        let index: HashMap<Permutation, u32> = elems.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let length = elems.iter().map(|w| w.length() as u32).collect();
        let gens = n.saturating_sub(1);
        let table = |f: &dyn Fn(&Permutation, usize) -> Permutation| -> Vec<Vec<u32>> {
            (1..=gens).map(|i| elems.iter().map(|w| index[&f(w, i)]).collect()).collect()
        };
        let lmul = table(&|w, i| w.left_mul_simple(i));
        let rmul = table(&|w, i| w.right_mul_simple(i));
        let inverse = elems.iter().map(|w| index[&w.inverse()]).collect();
        let first_left_descent = elems
            .iter()
            .map(|w| (1..n).find(|&i| w.has_left_descent(i)).unwrap_or(0) as u32)
            .collect();
        SymGroup { n, elems, index, length, lmul, rmul, inverse, first_left_descent }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn elem(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    /// Index of `w`; panics if `w` has a different rank.
    pub fn index_of(&self, w: &Permutation) -> u32 {
        *self.index.get(w).unwrap_or_else(|| panic!("{:?} is not an element of S_{}", w, self.n))
    }

    pub fn try_index(&self, w: &Permutation) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn len(&self, i: u32) -> u32 {
        self.length[i as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        (self.elems.len() - 1) as u32
    }

    /// Index of `s_s w`.
    pub fn lmul(&self, s: usize, w: u32) -> u32 {
        self.lmul[s - 1][w as usize]
    }

    /// Index of `w s_s`.
    pub fn rmul(&self, w: u32, s: usize) -> u32 {
        self.rmul[s - 1][w as usize]
    }

    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    /// Smallest `i` with `s_i w < w`, or `None` for the identity.
    pub fn first_left_descent(&self, w: u32) -> Option<usize> {
        match self.first_left_descent[w as usize] {
            0 => None,
            i => Some(i as usize),
        }
    }

    pub fn left_descent(&self, s: usize, w: u32) -> bool {
        self.len(self.lmul(s, w)) < self.len(w)
    }

    pub fn right_descent(&self, w: u32, s: usize) -> bool {
        self.len(self.rmul(w, s)) < self.len(w)
    }

    /// Index of `w_0 x` (values reversed).
    pub fn left_w0(&self, x: u32) -> u32 {
        let n = self.n as u8;
        self.index_of(&Permutation::from_raw(self.elem(x).raw().iter().map(|&v| n + 1 - v).collect()))
    }

    /// Index of `x w_0` (positions reversed).
    pub fn right_w0(&self, x: u32) -> u32 {
        self.index_of(&Permutation::from_raw(self.elem(x).raw().iter().rev().copied().collect()))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.index_of(&self.elem(x).compose(self.elem(y)).expect("same rank"))
    }
}

/// Shared group for rank `n`, built once per process.
pub fn group(n: usize) -> Arc<SymGroup> {
    static GROUPS: OnceLock<Mutex<HashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
    let map = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = map.lock().unwrap().get(&n) {
        return g.clone();
    }
    let g = Arc::new(SymGroup::new(n));
    map.lock().unwrap().entry(n).or_insert(g).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        let g = group(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.elem(g.longest()), &Permutation::longest(4));
        for w in 0..24u32 {
            assert_eq!(g.inverse(g.inverse(w)), w);
            for s in 1..4 {
                assert_eq!(g.lmul(s, g.lmul(s, w)), w);
                let sw = g.elem(g.lmul(s, w));
                assert_eq!(sw, &Permutation::simple(4, s).unwrap().compose(g.elem(w)).unwrap());
            }
        }
        let all = g.elements();
        for (i, y) in all.iter().enumerate() {
            for (j, w) in all.iter().enumerate() {
                if y.bruhat_leq(w).unwrap() {
                    assert!(i <= j);
                }
            }
        }
    }

    #[test]
    fn rank_one() {
        let g = group(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.first_left_descent(0), None);
    }
}

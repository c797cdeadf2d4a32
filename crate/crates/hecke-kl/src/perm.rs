//! Symmetric-group elements in one-line notation.
//!
//! Products compose as functions, `(xy)(i) = x(y(i))`. Right multiplication by
//! `s_i` swaps positions `i, i+1`; left multiplication swaps the values `i, i+1`.
//! Words evaluate left to right as products of simple reflections.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Side on which a simple reflection acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A word in the simple reflections `s_1..s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(n, &self.0)
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "s{}", i)?;
        }
        Ok(())
    }
}

/// Element of `S_n`, stored as the images `w(1)..w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 255, "rank above 255 is not supported");
        Permutation { images: (1..=n as u8).collect() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::InvalidPermutation("rank above 255".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{:?} is not a bijection of 1..{}", images, n)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// The simple reflection `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!("s_{} is not a simple reflection of S_{}", i, n)));
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    pub fn from_word(n: usize, letters: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in letters {
            if i == 0 || i >= n {
                return Err(Error::InvalidPermutation(format!("letter {} out of range for S_{}", i, n)));
            }
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    /// The longest element `w_0`, i.e. the reversal.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n as u8).rev().collect() }
    }

    /// Longest element of the Young subgroup `S_{k_1} x ... x S_{k_r}` with consecutive blocks.
    pub fn parabolic_longest(sizes: &[usize]) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition(format!("{:?} has an empty block", sizes)));
        }
        let mut images = Vec::new();
        let mut start = 0;
        for &k in sizes {
            images.extend((start + 1..=start + k).rev());
            start += k;
        }
        Self::from_images(&images)
    }

    /// Minimal element `x(k, l)` of the coset `w_0 (S_k x S_l)`: the first `k` strands cross over the last `l`.
    pub fn cabled_crossing(k: usize, l: usize) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidPartition("cabled crossing needs positive blocks".into()));
        }
        let images: Vec<usize> = (l + 1..=l + k).chain(1..=l).collect();
        Self::from_images(&images)
    }

    /// Cabled half twist `x_lambda = w_0 w_lambda` for the given block sizes.
    pub fn cabled_half_twist(sizes: &[usize]) -> Result<Self> {
        let wl = Self::parabolic_longest(sizes)?;
        Self::longest(wl.n()).compose(&wl)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(Permutation { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() })
    }

    /// `w s_i`: swap positions `i, i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// `s_i w`: swap the values `i, i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `l(s_i w) < l(w)`: the value `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pa = self.images.iter().position(|&x| x as usize == i).unwrap();
        let pb = self.images.iter().position(|&x| x as usize == i + 1).unwrap();
        pb < pa
    }

    pub fn descents(&self, side: Side) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| match side {
                Side::Left => self.has_left_descent(i),
                Side::Right => self.has_right_descent(i),
            })
            .collect()
    }

    /// Conjugation by the longest element, `w_0 w w_0`.
    pub fn tau(&self) -> Self {
        let n = self.n() as u8;
        Permutation { images: self.images.iter().rev().map(|&x| n + 1 - x).collect() }
    }

    pub fn is_involution(&self) -> bool {
        *self == self.inverse()
    }

    /// Bruhat order via the tableau criterion: compare sorted prefixes of the one-line notation.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        if self.n() != w.n() {
            return Err(Error::RankMismatch(self.n(), w.n()));
        }
        let n = self.n();
        let mut a: Vec<u8> = Vec::with_capacity(n);
        let mut b: Vec<u8> = Vec::with_capacity(n);
        for i in 0..n {
            let pa = a.partition_point(|&x| x < self.images[i]);
            a.insert(pa, self.images[i]);
            let pb = b.partition_point(|&x| x < w.images[i]);
            b.insert(pb, w.images[i]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lexicographically smallest reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..w.n() {
                if w.has_left_descent(i) {
                    letters.push(i);
                    w = w.left_mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        Word(letters)
    }

    /// Positive lift to the braid group, as the same deterministic reduced word.
    pub fn positive_lift_word(&self) -> Word {
        self.reduced_word()
    }

    /// `w = x t` with `t` in `S_k` (acting on the first `k` positions) and `x` minimal in `x S_k`.
    pub fn coset_decompose_left(&self, k: usize) -> Result<(Permutation, Permutation)> {
        let n = self.n();
        if k > n {
            return Err(Error::InvalidPartition(format!("k = {} exceeds n = {}", k, n)));
        }
        let mut x = self.images.clone();
        x[..k].sort_unstable();
        let x = Permutation { images: x };
        let t = x.inverse().compose(self)?;
        Ok((t, x))
    }

    /// External product `w ⊔ x` in `S_{n+m}`.
    pub fn external(&self, x: &Permutation) -> Permutation {
        let n = self.n() as u8;
        let mut images = self.images.clone();
        images.extend(x.images.iter().map(|&y| y + n));
        Permutation { images }
    }

    /// `w ⊔ 1_m`.
    pub fn embed(&self, m: usize) -> Permutation {
        self.external(&Permutation::identity(m))
    }

    /// True if some subsequence of the one-line notation is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let k = pattern.len();
        let n = self.n();
        if k > n {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let vals: Vec<u8> = idx.iter().map(|&i| self.images[i]).collect();
            let ok = (0..k).all(|a| (0..k).all(|b| (pattern[a] < pattern[b]) == (vals[a] < vals[b])));
            if ok {
                return true;
            }
            // next k-subset of 0..n
            let mut i = k;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < n - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Smoothness via 3412- and 4231-avoidance.
    pub fn avoids_singular_patterns(&self) -> bool {
        !self.contains_pattern(&[3, 4, 1, 2]) && !self.contains_pattern(&[4, 2, 3, 1])
    }

    /// Parse `id`, one-line notation (`2,1,3` or `[2,1,3]`), letter words in `s,t,u` (`sts`),
    /// or indexed words (`s1s2s1`).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "id" || t == "e" || t == "1" {
            return Ok(Self::identity(n));
        }
        if t.contains(',') || t.starts_with('[') {
            let body = t.trim_start_matches('[').trim_end_matches(']');
            let images: std::result::Result<Vec<usize>, _> = body.split(',').map(|s| s.trim().parse::<usize>()).collect();
            let images = images.map_err(|e| Error::Parse(format!("{}: {}", t, e)))?;
            if images.len() != n {
                return Err(Error::RankMismatch(n, images.len()));
            }
            return Self::from_images(&images);
        }
        if t.chars().any(|c| c.is_ascii_digit()) {
            let mut letters = Vec::new();
            for part in t.split(['s', '_', ' ']).filter(|p| !p.is_empty()) {
                letters.push(part.parse::<usize>().map_err(|e| Error::Parse(format!("{}: {}", t, e)))?);
            }
            return Self::from_word(n, &letters);
        }
        let mut letters = Vec::new();
        for c in t.chars() {
            letters.push(match c {
                's' => 1,
                't' => 2,
                'u' => 3,
                _ => return Err(Error::Parse(format!("unknown letter '{}' in {}", c, t))),
            });
        }
        Self::from_word(n, &letters)
    }

    /// Name as a reduced word in `s, t, u` when `n <= 4`, otherwise in `s1 s2 ...`.
    pub fn name(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            return "1".into();
        }
        if self.n() <= 4 {
            word.0.iter().map(|&i| ['s', 't', 'u'][i - 1]).collect()
        } else {
            word.to_string()
        }
    }

    pub fn to_json(&self) -> Value {
        json!(self.images())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// All of `S_n`, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

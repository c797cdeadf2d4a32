use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use serde_json::{json, Value};

use super::laurent::{cadd, cmul, coeff_json, Coeff};
use crate::perm::Permutation;

/// Graded lexicographic comparison: higher total degree first, then lexicographically larger exponents first.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// Sparse polynomial in `x_1..x_n` with coefficients in `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, C::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in graded lexicographic order, leading term first.
    pub fn terms_grlex(&self) -> Vec<(&Vec<u32>, &C)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| grlex_cmp(a.0, b.0));
        t
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.keys()
    }

    /// Total degree of the highest-degree term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), cmul(c, s))).collect() }
    }

    /// Action of a permutation on variables: `w(x_i) = x_{w(i)}`.
    pub fn permute(&self, w: &Permutation) -> Self {
        assert_eq!(w.n(), self.nvars, "rank mismatch in variable permutation");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; self.nvars];
                for (i, &a) in e.iter().enumerate() {
                    ne[w.image(i + 1) - 1] = a;
                }
                (ne, c.clone())
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let c = if sign { -c.clone() } else { c.clone() };
            let slot = terms.entry(e.clone()).or_insert_with(C::zero);
            *slot = cadd(slot, &c);
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        MultiPoly { nvars: self.nvars, terms }
    }

    fn product(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = terms.entry(e).or_insert_with(C::zero);
                *slot = cadd(slot, &cmul(ca, cb));
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms_grlex().into_iter().map(|(e, c)| json!([e, coeff_json(c)])).collect())
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_grlex() {
            let neg = c < &C::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a, C: Coeff> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.combine(rhs, false)
    }
}

impl<'a, C: Coeff> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.combine(rhs, true)
    }
}

impl<'a, C: Coeff> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.product(rhs)
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&-C::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<i64>;

    #[test]
    fn ring_basics() {
        let x1 = P::var(3, 1);
        let x2 = P::var(3, 2);
        let d = &x1 - &x2;
        let sq = &d * &d;
        assert_eq!(sq.coeff(&[1, 1, 0]), -2);
        assert_eq!(sq.degree(), Some(2));
        assert!(sq.is_homogeneous());
        assert!((&d - &d).is_zero());
        assert_eq!(d.to_string(), "x1 - x2");
    }

    #[test]
    fn permutation_action() {
        let x1 = P::var(3, 1);
        let w = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(x1.permute(&w), P::var(3, 2));
        let p = &(&P::var(3, 1) * &P::var(3, 1)) - &P::var(3, 3);
        let u = Permutation::from_images(&[3, 1, 2]).unwrap();
        assert_eq!(p.permute(&u).permute(&w), p.permute(&w.compose(&u).unwrap()));
    }

    #[test]
    fn grlex_order() {
        assert_eq!(grlex_cmp(&[2, 0], &[1, 0]), Ordering::Less);
        assert_eq!(grlex_cmp(&[1, 1], &[2, 0]), Ordering::Greater);
    }
}

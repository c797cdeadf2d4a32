use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Integer-like coefficient ring.
///
/// Arithmetic is checked: fixed-width types panic on overflow instead of wrapping.
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + ToPrimitive
    + From<i64>
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + ToPrimitive
        + From<i64>
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn cadd<C: Coeff>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("coefficient overflow in addition")
}

#[inline]
pub(crate) fn csub<C: Coeff>(a: &C, b: &C) -> C {
    a.checked_sub(b).expect("coefficient overflow in subtraction")
}

#[inline]
pub(crate) fn cmul<C: Coeff>(a: &C, b: &C) -> C {
    a.checked_mul(b).expect("coefficient overflow in multiplication")
}

/// JSON number when the value fits in an `i64`, decimal string otherwise.
pub(crate) fn coeff_json<C: Coeff>(c: &C) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

/// A Laurent polynomial in `v` with coefficients in `C`.
///
/// Stored as `(exponent, coefficient)` pairs sorted by exponent, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: Vec<(i32, C)>,
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    /// `v^exp`.
    pub fn v(exp: i32) -> Self {
        Self::monomial(exp, C::one())
    }

    /// Build from arbitrary pairs; repeated exponents are summed and zeros dropped.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Self {
        let mut terms: Vec<(i32, C)> = iter.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = cadd(lc, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    /// Convenience constructor from small integer pairs.
    pub fn from_i64_terms(pairs: &[(i32, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, C::from(c))))
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, exp: i32) -> C {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.last().map(|t| &t.1)
    }

    /// `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, cmul(c, s))).collect(),
        }
    }

    /// Substitute `v = -v`.
    pub fn negate_variable(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| if e % 2 == 0 { (*e, c.clone()) } else { (*e, -c.clone()) })
                .collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> C {
        self.terms.iter().fold(C::zero(), |acc, (_, c)| cadd(&acc, c))
    }

    /// True when every exponent is at least one, i.e. the polynomial lies in `vZ[v]`.
    pub fn in_v_zv(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e >= 1)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Change of coefficient ring through `i64`. Panics if a coefficient does not fit.
    pub fn convert<D: Coeff>(&self) -> LaurentPoly<D> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, D::from(c.to_i64().expect("coefficient does not fit in i64"))))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
    pub fn quantum(k: usize) -> Self {
        let k = k as i32;
        Self::from_terms((0..k).map(|i| (k - 1 - 2 * i, C::one())))
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: usize) -> Self {
        (1..=k).fold(Self::one(), |acc, i| &acc * &Self::quantum(i))
    }

    /// `[k_1]! [k_2]! ... [k_r]!`, the balanced Poincare polynomial of a Young subgroup.
    pub fn quantum_factorial_product(sizes: &[usize]) -> Self {
        sizes.iter().fold(Self::one(), |acc, &k| &acc * &Self::quantum_factorial(k))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(e, c)| json!([e, coeff_json(c)])).collect())
    }

    /// Dense ascending coefficient vector starting at `min_exp`.
    pub(crate) fn dense(&self) -> (i32, Vec<C>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![C::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub(crate) fn from_dense(lo: i32, coeffs: Vec<C>) -> Self {
        LaurentPoly {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { csub(&a[i].1, &b[j].1) } else { cadd(&a[i].1, &b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(*e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut acc = vec![C::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut acc[(ea + eb - lo) as usize];
                *slot = cadd(slot, &cmul(ca, cb));
            }
        }
        Self::from_dense(lo, acc)
    }
}

impl<C: Coeff> PartialOrd for LaurentPoly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coeff> Ord for LaurentPoly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{}", mag)?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{}v", mag)?,
                _ if unit => write!(f, "v^{}", e)?,
                _ => write!(f, "{}v^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        self.merge(rhs, false)
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        self.merge(rhs, true)
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        self.product(rhs)
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> Self {
        self.merge(&rhs, false)
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self.merge(&rhs, true)
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> Self {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl<C: Coeff> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl<C: Coeff> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPoly<i64>;

    #[test]
    fn bar_examples() {
        let p = L::from_i64_terms(&[(2, 1), (4, 1)]);
        assert_eq!(p.bar(), L::from_i64_terms(&[(-2, 1), (-4, 1)]));
        assert_eq!(p.bar().bar(), p);
        let q2 = L::quantum(2);
        assert_eq!(q2.bar(), q2);
    }

    #[test]
    fn quantum_factorials() {
        assert!(L::quantum_factorial_product(&[1, 1, 1]).is_one());
        let q2 = L::quantum(2);
        assert_eq!(L::quantum_factorial_product(&[2, 2]), L::from_i64_terms(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(L::quantum_factorial_product(&[2, 1, 1]), q2);
        // [3]! = v^-3 + 2v^-1 + 2v + v^3
        assert_eq!(L::quantum_factorial(3), L::from_i64_terms(&[(-3, 1), (-1, 2), (1, 2), (3, 1)]));
        let big = L::quantum_factorial_product(&[3, 2, 2, 1]);
        assert_eq!(big.min_exp(), Some(-5));
        assert_eq!(big.max_exp(), Some(5));
    }

    #[test]
    fn arithmetic_and_display() {
        let a = L::from_i64_terms(&[(-1, 1), (1, -1)]);
        assert_eq!(a.to_string(), "v^-1 - v");
        let sq = &a * &a;
        assert_eq!(sq, L::from_i64_terms(&[(-2, 1), (0, -2), (2, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(L::from_i64_terms(&[(1, 2), (3, -1)]).to_string(), "2v - v^3");
        assert_eq!(a.negate_variable(), L::from_i64_terms(&[(-1, -1), (1, 1)]));
    }

    #[test]
    fn checked_overflow_panics() {
        let big = L::constant(i64::MAX);
        let r = std::panic::catch_unwind(|| &big + &big);
        assert!(r.is_err());
        let bb: LaurentPoly<BigInt> = big.convert();
        let s = &bb + &bb;
        assert_eq!(s.coeff(0), BigInt::from(i64::MAX) * 2);
    }
}

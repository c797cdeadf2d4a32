use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use serde_json::{json, Value};

use super::laurent::{cmul, csub, Coeff, LaurentPoly};
use crate::error::{Error, Result};

/// Element of the fraction field `Q(v)`, stored as a reduced pair of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no non-unit factor, the
/// denominator has lowest exponent `0`, and its leading (highest power)
/// coefficient is positive. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentFraction<C> {
    num: LaurentPoly<C>,
    den: LaurentPoly<C>,
}

impl<C: Coeff> LaurentFraction<C> {
    pub fn new(num: LaurentPoly<C>, den: LaurentPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn zero() -> Self {
        LaurentFraction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        LaurentFraction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly<C>) -> Self {
        normalize(p, LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly<C> {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly<C>> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        normalize(self.num.bar(), self.den.bar())
    }

    /// Value at `v = 1` as a reduced integer fraction, or `None` if the denominator vanishes there.
    pub fn eval_one(&self) -> Option<(C, C)> {
        let n = self.num.eval_one();
        let d = self.den.eval_one();
        if d.is_zero() {
            return None;
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g.clone(), d / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Some((n, d))
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

impl<C: Coeff> fmt::Debug for LaurentFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff> fmt::Display for LaurentFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a, C: Coeff> Add<&'a LaurentFraction<C>> for &'a LaurentFraction<C> {
    type Output = LaurentFraction<C>;
    fn add(self, rhs: &'a LaurentFraction<C>) -> LaurentFraction<C> {
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentFraction<C>> for &'a LaurentFraction<C> {
    type Output = LaurentFraction<C>;
    fn sub(self, rhs: &'a LaurentFraction<C>) -> LaurentFraction<C> {
        self + &(-rhs)
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentFraction<C>> for &'a LaurentFraction<C> {
    type Output = LaurentFraction<C>;
    fn mul(self, rhs: &'a LaurentFraction<C>) -> LaurentFraction<C> {
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, C: Coeff> Div<&'a LaurentFraction<C>> for &'a LaurentFraction<C> {
    type Output = LaurentFraction<C>;
    /// Panics on division by zero; use [`LaurentFraction::inv`] for a checked inverse.
    fn div(self, rhs: &'a LaurentFraction<C>) -> LaurentFraction<C> {
        assert!(!rhs.is_zero(), "division by zero in Q(v)");
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<C: Coeff> Neg for &LaurentFraction<C> {
    type Output = LaurentFraction<C>;
    fn neg(self) -> LaurentFraction<C> {
        LaurentFraction { num: -&self.num, den: self.den.clone() }
    }
}

fn normalize<C: Coeff>(num: LaurentPoly<C>, den: LaurentPoly<C>) -> LaurentFraction<C> {
    if num.is_zero() {
        return LaurentFraction::zero();
    }
    // Strip v-powers so both sides become polynomials with nonzero constant term.
    let (nlo, np) = num.dense();
    let (dlo, dp) = den.dense();
    let g = poly_gcd(&np, &dp);
    let np = poly_div_exact(&np, &g).expect("gcd divides numerator");
    let dp = poly_div_exact(&dp, &g).expect("gcd divides denominator");
    let sign_flip = dp.last().map(|c| c.is_negative()).unwrap_or(false);
    let fix = |v: Vec<C>| -> Vec<C> {
        if sign_flip {
            v.into_iter().map(|c| -c).collect()
        } else {
            v
        }
    };
    LaurentFraction {
        num: LaurentPoly::from_dense(nlo - dlo, fix(np)),
        den: LaurentPoly::from_dense(0, fix(dp)),
    }
}

fn trim<C: Coeff>(mut p: Vec<C>) -> Vec<C> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn content<C: Coeff>(p: &[C]) -> C {
    p.iter().fold(C::zero(), |g, c| g.gcd(c))
}

fn primitive<C: Coeff>(p: &[C]) -> Vec<C> {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x.clone() / c.clone()).collect()
}

/// Pseudo-remainder of `a` by `b` in `Z[v]`, dense ascending coefficient vectors.
fn pseudo_rem<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<C> = r.iter().map(|c| cmul(c, &lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = csub(&next[i + shift], &cmul(&lr, bc));
        }
        r = trim(next);
        let c = content(&r);
        if !c.is_zero() && !c.is_one() {
            r = r.into_iter().map(|x| x / c.clone()).collect();
        }
    }
    r
}

/// Greatest common divisor in `Z[v]`, normalized to positive leading coefficient.
pub(crate) fn poly_gcd<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let cg = content(&a).gcd(&content(&b));
    let (mut x, mut y) = if a.len() >= b.len() { (primitive(&a), primitive(&b)) } else { (primitive(&b), primitive(&a)) };
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r) };
    }
    let mut g: Vec<C> = x.into_iter().map(|c| cmul(&c, &cg)).collect();
    if g.last().map(|c| c.is_negative()).unwrap_or(false) {
        g = g.into_iter().map(|c| -c).collect();
    }
    g
}

/// Exact quotient `a / b` in `Z[v]`, or `None` when `b` does not divide `a`.
pub(crate) fn poly_div_exact<C: Coeff>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut q = vec![C::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = csub(&r[i + shift], &cmul(&qc, bc));
        }
        q[shift] = qc;
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    if r.is_empty() {
        Some(trim(q))
    } else {
        None
    }
}

/// Exact division of Laurent polynomials, `None` when not divisible.
pub fn laurent_div_exact<C: Coeff>(a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> Option<LaurentPoly<C>> {
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (alo, ap) = a.dense();
    let (blo, bp) = b.dense();
    poly_div_exact(&ap, &bp).map(|q| LaurentPoly::from_dense(alo - blo, q))
}

/// Least common multiple of two nonzero Laurent polynomials, up to a unit.
pub fn laurent_lcm<C: Coeff>(a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> LaurentPoly<C> {
    let (_, ap) = a.dense();
    let (_, bp) = b.dense();
    let g = poly_gcd(&ap, &bp);
    let q = poly_div_exact(&bp, &g).expect("gcd divides");
    &LaurentPoly::from_dense(0, ap) * &LaurentPoly::from_dense(0, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPoly<BigInt>;
    type F = LaurentFraction<BigInt>;

    fn l(p: &[(i32, i64)]) -> L {
        L::from_i64_terms(p)
    }

    #[test]
    fn reduces_quantum_ratio() {
        // Oracle: polynomial long division of v^2 - v^-2 by v - v^-1.
        let num = l(&[(2, 1), (-2, -1)]);
        let den = l(&[(1, 1), (-1, -1)]);
        let q = laurent_div_exact(&num, &den).unwrap();
        assert_eq!(q, l(&[(1, 1), (-1, 1)]));
        let f = F::new(num, den).unwrap();
        assert_eq!(f.as_laurent(), Some(q));
    }

    #[test]
    fn self_ratio_is_one() {
        let p = l(&[(-3, 2), (0, -5), (4, 7)]);
        assert!(F::new(p.clone(), p).unwrap().is_one());
    }

    #[test]
    fn canonical_denominator() {
        let f = F::new(L::one(), l(&[(2, 1), (-2, -1)])).unwrap();
        assert_eq!(f.denom(), &l(&[(0, -1), (4, 1)]));
        assert_eq!(f.numer(), &l(&[(2, 1)]));
        let g = F::new(L::one(), l(&[(2, -1), (-2, 1)])).unwrap();
        assert_eq!(g, -&f);
        assert!(matches!(F::new(L::one(), L::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_operations() {
        let a = F::new(l(&[(0, 1)]), l(&[(1, 1), (-1, 1)])).unwrap();
        let b = F::new(l(&[(0, 1)]), l(&[(1, 1), (-1, -1)])).unwrap();
        let s = &a + &b;
        // 1/[2] + 1/(v - v^-1) = 2v / (v^2 - v^-2)
        let expect = F::new(l(&[(1, 2)]), l(&[(2, 1), (-2, -1)])).unwrap();
        assert_eq!(s, expect);
        assert!((&(&a * &a.inv().unwrap()) - &F::one()).is_zero());
        assert_eq!(&(&s - &b), &a);
    }

    #[test]
    fn gcd_with_content() {
        let a: Vec<BigInt> = [2, 4].iter().map(|&x| BigInt::from(x)).collect();
        let b: Vec<BigInt> = [6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(poly_gcd(&a, &b), vec![BigInt::from(2), BigInt::from(4)]);
    }
}

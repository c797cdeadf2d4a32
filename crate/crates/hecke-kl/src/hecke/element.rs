use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{group, SymGroup};
use crate::perm::Permutation;
use crate::scalar::{Coeff, LaurentPoly};

/// Which basis the coefficients of a [`HeckeElement`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `H_w`.
    Standard,
    /// `b_w`.
    Kl,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Standard => "STANDARD",
            Basis::Kl => "KL",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Standard => "H",
            Basis::Kl => "b",
        }
    }
}

/// Element of the Hecke algebra of `S_n`, sparse in one of the two bases.
///
/// Keys are group indices (length, then lexicographic), so iteration is in that order.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement<C> {
    n: usize,
    basis: Basis,
    terms: BTreeMap<u32, LaurentPoly<C>>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(n: usize, basis: Basis) -> Self {
        HeckeElement { n, basis, terms: BTreeMap::new() }
    }

    /// The unit `H_1 = b_1`.
    pub fn one(n: usize, basis: Basis) -> Self {
        Self::from_index(n, basis, 0, LaurentPoly::one())
    }

    pub fn basis_element(w: &Permutation, basis: Basis) -> Self {
        let g = group(w.n());
        Self::from_index(w.n(), basis, g.index_of(w), LaurentPoly::one())
    }

    pub fn scalar(n: usize, basis: Basis, c: LaurentPoly<C>) -> Self {
        Self::from_index(n, basis, 0, c)
    }

    pub fn from_index(n: usize, basis: Basis, idx: u32, c: LaurentPoly<C>) -> Self {
        let mut e = Self::zero(n, basis);
        e.add_term(idx, &c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, LaurentPoly<C>)>>(n: usize, basis: Basis, terms: I) -> Result<Self> {
        let g = group(n);
        let mut e = Self::zero(n, basis);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::RankMismatch(n, w.n()));
            }
            e.add_term(g.index_of(&w), &c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn group(&self) -> Arc<SymGroup> {
        group(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn indexed_terms(&self) -> &BTreeMap<u32, LaurentPoly<C>> {
        &self.terms
    }

    pub fn terms(&self) -> Vec<(Permutation, &LaurentPoly<C>)> {
        let g = self.group();
        self.terms.iter().map(|(&i, c)| (g.elem(i).clone(), c)).collect()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly<C> {
        if w.n() != self.n {
            return LaurentPoly::zero();
        }
        self.coeff_idx(self.group().index_of(w))
    }

    pub fn coeff_idx(&self, i: u32) -> LaurentPoly<C> {
        self.terms.get(&i).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, idx: u32, c: &LaurentPoly<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &LaurentPoly<C>) {
        for (&i, c) in &other.terms {
            self.add_term(i, &(c * s));
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HeckeElement { n: self.n, basis: self.basis, terms: self.terms.iter().map(|(&i, c)| (i, -c)).collect() }
    }

    pub fn scale(&self, s: &LaurentPoly<C>) -> Self {
        let mut out = Self::zero(self.n, self.basis);
        for (&i, c) in &self.terms {
            out.add_term(i, &(c * s));
        }
        out
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&LaurentPoly<C>) -> LaurentPoly<D>>(&self, f: F) -> HeckeElement<D> {
        let mut out = HeckeElement::zero(self.n, self.basis);
        for (&i, c) in &self.terms {
            out.add_term(i, &f(c));
        }
        out
    }

    pub fn convert<D: Coeff>(&self) -> HeckeElement<D> {
        self.map_coeffs(|c| c.convert())
    }

    /// Apply the bar involution to coefficients only (not to basis elements).
    pub fn bar_coeffs(&self) -> Self {
        self.map_coeffs(|c| c.bar())
    }

    pub fn to_json(&self) -> Value {
        let g = self.group();
        let terms: Vec<Value> = self.terms.iter().map(|(&i, c)| json!([g.elem(i).to_json(), c.to_json()])).collect();
        json!({ "n": self.n, "basis": self.basis.name(), "terms": terms })
    }
}

impl<C: Coeff> fmt::Debug for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let g = self.group();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&i, c)| {
                let name = format!("{}_{}", self.basis.symbol(), g.elem(i).name());
                if c.is_one() {
                    name
                } else {
                    format!("({}){}", c, name)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

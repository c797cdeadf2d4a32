//! Multiplication, bar involution and change of basis.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hecke::element::{Basis, HeckeElement};
use crate::hecke::kl::{kl_table, KlTable};
use crate::perm::Permutation;
use crate::scalar::{Coeff, LaurentPoly};

fn require<C: Coeff>(a: &HeckeElement<C>, basis: Basis) -> Result<()> {
    if a.basis() != basis {
        return Err(Error::BasisMismatch { expected: basis.name(), found: a.basis().name() });
    }
    Ok(())
}

fn same_rank<C: Coeff>(a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::RankMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// `v^{-1} - v`.
fn quad<C: Coeff>() -> LaurentPoly<C> {
    LaurentPoly::from_i64_terms(&[(-1, 1), (1, -1)])
}

/// `a H_s` in the standard basis.
pub fn std_right_mul_gen<C: Coeff>(a: &HeckeElement<C>, s: usize) -> HeckeElement<C> {
    let g = a.group();
    let q = quad::<C>();
    let mut out = HeckeElement::zero(a.n(), Basis::Standard);
    for (&w, c) in a.indexed_terms() {
        let ws = g.rmul(w, s);
        out.add_term(ws, c);
        if g.len(ws) < g.len(w) {
            out.add_term(w, &(c * &q));
        }
    }
    out
}

/// `H_s a` in the standard basis.
pub fn std_left_mul_gen<C: Coeff>(s: usize, a: &HeckeElement<C>) -> HeckeElement<C> {
    let g = a.group();
    let q = quad::<C>();
    let mut out = HeckeElement::zero(a.n(), Basis::Standard);
    for (&w, c) in a.indexed_terms() {
        let sw = g.lmul(s, w);
        out.add_term(sw, c);
        if g.len(sw) < g.len(w) {
            out.add_term(w, &(c * &q));
        }
    }
    out
}

/// Product of two standard-basis elements.
pub fn std_mul<C: Coeff>(a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    require(a, Basis::Standard)?;
    require(b, Basis::Standard)?;
    same_rank(a, b)?;
    let g = a.group();
    let mut out = HeckeElement::zero(a.n(), Basis::Standard);
    // a H_w for every w in the support of b, sharing prefixes.
    let mut memo: HashMap<u32, HeckeElement<C>> = HashMap::new();
    memo.insert(0, a.clone());
    for (&w, c) in b.indexed_terms() {
        let aw = right_by_index(w, &g, &mut memo);
        out.add_scaled(&aw, c);
    }
    Ok(out)
}

// The memo must already hold the identity.
fn right_by_index<C: Coeff>(
    w: u32,
    g: &crate::group::SymGroup,
    memo: &mut HashMap<u32, HeckeElement<C>>,
) -> HeckeElement<C> {
    if let Some(e) = memo.get(&w) {
        return e.clone();
    }
    // w = w' s with l(w') < l(w): pick a right descent.
    let s = (1..g.n()).find(|&s| g.right_descent(w, s)).unwrap();
    let prefix = g.rmul(w, s);
    let pe = right_by_index(prefix, g, memo);
    let e = std_right_mul_gen(&pe, s);
    memo.insert(w, e.clone());
    e
}

/// Bar involution on a standard-basis element: `v -> v^{-1}` and `H_w -> (H_{w^{-1}})^{-1}`.
pub fn bar_element<C: Coeff>(a: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    require(a, Basis::Standard)?;
    let g = a.group();
    let mut out = HeckeElement::zero(a.n(), Basis::Standard);
    let shift: LaurentPoly<C> = LaurentPoly::from_i64_terms(&[(1, 1), (-1, -1)]);
    for (&w, c) in a.indexed_terms() {
        let mut x = HeckeElement::one(a.n(), Basis::Standard);
        for &s in g.elem(w).reduced_word().letters() {
            let xs = std_right_mul_gen(&x, s);
            x = xs.try_add(&x.scale(&shift))?;
        }
        out.add_scaled(&x, &c.bar());
    }
    Ok(out)
}

/// `b_w` written in the standard basis.
pub fn kl_element<C: Coeff>(w: &Permutation) -> HeckeElement<C> {
    let t = kl_table(w.n());
    let wi = t.group().index_of(w);
    kl_column(&t, wi)
}

fn kl_column<C: Coeff>(t: &KlTable, w: u32) -> HeckeElement<C> {
    let mut e = HeckeElement::zero(t.n(), Basis::Standard);
    for (y, h) in t.column(w) {
        e.add_term(y, &h.convert());
    }
    e
}

/// Express any element in the standard basis.
pub fn to_std<C: Coeff>(a: &HeckeElement<C>) -> HeckeElement<C> {
    if a.basis() == Basis::Standard {
        return a.clone();
    }
    let t = kl_table(a.n());
    let mut out = HeckeElement::zero(a.n(), Basis::Standard);
    for (&w, c) in a.indexed_terms() {
        for (y, h) in t.column(w) {
            out.add_term(y, &(c * &h.convert()));
        }
    }
    out
}

/// Express any element in the KL basis by unitriangular elimination from the top.
pub fn to_kl<C: Coeff>(a: &HeckeElement<C>) -> HeckeElement<C> {
    if a.basis() == Basis::Kl {
        return a.clone();
    }
    let t = kl_table(a.n());
    let mut rem = a.indexed_terms().clone();
    let mut out = HeckeElement::zero(a.n(), Basis::Kl);
    while let Some((&y, c)) = rem.iter().next_back() {
        let c = c.clone();
        out.add_term(y, &c);
        for (z, h) in t.column(y) {
            let slot = rem.entry(z).or_insert_with(LaurentPoly::zero);
            *slot -= &(&c * &h.convert());
            if slot.is_zero() {
                rem.remove(&z);
            }
        }
    }
    out
}

/// KL expansion through the inversion formula `H_y = sum_x h_{w_0 y, w_0 x}(-v) b_x`.
pub fn to_kl_by_inversion<C: Coeff>(a: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    require(a, Basis::Standard)?;
    let t = kl_table(a.n());
    let g = t.group().clone();
    let mut out = HeckeElement::zero(a.n(), Basis::Kl);
    for (&y, c) in a.indexed_terms() {
        let w0y = g.left_w0(y);
        for x in 0..=y {
            let h = t.h_idx(w0y, g.left_w0(x));
            if !h.is_zero() {
                out.add_term(x, &(c * &h.negate_variable().convert()));
            }
        }
    }
    Ok(out)
}

/// `b_s a` for `a` in the KL basis.
pub fn kl_left_mul_gen<C: Coeff>(s: usize, a: &HeckeElement<C>) -> HeckeElement<C> {
    let t = kl_table(a.n());
    kl_left_mul_gen_with(&t, s, a)
}

pub(crate) fn kl_left_mul_gen_with<C: Coeff>(t: &KlTable, s: usize, a: &HeckeElement<C>) -> HeckeElement<C> {
    let g = t.group();
    let q2: LaurentPoly<C> = LaurentPoly::quantum(2);
    let mut out = HeckeElement::zero(a.n(), Basis::Kl);
    for (&w, c) in a.indexed_terms() {
        if g.left_descent(s, w) {
            out.add_term(w, &(c * &q2));
        } else {
            out.add_term(g.lmul(s, w), c);
            for &(z, m) in t.mu_list(w) {
                if g.left_descent(s, z) {
                    out.add_term(z, &c.scale(&C::from(m)));
                }
            }
        }
    }
    out
}

/// `a b_s` for `a` in the KL basis.
pub fn kl_right_mul_gen<C: Coeff>(a: &HeckeElement<C>, s: usize) -> HeckeElement<C> {
    let t = kl_table(a.n());
    let g = t.group();
    let q2: LaurentPoly<C> = LaurentPoly::quantum(2);
    let mut out = HeckeElement::zero(a.n(), Basis::Kl);
    for (&w, c) in a.indexed_terms() {
        if g.right_descent(w, s) {
            out.add_term(w, &(c * &q2));
        } else {
            out.add_term(g.rmul(w, s), c);
            for &(z, m) in t.mu_list(w) {
                if g.right_descent(z, s) {
                    out.add_term(z, &c.scale(&C::from(m)));
                }
            }
        }
    }
    out
}

/// `b_x B` for every `x` in `S_n`, indexed by group index.
pub fn all_left_products<C: Coeff>(b: &HeckeElement<C>) -> Result<Vec<HeckeElement<C>>> {
    require(b, Basis::Kl)?;
    let t = kl_table(b.n());
    let g = t.group().clone();
    let mut out: Vec<HeckeElement<C>> = Vec::with_capacity(g.order());
    out.push(b.clone());
    for x in 1..g.order() as u32 {
        out.push(next_left_product(&t, x, |i| &out[i as usize]));
    }
    Ok(out)
}

fn next_left_product<'a, C: Coeff, F: Fn(u32) -> &'a HeckeElement<C>>(t: &KlTable, x: u32, get: F) -> HeckeElement<C> {
    let g = t.group();
    let s = g.first_left_descent(x).unwrap();
    let xp = g.lmul(s, x);
    let mut e = kl_left_mul_gen_with(t, s, get(xp));
    for &(z, m) in t.mu_list(xp) {
        if g.left_descent(s, z) {
            e.add_scaled(get(z), &LaurentPoly::constant(C::from(-m)));
        }
    }
    e
}

fn left_product_memo<C: Coeff>(t: &KlTable, x: u32, b: &HeckeElement<C>, memo: &mut HashMap<u32, HeckeElement<C>>) {
    if memo.contains_key(&x) {
        return;
    }
    if x == 0 {
        memo.insert(0, b.clone());
        return;
    }
    let g = t.group();
    let s = g.first_left_descent(x).unwrap();
    let xp = g.lmul(s, x);
    left_product_memo(t, xp, b, memo);
    for &(z, _) in t.mu_list(xp) {
        if g.left_descent(s, z) {
            left_product_memo(t, z, b, memo);
        }
    }
    let e = next_left_product(t, x, |i| &memo[&i]);
    memo.insert(x, e);
}

/// Product of two KL-basis elements, in the KL basis.
pub fn kl_mul<C: Coeff>(a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    require(a, Basis::Kl)?;
    require(b, Basis::Kl)?;
    same_rank(a, b)?;
    let t = kl_table(a.n());
    let mut memo = HashMap::new();
    let mut out = HeckeElement::zero(a.n(), Basis::Kl);
    for (&x, c) in a.indexed_terms() {
        left_product_memo(&t, x, b, &mut memo);
        out.add_scaled(&memo[&x], c);
    }
    Ok(out)
}

/// Product in whichever basis `a` uses; `b` is converted first.
pub fn mul<C: Coeff>(a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    same_rank(a, b)?;
    match a.basis() {
        Basis::Standard => std_mul(a, &to_std(b)),
        Basis::Kl => kl_mul(a, &to_kl(b)),
    }
}

/// `c^z_{x,y}`, the coefficient of `b_z` in `b_x b_y`.
pub fn structure_constant(x: &Permutation, y: &Permutation, z: &Permutation) -> Result<LaurentPoly<i64>> {
    if x.n() != y.n() || x.n() != z.n() {
        return Err(Error::RankMismatch(x.n(), if x.n() != y.n() { y.n() } else { z.n() }));
    }
    let bx = HeckeElement::<i64>::basis_element(x, Basis::Kl);
    let by = HeckeElement::<i64>::basis_element(y, Basis::Kl);
    Ok(kl_mul(&bx, &by)?.coeff(z))
}

/// The half twist `H_{w_0}` in the standard basis.
pub fn half_twist_std<C: Coeff>(n: usize) -> HeckeElement<C> {
    HeckeElement::basis_element(&Permutation::longest(n), Basis::Standard)
}

/// The half twist in the KL basis: `sum_x (-1)^{l(w_0)-l(x)} h_{1, w_0 x} b_x`.
pub fn half_twist_kl<C: Coeff>(n: usize) -> HeckeElement<C> {
    let t = kl_table(n);
    let g = t.group();
    let w0 = g.longest();
    let l0 = g.len(w0);
    let mut out = HeckeElement::zero(n, Basis::Kl);
    for x in 0..g.order() as u32 {
        let h = t.h_idx(0, g.left_w0(x)).convert::<C>();
        let sign = if (l0 - g.len(x)).is_multiple_of(2) { C::one() } else { -C::one() };
        out.add_term(x, &h.scale(&sign));
    }
    out
}

/// The full twist `H_{w_0}^2` in the standard basis.
pub fn full_twist_std<C: Coeff>(n: usize) -> HeckeElement<C> {
    let h = half_twist_std::<C>(n);
    std_mul(&h, &h).expect("same rank and basis")
}

/// Inverse of a standard basis element `H_w`, using `H_s^{-1} = H_s + v - v^{-1}`.
pub fn std_inverse_basis<C: Coeff>(w: &Permutation) -> HeckeElement<C> {
    let n = w.n();
    let shift: LaurentPoly<C> = LaurentPoly::from_i64_terms(&[(1, 1), (-1, -1)]);
    let mut x = HeckeElement::one(n, Basis::Standard);
    for &s in w.reduced_word().letters().iter().rev() {
        let xs = std_right_mul_gen(&x, s);
        x = xs.try_add(&x.scale(&shift)).expect("same basis");
    }
    x
}

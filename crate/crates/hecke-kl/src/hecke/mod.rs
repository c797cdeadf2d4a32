//! The Hecke algebra of `S_n` over `Z[v, v^{-1}]` and its Kazhdan-Lusztig basis.
//!
//! Conventions: `(H_s + v)(H_s - v^{-1}) = 0`, `b_s = H_s + v`, and the bar involution
//! sends `v` to `v^{-1}` and `H_w` to `H_{w^{-1}}^{-1}`.

mod algebra;
mod element;
mod kl;

pub use algebra::{
    all_left_products, bar_element, full_twist_std, half_twist_kl, half_twist_std, kl_element, kl_left_mul_gen, kl_mul,
    kl_right_mul_gen, mul, std_inverse_basis, std_left_mul_gen, std_mul, std_right_mul_gen, structure_constant, to_kl,
    to_kl_by_inversion, to_std,
};
pub use element::{Basis, HeckeElement};
pub use kl::{install_table, kl_table, KlTable};

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::perm::{all_permutations, Permutation};
    use crate::{Hecke, Laurent};

    type Naive = HashMap<Vec<u8>, Laurent>;

    fn naive_add(m: &mut Naive, k: Vec<u8>, c: &Laurent) {
        let e = m.entry(k).or_insert_with(Laurent::zero);
        *e += c;
    }

    // Right multiplication by H_s on one-line notation, written out independently of the library.
    fn naive_mul_s(a: &Naive, s: usize) -> Naive {
        let mut out = Naive::new();
        for (w, c) in a {
            let mut ws = w.clone();
            ws.swap(s - 1, s);
            if w[s - 1] > w[s] {
                naive_add(&mut out, ws, c);
                naive_add(&mut out, w.clone(), &(c * &Laurent::from_i64_terms(&[(-1, 1), (1, -1)])));
            } else {
                naive_add(&mut out, ws, c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn naive_word(w: &[u8]) -> Vec<usize> {
        // bubble sort records a reduced word of w read from the right
        let mut v = w.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
            v.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    fn naive_bar_h(w: &[u8]) -> Naive {
        let n = w.len();
        let mut x = Naive::new();
        x.insert((1..=n as u8).collect(), Laurent::one());
        let shift = Laurent::from_i64_terms(&[(1, 1), (-1, -1)]);
        for s in naive_word(w) {
            let mut y = naive_mul_s(&x, s);
            for (k, c) in &x {
                naive_add(&mut y, k.clone(), &(c * &shift));
            }
            y.retain(|_, c| !c.is_zero());
            x = y;
        }
        x
    }

    fn oracle_kl(n: usize) -> HashMap<(Vec<u8>, Vec<u8>), Laurent> {
        let perms: Vec<Vec<u8>> = all_permutations(n).iter().map(|p| p.images().iter().map(|&i| i as u8).collect()).collect();
        let len = |w: &Vec<u8>| naive_word(w).len();
        let bars: HashMap<Vec<u8>, Naive> = perms.iter().map(|w| (w.clone(), naive_bar_h(w))).collect();
        let mut out = HashMap::new();
        for w in &perms {
            let mut sorted: Vec<&Vec<u8>> = perms.iter().filter(|y| len(y) <= len(w)).collect();
            sorted.sort_by_key(|y| std::cmp::Reverse(len(y)));
            let mut h: HashMap<Vec<u8>, Laurent> = HashMap::new();
            h.insert(w.clone(), Laurent::one());
            for y in sorted {
                if y == w {
                    continue;
                }
                let mut rhs = Laurent::zero();
                for (z, hz) in &h {
                    if let Some(r) = bars[z].get(y) {
                        rhs += &(&hz.bar() * r);
                    }
                }
                let pos = Laurent::from_terms(rhs.terms().iter().filter(|(e, _)| *e > 0).cloned());
                if !pos.is_zero() {
                    h.insert(y.clone(), pos);
                }
            }
            for (y, p) in h {
                out.insert((y, w.clone()), p);
            }
        }
        out
    }

    #[test]
    fn table_matches_bar_invariance_oracle() {
        for n in 1..=4 {
            let oracle = oracle_kl(n);
            let t = kl_table(n);
            for y in all_permutations(n) {
                for w in all_permutations(n) {
                    let key = (y.images().iter().map(|&i| i as u8).collect::<Vec<_>>(), w.images().iter().map(|&i| i as u8).collect());
                    let expected = oracle.get(&key).cloned().unwrap_or_else(Laurent::zero);
                    assert_eq!(t.h(&y, &w).unwrap(), expected, "h({:?},{:?})", y, w);
                }
            }
        }
    }

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn kl_elements_are_bar_invariant() {
        for w in all_permutations(4) {
            let b: Hecke = kl_element(&w);
            assert_eq!(bar_element(&b).unwrap(), b);
        }
    }

    #[test]
    fn quadratic_relation() {
        let hs = Hecke::basis_element(&p(3, "s"), Basis::Standard);
        let v = Hecke::scalar(3, Basis::Standard, Laurent::v(1));
        let vinv = Hecke::scalar(3, Basis::Standard, Laurent::v(-1));
        let lhs = std_mul(&hs.try_add(&v).unwrap(), &hs.try_sub(&vinv).unwrap()).unwrap();
        assert!(lhs.is_zero());
        let inv = std_inverse_basis::<i64>(&p(3, "st"));
        let prod = std_mul(&Hecke::basis_element(&p(3, "st"), Basis::Standard), &inv).unwrap();
        assert_eq!(prod, Hecke::one(3, Basis::Standard));
    }

    #[test]
    fn basis_changes_agree() {
        for w in all_permutations(4) {
            let hw = Hecke::basis_element(&w, Basis::Standard);
            let a = to_kl(&hw);
            let b = to_kl_by_inversion(&hw).unwrap();
            assert_eq!(a, b);
            assert_eq!(to_std(&a), hw);
        }
    }

    #[test]
    fn kl_products_match_standard_products() {
        let perms = all_permutations(3);
        for x in &perms {
            for y in &perms {
                let bx = Hecke::basis_element(x, Basis::Kl);
                let by = Hecke::basis_element(y, Basis::Kl);
                let kl = kl_mul(&bx, &by).unwrap();
                let st = std_mul(&to_std(&bx), &to_std(&by)).unwrap();
                assert_eq!(to_std(&kl), st);
            }
        }
        let x = p(4, "tsut");
        let y = p(4, "sutsu");
        let bx = Hecke::basis_element(&x, Basis::Kl);
        let by = Hecke::basis_element(&y, Basis::Kl);
        assert_eq!(to_std(&kl_mul(&bx, &by).unwrap()), std_mul(&to_std(&bx), &to_std(&by)).unwrap());
    }

    #[test]
    fn generator_actions() {
        let bs = Hecke::basis_element(&p(3, "s"), Basis::Kl);
        let bt = Hecke::basis_element(&p(3, "t"), Basis::Kl);
        // b_s b_t b_s = b_sts + b_s
        let bsts = kl_mul(&kl_mul(&bs, &bt).unwrap(), &bs).unwrap();
        let expected = Hecke::basis_element(&p(3, "sts"), Basis::Kl).try_add(&bs).unwrap();
        assert_eq!(bsts, expected);
        assert_eq!(kl_left_mul_gen(1, &bs), bs.scale(&Laurent::quantum(2)));
        assert_eq!(kl_right_mul_gen(&bt, 1), Hecke::basis_element(&p(3, "ts"), Basis::Kl));
        assert_eq!(structure_constant(&p(3, "s"), &p(3, "s"), &p(3, "s")).unwrap(), Laurent::quantum(2));
    }

    #[test]
    fn half_twist_in_both_bases() {
        for n in 1..=5 {
            assert_eq!(half_twist_kl::<i64>(n), to_kl(&half_twist_std(n)));
        }
        // FT_2 = (v^{-1} - v) b_s + v^2
        let ft = to_kl(&full_twist_std::<i64>(2));
        let expected = Hecke::from_terms(
            2,
            Basis::Kl,
            [(p(2, "s"), Laurent::from_i64_terms(&[(-1, 1), (1, -1)])), (p(2, "id"), Laurent::v(2))],
        )
        .unwrap();
        assert_eq!(ft, expected);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = Hecke::one(3, Basis::Kl);
        let b = Hecke::one(4, Basis::Kl);
        assert!(kl_mul(&a, &b).is_err());
        assert!(std_mul(&a, &a).is_err());
        assert!(a.try_add(&Hecke::one(3, Basis::Standard)).is_err());
    }

    #[test]
    fn left_products_cover_the_group() {
        let b = Hecke::basis_element(&p(4, "tsut"), Basis::Kl);
        let all = all_left_products(&b).unwrap();
        let g = crate::group::group(4);
        for (i, e) in all.iter().enumerate() {
            let bx = Hecke::basis_element(g.elem(i as u32), Basis::Kl);
            assert_eq!(to_std(e), std_mul(&to_std(&bx), &to_std(&b)).unwrap());
        }
    }
}

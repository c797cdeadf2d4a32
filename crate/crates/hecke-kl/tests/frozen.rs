//! Values computed once and frozen as regression fixtures.

use hecke_kl::cells::{d_stat, triangle_inequality_witness};
use hecke_kl::hecke::kl_table;
use hecke_kl::perm::all_permutations;
use hecke_kl::shapes::rouquier_shape;
use hecke_kl::Tableau;

#[test]
fn distinct_kl_polynomials() {
    // includes 0 and 1
    let expected = [2, 3, 5, 11, 31, 122];
    for (i, &count) in expected.iter().enumerate() {
        assert_eq!(kl_table(i + 1).distinct_polynomials(), count, "n = {}", i + 1);
    }
}

#[test]
fn triangle_inequality_fails_in_s6() {
    let t = |s: &str| Tableau::parse(s).unwrap();
    let (p, q, r) = (t("1,2,4/3,5/6"), t("1,2,5/3,4/6"), t("1,4,5/2,6/3"));
    assert_eq!(triangle_inequality_witness(6).unwrap(), Some((p.clone(), q.clone(), r.clone())));
    assert_eq!((d_stat(&p, &q).unwrap(), d_stat(&q, &r).unwrap(), d_stat(&p, &r).unwrap()), (1, 1, 4));
    for n in 1..=5 {
        assert_eq!(triangle_inequality_witness(n).unwrap(), None, "n = {}", n);
    }
}

#[test]
fn rouquier_shapes_up_to_s6_are_coherent() {
    for n in 1..=6 {
        for w in all_permutations(n) {
            let f = rouquier_shape(&w).unwrap();
            assert!(f.is_perverse());
        }
    }
}

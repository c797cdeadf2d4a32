use proptest::prelude::*;

use hecke_kl::cells::{schutzenberger_l, schutzenberger_l_combinatorial, shape_of};
use hecke_kl::hecke::{bar_element, kl_mul, std_mul, to_kl, to_std};
use hecke_kl::shapes::{euler_characteristic, rouquier_shape};
use hecke_kl::specht::{g_polynomial, Filling};
use hecke_kl::*;

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(Laurent::from_terms)
}

fn hecke_elem(n: usize, basis: Basis) -> impl Strategy<Value = Hecke> {
    prop::collection::vec((perm_of(n), laurent()), 0..4).prop_map(move |terms| {
        let mut e = Hecke::zero(n, basis);
        for (w, c) in terms {
            e = e.try_add(&Hecke::from_terms(n, basis, [(w, c)]).unwrap()).unwrap();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rsk_is_a_bijection(w in perm(7)) {
        let (p, q) = rsk(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), w.clone());
        let (pi, qi) = rsk(&w.inverse());
        prop_assert_eq!((pi, qi), (q, p));
    }

    #[test]
    fn length_matches_reduced_words(w in perm(7)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(word.evaluate(w.n()).unwrap(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn w0_reverses_bruhat_order(x in perm_of(4), y in perm_of(4)) {
        let w0 = Permutation::longest(4);
        let a = x.bruhat_leq(&y).unwrap();
        let b = w0.compose(&y).unwrap().bruhat_leq(&w0.compose(&x).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn basis_change_round_trips(e in hecke_elem(4, Basis::Standard)) {
        prop_assert_eq!(to_std(&to_kl(&e)), e);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in hecke_elem(3, Basis::Standard), b in hecke_elem(3, Basis::Standard)) {
        prop_assert_eq!(bar_element(&bar_element(&a).unwrap()).unwrap(), a.clone());
        let ab = std_mul(&a, &b).unwrap();
        prop_assert_eq!(bar_element(&ab).unwrap(), std_mul(&bar_element(&a).unwrap(), &bar_element(&b).unwrap()).unwrap());
    }

    #[test]
    fn kl_product_is_associative(a in hecke_elem(4, Basis::Kl), b in hecke_elem(4, Basis::Kl), c in hecke_elem(4, Basis::Kl)) {
        let left = kl_mul(&kl_mul(&a, &b).unwrap(), &c).unwrap();
        let right = kl_mul(&a, &kl_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn partitions_transpose(w in perm(7)) {
        let lambda = shape_of(&w);
        prop_assert_eq!(lambda.transpose().transpose(), lambda.clone());
        prop_assert_eq!(shape_of(&Permutation::longest(w.n()).compose(&w).unwrap()), lambda.transpose());
        prop_assert_eq!(lambda.c(), lambda.transpose().r());
    }

    #[test]
    fn schutzenberger_is_an_involution_on_left_cells(w in perm(5)) {
        let s = schutzenberger_l(&w).unwrap();
        prop_assert_eq!(schutzenberger_l_combinatorial(&s), w.clone());
        prop_assert_eq!(rsk(&s).1, rsk(&w).1);
    }

    #[test]
    fn rouquier_shapes_are_perverse(w in perm(5)) {
        let f = rouquier_shape(&w).unwrap();
        prop_assert!(f.is_perverse());
        let bottom = f.entries(0);
        prop_assert_eq!(bottom.len(), 1);
        prop_assert_eq!(&bottom[0].w, &w);
        prop_assert_eq!(euler_characteristic(&f), to_kl(&Hecke::basis_element(&w, Basis::Standard)));
    }

    #[test]
    fn specht_generators_are_equivariant(t in perm(6), w in any::<prop::sample::Index>()) {
        let n = t.n();
        let lambda = shape_of(&t);
        let filling = Filling::from_permutation(&lambda, &t).unwrap();
        let all = hecke_kl::perm::all_permutations(n);
        let w = &all[w.index(all.len())];
        prop_assert_eq!(g_polynomial(&filling).permute(w), g_polynomial(&filling.act(w).unwrap()));
        prop_assert_eq!(g_polynomial(&filling).degree(), Some(lambda.r() as u32));
    }

    #[test]
    fn json_is_deterministic(e in hecke_elem(4, Basis::Kl)) {
        let a = serde_json::to_string(&e.to_json()).unwrap();
        let b = serde_json::to_string(&e.clone().to_json()).unwrap();
        prop_assert_eq!(a, b);
    }
}

use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

use tau_nakayama::combinatorics::{ordered_partitions_count_bruteforce, restricted_fubini, restricted_stirling};
use tau_nakayama::egf::TruncatedEgf;
use tau_nakayama::enumeration::subcategories::count_by_subcategories;
use tau_nakayama::enumeration::{count_shape, count_shape_naive, factorial, Counter};
use tau_nakayama::nakayama::{lattice_l, lattice_linv, LatticePoint};
use tau_nakayama::nakayama::oracle::hom_dim_oracle;
use tau_nakayama::nakayama::{
    bongartz, ext1_dim, hom_dim, hom_nonzero, indecomposables, is_tau_rigid, tau, AlgebraId, Indecomposable,
};
use tau_nakayama::perpendicular::{j_category, j_subcategory, CategoryShape};
use tau_nakayama::Error;

fn algebra(max_n: usize) -> impl Strategy<Value = AlgebraId> {
    (1..=max_n, any::<bool>(), 1usize..=8).prop_map(|(n, cyclic, t)| {
        if cyclic {
            AlgebraId::lambda(n, t.max(2))
        } else {
            AlgebraId::gamma(n, t.min(n))
        }
    })
}

fn algebra_and_module(max_n: usize) -> impl Strategy<Value = (AlgebraId, Indecomposable)> {
    algebra(max_n).prop_flat_map(|a| {
        let ms = indecomposables(&a);
        (Just(a), proptest::sample::select(ms))
    })
}

fn family(max_n: usize) -> impl Strategy<Value = AlgebraId> {
    (2..=max_n, 0..4).prop_map(|(n, f)| match f {
        0 => AlgebraId::gamma(n, 2),
        1 => AlgebraId::lambda(n, 2),
        2 => AlgebraId::lambda(n, n),
        _ => AlgebraId::gamma(n.max(3), n.max(3) - 1),
    })
}

fn series(order: usize) -> impl Strategy<Value = TruncatedEgf> {
    proptest::collection::vec((-20i64..=20, 1i64..=6), order + 1).prop_map(|v| {
        TruncatedEgf::from_coeffs(
            v.into_iter()
                .map(|(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_formula_matches_solver((a, m) in algebra_and_module(5), pick in any::<proptest::sample::Index>()) {
        let ms = indecomposables(&a);
        let n = ms[pick.index(ms.len())];
        let o = hom_dim_oracle(&a, &m, &n);
        prop_assert_eq!(hom_dim(&a, &m, &n), o);
        prop_assert_eq!(hom_nonzero(&a, &m, &n), o > 0);
    }

    #[test]
    fn ext_needs_hom_into_tau((a, m) in algebra_and_module(6), pick in any::<proptest::sample::Index>()) {
        let ms = indecomposables(&a);
        let n = ms[pick.index(ms.len())];
        let into_tau = tau(&a, &m).is_some_and(|tm| hom_nonzero(&a, &n, &tm));
        if !into_tau {
            prop_assert_eq!(ext1_dim(&a, &m, &n), 0);
        }
    }

    #[test]
    fn tau_keeps_length((a, m) in algebra_and_module(8)) {
        match tau(&a, &m) {
            None => prop_assert!(a.is_projective(&m)),
            Some(tm) => {
                prop_assert_eq!(tm.len, m.len);
                prop_assert!(a.contains(&tm));
            }
        }
    }

    #[test]
    fn bongartz_is_tau_tilting((a, m) in algebra_and_module(6)) {
        prop_assume!(is_tau_rigid(&a, &m));
        let b = bongartz(&a, &m).unwrap();
        prop_assert_eq!(b.len(), a.n);
        prop_assert!(b.contains(&m));
    }

    #[test]
    fn j_category_drops_rank_by_one((a, m) in family(7).prop_flat_map(|a| {
        let ms = indecomposables(&a);
        (Just(a), proptest::sample::select(ms))
    })) {
        let j = j_category(&a, &m).unwrap();
        prop_assert_eq!(j.rank(), a.n - 1);
        let sub = j_subcategory(&a, &m);
        let expected: usize = j.components().iter().map(|c| indecomposables(c).len()).sum();
        prop_assert_eq!(sub.len(), expected);
    }

    #[test]
    fn lattice_round_trip(n in 1usize..=8, t in 2usize..=9, top in 1usize..=8, len in 1usize..=9) {
        let a = AlgebraId::lambda(n, t);
        let m = Indecomposable::new(((top - 1) % n) + 1, ((len - 1) % t) + 1);
        let p = lattice_l(&a, &m).unwrap();
        prop_assert_eq!(lattice_linv(&a, &p).unwrap(), m);
        let shifted = LatticePoint::new(p.a + n as i64 * 3, p.b);
        prop_assert_eq!(lattice_linv(&a, &shifted).unwrap(), m);
    }

    #[test]
    fn lattice_rejects_linear(n in 1usize..=6) {
        let a = AlgebraId::gamma(n, n);
        prop_assert!(matches!(
            lattice_l(&a, &Indecomposable::new(1, 1)),
            Err(Error::NotCyclic(_))
        ));
    }

    #[test]
    fn stirling_sums_to_fubini(n in 0usize..=14, m in 1usize..=4) {
        let s: BigUint = (0..=n).map(|k| factorial(k) * restricted_stirling(n, k, m)).sum();
        prop_assert_eq!(s, restricted_fubini(n, m));
    }

    #[test]
    fn fubini_matches_enumeration(n in 0usize..=7, m in 1usize..=3) {
        prop_assert_eq!(restricted_fubini(n, m), ordered_partitions_count_bruteforce(n, m));
    }

    #[test]
    fn shape_count_interleaves(parts in proptest::collection::vec(family(4), 1..=2)) {
        prop_assume!(parts.iter().map(|a| a.n).sum::<usize>() <= 6);
        let s = CategoryShape::new(parts);
        prop_assert_eq!(count_shape(&s).unwrap(), count_shape_naive(&s).unwrap());
    }

    #[test]
    fn memo_does_not_change_counts(a in family(9)) {
        prop_assert_eq!(
            Counter::new().count_algebra(&a).unwrap(),
            Counter::without_memo().count_algebra(&a).unwrap()
        );
    }

    #[test]
    fn series_ring_laws(f in series(6), g in series(6), h in series(6)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g.truncate(5)) + &(&f.truncate(5) * &g.derivative()));
    }

    #[test]
    fn series_inverse(f in series(6)) {
        prop_assume!(!num_traits::Zero::is_zero(f.coeff(0)));
        let inv = f.inverse().unwrap();
        prop_assert_eq!(&f * &inv, TruncatedEgf::one(6));
    }

    #[test]
    fn series_exp_of_sum(f in series(5), g in series(5)) {
        let zero = BigRational::from_integer(0.into());
        let mut fc = f.coeffs().to_vec();
        fc[0] = zero.clone();
        let mut gc = g.coeffs().to_vec();
        gc[0] = zero;
        let (f, g) = (TruncatedEgf::from_coeffs(fc), TruncatedEgf::from_coeffs(gc));
        prop_assert_eq!((&f + &g).exp().unwrap(), &f.exp().unwrap() * &g.exp().unwrap());
    }
}

#[test]
fn subcategory_recursion_agrees_with_counter() {
    let c = Counter::new();
    for n in 1..=5 {
        for a in [
            AlgebraId::gamma(n, 2.min(n)),
            AlgebraId::lambda(n, 2),
            AlgebraId::lambda(n, n),
            AlgebraId::gamma(n, (n - 1).max(1)),
        ] {
            assert_eq!(c.count_algebra(&a).unwrap(), count_by_subcategories(&a).unwrap(), "{a}");
        }
    }
}
